from fastapi import APIRouter, Depends, HTTPException, status
from sqlalchemy.orm import Session

from app.database.connection import get_db
from app.exceptions import InvalidParameterError
from app.schemas import decomposition_schema
from app.services.census_service import CensusService

router = APIRouter(
    prefix="/census",
    tags=["census"],
)


@router.get(
    "/{n}",
    response_model=decomposition_schema.CensusSummary,
    summary="K_n の最小パス分解の同型類一覧",
)
def get_census(n: int, budget: bool = False, db: Session = Depends(get_db)):
    """
    保存済みの結果があればそれを返し、なければ列挙して保存します。
    - `budget`: 通常の上限を超えて GALLAI_ENUM_BUDGET_CAP まで許可します。
    """
    service = CensusService(db)
    try:
        return service.get_or_compute(n, budget=budget)
    except InvalidParameterError as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))
