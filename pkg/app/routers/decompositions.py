from fastapi import APIRouter, HTTPException, status

from app.exceptions import DocumentError, InvalidParameterError
from app.models.graph_model import RemovalKind
from app.schemas import decomposition_schema
from app.services.constructions import construct, construction_name
from app.services.graph_core import verify_decomposition
from app.services.removal import (
    path_ends_feasible,
    remove_star,
    remove_tadpole,
    trim_path_ends,
    trim_record,
)
from app.services.serialization import from_document, to_document

router = APIRouter(
    prefix="/decompositions",
    tags=["decompositions"],
)


def _bad_request(exc: InvalidParameterError) -> HTTPException:
    return HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc))


def _unprocessable(exc: DocumentError) -> HTTPException:
    return HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(exc))


# --- API Endpoints ---


@router.get(
    "/construct/{n}",
    response_model=decomposition_schema.DecompositionDocument,
    summary="K_n を floor((n+1)/2) 本のパスに分解",
)
async def construct_decomposition(n: int):
    """
    n の偶奇に応じた構成で K_n のパス分解を返します。
    - n >= 2 が必要です。
    """
    try:
        d = construct(n)
    except InvalidParameterError as exc:
        raise _bad_request(exc)
    return to_document(d, construction=construction_name(n))


@router.post(
    "/verify",
    response_model=decomposition_schema.VerificationReport,
    summary="パス分解を検証",
)
async def verify(document: decomposition_schema.DecompositionDocument):
    """
    単純パスであること、辺の重複がないこと、ホストの辺を全て覆うこと、本数が上限以内であることを確認します。
    - 検証に失敗しても 200 で `passed=false` を返します。
    """
    try:
        d = from_document(document)
    except DocumentError as exc:
        raise _unprocessable(exc)
    return verify_decomposition(d)


@router.get(
    "/remove/{kind}",
    response_model=decomposition_schema.DecompositionDocument,
    summary="K_n から星またはオタマジャクシを取り除いた分解",
)
async def remove(kind: RemovalKind, n: int, m: int):
    """
    - `star`: 頂点 n を中心とする m 本の辺の星
    - `tadpole`: 長さ m の閉路 1..m に尾を一本付けた T_{m,1}
    """
    try:
        if kind == RemovalKind.STAR:
            result = remove_star(n, m)
        elif kind == RemovalKind.TADPOLE:
            result = remove_tadpole(n, m)
        else:
            raise InvalidParameterError(f"removal kind {kind.value} has no construction")
    except InvalidParameterError as exc:
        raise _bad_request(exc)
    return to_document(result.decomposition, record=result.record)


@router.post(
    "/trim",
    response_model=decomposition_schema.DecompositionDocument,
    summary="パスの端の辺を順に取り除く",
)
async def trim(request: decomposition_schema.TrimRequest):
    """
    `removals` の各辺は、その順番が来た時点でいずれかのパスの端の辺でなければなりません。
    """
    try:
        _, d = trim_path_ends(from_document(request.document), request.removals)
    except DocumentError as exc:
        raise _unprocessable(exc)
    except InvalidParameterError as exc:
        raise _bad_request(exc)
    return to_document(d, record=trim_record(request.removals))


@router.post(
    "/feasible",
    response_model=decomposition_schema.FeasibleResponse,
    summary="辺集合をパスの端から取り除ける分解を探す",
)
def feasible(request: decomposition_schema.FeasibleRequest):
    """
    見つかった場合は取り除く順番と、そのときの K_n の分解を返します。
    - n は列挙の上限 (GALLAI_ENUM_CAP) 以下である必要があります。
    """
    try:
        witness = path_ends_feasible(request.n, request.target)
    except InvalidParameterError as exc:
        raise _bad_request(exc)
    if witness is None:
        return decomposition_schema.FeasibleResponse(feasible=False)
    return decomposition_schema.FeasibleResponse(
        feasible=True,
        witness=[tuple(e) for e in witness.removals],
        document=to_document(witness.decomposition),
    )
