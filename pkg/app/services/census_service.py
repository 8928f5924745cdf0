import json
import logging
from typing import List, Optional, Sequence

import pandas as pd
from sqlalchemy.orm import Session

from app.models import census_model
from app.models.graph_model import IsoClass
from app.services.enumeration import enumerate_decompositions

logger = logging.getLogger(__name__)

FRAME_COLUMNS = ["position", "fingerprint", "path_lengths", "automorphisms", "labeled_count"]


class CensusService:
    def __init__(self, db: Session):
        self.db = db

    def get_run(self, n: int) -> Optional[census_model.CensusRun]:
        """
        保存済みの列挙結果を n で取得
        """
        return (
            self.db.query(census_model.CensusRun)
            .filter(census_model.CensusRun.n == n)
            .first()
        )

    def save_census(self, n: int, classes: Sequence[IsoClass]) -> census_model.CensusRun:
        """
        列挙結果を保存（同じ n の古い結果は置き換える）
        """
        existing = self.get_run(n)
        if existing:
            self.db.delete(existing)
            self.db.commit()

        run = census_model.CensusRun(
            n=n,
            class_count=len(classes),
            labeled_total=sum(c.labeled_count for c in classes),
        )
        run.classes = [
            census_model.CensusClass(
                position=position,
                fingerprint=json.dumps([list(p) for p in c.canonical.fingerprint]),
                labeled_count=c.labeled_count,
                automorphisms=c.automorphisms,
                path_lengths=json.dumps(list(c.canonical.path_lengths)),
            )
            for position, c in enumerate(classes)
        ]
        self.db.add(run)
        self.db.commit()
        self.db.refresh(run)
        return run

    def get_or_compute(self, n: int, budget: bool = False) -> census_model.CensusRun:
        """
        保存済みならそれを返し、なければ列挙して保存する
        """
        run = self.get_run(n)
        if run:
            logger.info("census for n=%d served from the store", n)
            return run
        logger.info("census for n=%d not stored; enumerating", n)
        return self.save_census(n, enumerate_decompositions(n, budget=budget))

    @staticmethod
    def census_frame(classes: Sequence[IsoClass]) -> pd.DataFrame:
        """
        One row per class, in fingerprint order.
        """
        rows: List[dict] = [
            {
                "position": position,
                "fingerprint": " | ".join("-".join(map(str, p)) for p in c.canonical.fingerprint),
                "path_lengths": " ".join(map(str, c.canonical.path_lengths)),
                "automorphisms": c.automorphisms,
                "labeled_count": c.labeled_count,
            }
            for position, c in enumerate(classes)
        ]
        return pd.DataFrame(rows, columns=FRAME_COLUMNS)
