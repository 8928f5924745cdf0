from sqlalchemy import BigInteger, Column, DateTime, ForeignKey, Integer, Text, func
from sqlalchemy.orm import relationship

from app.database.connection import Base


class CensusRun(Base):
    """
    K_n の分解列挙の実行結果
    クラス数とラベル付き分解の総数を保存
    """

    __tablename__ = "census_runs"

    id = Column(Integer, primary_key=True, index=True)
    n = Column(Integer, unique=True, index=True, nullable=False)
    class_count = Column(Integer, nullable=False)
    labeled_total = Column(BigInteger, nullable=False)  # sum of n!/|Aut|
    created_at = Column(DateTime, server_default=func.now())

    classes = relationship(
        "CensusClass",
        back_populates="run",
        order_by="CensusClass.position",
        cascade="all, delete-orphan",
    )


class CensusClass(Base):
    """
    同型類ひとつ分の情報
    fingerprint と path_lengths は JSON 文字列で保存
    """

    __tablename__ = "census_classes"

    id = Column(Integer, primary_key=True, index=True)
    run_id = Column(Integer, ForeignKey("census_runs.id"), nullable=False)
    position = Column(Integer, nullable=False)  # fingerprint order
    fingerprint = Column(Text, nullable=False)
    labeled_count = Column(BigInteger, nullable=False)
    automorphisms = Column(Integer, nullable=False)
    path_lengths = Column(Text, nullable=False)

    run = relationship("CensusRun", back_populates="classes")
