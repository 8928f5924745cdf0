import json

from pydantic import BaseModel, Field, computed_field, field_validator
from typing import Any, Dict, List, Optional, Tuple


# --- Document Schemas ---
class DecompositionDocument(BaseModel):
    """
    Wire form of a decomposition: the host is K_n minus `removed_edges`.

    Validation normalizes everything (pairs smaller-first and sorted, paths in
    their smaller orientation and sorted) so parse -> dump is byte-identical.
    """

    n: int = Field(ge=1)
    removed_edges: List[Tuple[int, int]] = Field(default_factory=list)
    paths: List[List[int]] = Field(default_factory=list)
    metadata: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("removed_edges")
    @classmethod
    def _normalize_pairs(cls, pairs: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
        normalized = set()
        for a, b in pairs:
            if a == b:
                raise ValueError(f"removed edge {a}-{b} is a loop")
            normalized.add((a, b) if a < b else (b, a))
        return sorted(normalized)

    @field_validator("paths")
    @classmethod
    def _normalize_paths(cls, paths: List[List[int]]) -> List[List[int]]:
        normalized = []
        for p in paths:
            if len(p) < 2:
                raise ValueError(f"path {p} has fewer than two vertices")
            normalized.append(min(list(p), list(reversed(p))))
        return sorted(normalized)


# --- Report Schemas ---
class VerificationReport(BaseModel):
    n: int
    path_count: int
    bound: int
    paths_valid: bool
    invalid_path: Optional[List[int]] = None
    invalid_reason: Optional[str] = None
    edges_disjoint: bool
    duplicate_edge: Optional[Tuple[int, int]] = None
    covers_host: bool
    uncovered_edge: Optional[Tuple[int, int]] = None
    within_bound: bool

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return (
            self.paths_valid
            and self.edges_disjoint
            and self.covers_host
            and self.within_bound
        )

    def summary(self) -> str:
        """
        Human readable report, one property per line.
        """

        def mark(ok: bool) -> str:
            return "ok  " if ok else "FAIL"

        lines = [
            f"[{mark(self.paths_valid)}] simple paths in host"
            + ("" if self.paths_valid else f": {self.invalid_path} ({self.invalid_reason})"),
            f"[{mark(self.edges_disjoint)}] edge sets disjoint"
            + ("" if self.edges_disjoint else f": edge {self.duplicate_edge} repeated"),
            f"[{mark(self.covers_host)}] host edges covered"
            + ("" if self.covers_host else f": edge {self.uncovered_edge} uncovered"),
            f"[{mark(self.within_bound)}] {self.path_count} paths, bound {self.bound}",
            "PASS" if self.passed else "FAIL",
        ]
        return "\n".join(lines)


# --- Request Schemas ---
class TrimRequest(BaseModel):
    document: DecompositionDocument
    removals: List[Tuple[int, int]]


class FeasibleRequest(BaseModel):
    n: int = Field(ge=1)
    target: List[Tuple[int, int]] = Field(default_factory=list)


# --- Response Schemas ---
class FeasibleResponse(BaseModel):
    feasible: bool
    witness: Optional[List[Tuple[int, int]]] = None
    document: Optional[DecompositionDocument] = None


class CensusClass(BaseModel):
    """
    One isomorphism class as stored in the census tables.
    """

    position: int
    fingerprint: List[List[int]]
    labeled_count: int
    automorphisms: int
    path_lengths: List[int]

    @field_validator("fingerprint", "path_lengths", mode="before")
    @classmethod
    def _decode_json_text(cls, value: Any) -> Any:
        # the census tables keep these columns as JSON text
        return json.loads(value) if isinstance(value, str) else value

    class Config:
        from_attributes = True


class CensusSummary(BaseModel):
    n: int
    class_count: int
    labeled_total: int
    classes: List[CensusClass] = []

    class Config:
        from_attributes = True
