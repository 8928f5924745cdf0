"""
Value types for labeled graphs and their path decompositions.

Vertices are plain 1-based integers. Every type here is immutable once built,
so instances can be shared freely between threads and used as dict keys.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Iterable, List, Mapping, Optional, Tuple

from app.exceptions import InvalidParameterError

Vertex = int


class Edge(tuple):
    """
    Unordered pair of distinct vertices, stored smaller id first.
    """

    __slots__ = ()

    def __new__(cls, a: Vertex, b: Vertex) -> "Edge":
        if a == b:
            raise InvalidParameterError(f"edge {a}-{b} is a loop")
        if a < 1 or b < 1:
            raise InvalidParameterError(f"edge {a}-{b} has a vertex below 1")
        return super().__new__(cls, (a, b) if a < b else (b, a))

    def __getnewargs__(self):
        return (self[0], self[1])

    def other(self, vertex: Vertex) -> Vertex:
        if vertex == self[0]:
            return self[1]
        if vertex == self[1]:
            return self[0]
        raise InvalidParameterError(f"{vertex} is not an endpoint of {self[0]}-{self[1]}")

    def __repr__(self) -> str:
        return f"Edge({self[0]}, {self[1]})"


class Path(tuple):
    """
    Vertex sequence of one decomposition element.

    Of a sequence and its reverse the lexicographically smaller one is kept, so
    a path and its reversal compare and hash equal. Simplicity and the
    vertex range are not enforced here: the verifier reports them.
    """

    __slots__ = ()

    def __new__(cls, vertices: Iterable[Vertex]) -> "Path":
        seq = tuple(vertices)
        if len(seq) < 2:
            raise InvalidParameterError(f"path {seq} has fewer than two vertices")
        rev = seq[::-1]
        return super().__new__(cls, seq if seq <= rev else rev)

    def __getnewargs__(self):
        return (tuple(self),)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(Edge(a, b) for a, b in zip(self, self[1:]))

    @property
    def end_edges(self) -> Tuple[Edge, ...]:
        first, last = Edge(self[0], self[1]), Edge(self[-2], self[-1])
        return (first,) if first == last else (first, last)

    @property
    def is_simple(self) -> bool:
        return len(set(self)) == len(self)

    def __repr__(self) -> str:
        return "Path(" + "-".join(str(v) for v in self) + ")"


def _relabel_vertex(mapping: Mapping[Vertex, Vertex], vertex: Vertex) -> Vertex:
    return mapping.get(vertex, vertex)


@dataclass(frozen=True)
class LabeledGraph:
    """
    Simple undirected graph on the vertices 1..n.
    """

    n: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameterError(f"vertex count {self.n} is negative")
        edges = frozenset(Edge(*e) for e in self.edges)
        for e in edges:
            if e[1] > self.n:
                raise InvalidParameterError(f"edge {e[0]}-{e[1]} leaves 1..{self.n}")
        object.__setattr__(self, "edges", edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, a: Vertex, b: Vertex) -> bool:
        return a != b and Edge(a, b) in self.edges

    def degree(self, vertex: Vertex) -> int:
        return sum(1 for e in self.edges if vertex in e)

    def without(self, edges: Iterable[Edge]) -> "LabeledGraph":
        return LabeledGraph(self.n, self.edges - frozenset(Edge(*e) for e in edges))

    def with_edges(self, edges: Iterable[Edge], n: Optional[int] = None) -> "LabeledGraph":
        return LabeledGraph(n or self.n, self.edges | frozenset(Edge(*e) for e in edges))

    def relabeled(self, mapping: Mapping[Vertex, Vertex]) -> "LabeledGraph":
        return LabeledGraph(
            self.n,
            frozenset(
                Edge(_relabel_vertex(mapping, a), _relabel_vertex(mapping, b))
                for a, b in self.edges
            ),
        )


@dataclass(frozen=True)
class PathDecomposition:
    """
    Collection of paths claimed to partition the edges of `host`.

    Paths are kept sorted, so two decompositions with the same path set are
    equal regardless of the order they were listed in.
    """

    host: LabeledGraph
    paths: Tuple[Path, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(sorted(Path(p) for p in self.paths)))

    @property
    def n(self) -> int:
        return self.host.n

    def covered_edges(self) -> List[Edge]:
        return [e for p in self.paths for e in p.edges]

    def path_containing(self, edge: Edge) -> Optional[Path]:
        edge = Edge(*edge)
        for p in self.paths:
            if edge in p.edges:
                return p
        return None

    def relabeled(self, mapping: Mapping[Vertex, Vertex]) -> "PathDecomposition":
        return PathDecomposition(
            self.host.relabeled(mapping),
            tuple(Path(_relabel_vertex(mapping, v) for v in p) for p in self.paths),
        )


@dataclass(frozen=True)
class Rotation:
    """
    Cyclic shift of the labels 1..n by `shift` positions.
    """

    n: int
    shift: int

    def __post_init__(self):
        if self.n < 2 or self.n % 2:
            raise InvalidParameterError(f"rotation needs an even vertex count, got {self.n}")
        if not 0 <= self.shift < self.n // 2:
            raise InvalidParameterError(f"shift {self.shift} outside 0..{self.n // 2 - 1}")

    def apply(self, vertex: Vertex) -> Vertex:
        return (vertex - 1 + self.shift) % self.n + 1

    def apply_path(self, vertices: Iterable[Vertex]) -> Tuple[Vertex, ...]:
        return tuple(self.apply(v) for v in vertices)


@dataclass(frozen=True)
class Fork:
    """
    Two consecutive edges of one path meeting at `center`; `base` joins their outer ends.
    """

    center: Vertex
    arms: Tuple[Edge, Edge]
    base: Edge

    @classmethod
    def at(cls, left: Vertex, center: Vertex, right: Vertex) -> "Fork":
        return cls(center, (Edge(left, center), Edge(center, right)), Edge(left, right))


class RemovalKind(str, Enum):
    STAR = "star"
    TADPOLE = "tadpole"
    FREE_FORM = "free-form"


@dataclass(frozen=True)
class RemovalRecord:
    """
    The subgraph deleted from K_n, kept for audits and round-trip checks.
    """

    kind: RemovalKind
    removed_edges: FrozenSet[Edge]
    center: Optional[Vertex] = None
    cycle_length: Optional[int] = None
    fork: Optional[Fork] = None

    def __post_init__(self):
        object.__setattr__(
            self, "removed_edges", frozenset(Edge(*e) for e in self.removed_edges)
        )

    def relabeled(self, mapping: Mapping[Vertex, Vertex]) -> "RemovalRecord":
        fork = None
        if self.fork is not None:
            a, b = (self.fork.arms[0].other(self.fork.center), self.fork.arms[1].other(self.fork.center))
            fork = Fork.at(
                _relabel_vertex(mapping, a),
                _relabel_vertex(mapping, self.fork.center),
                _relabel_vertex(mapping, b),
            )
        return RemovalRecord(
            kind=self.kind,
            removed_edges=frozenset(
                Edge(_relabel_vertex(mapping, a), _relabel_vertex(mapping, b))
                for a, b in self.removed_edges
            ),
            center=None if self.center is None else _relabel_vertex(mapping, self.center),
            cycle_length=self.cycle_length,
            fork=fork,
        )


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """
    Relabeling-invariant fingerprint: the least sorted, orientation-normalized
    path list over all vertex permutations.
    """

    fingerprint: Tuple[Tuple[Vertex, ...], ...]

    @property
    def path_lengths(self) -> Tuple[int, ...]:
        return tuple(len(p) - 1 for p in self.fingerprint)


@dataclass(frozen=True)
class IsoClass:
    canonical: CanonicalForm
    representative: PathDecomposition
    labeled_count: int
    automorphisms: int
