"""
Graph, path and decomposition basics plus the independent verifier.

`verify_decomposition` is the postcondition oracle every construction and
surgery step in this package checks itself against.
"""

import logging
from typing import Dict, Iterable, Mapping, Optional, Set

import networkx as nx

from app.exceptions import InvalidParameterError
from app.models.graph_model import Edge, LabeledGraph, Path, PathDecomposition, Vertex
from app.schemas.decomposition_schema import VerificationReport

logger = logging.getLogger(__name__)


def gallai_bound(n: int) -> int:
    """
    Conjectured maximum number of paths needed for a connected n-vertex graph.
    """
    if n < 1:
        raise InvalidParameterError(f"gallai_bound needs n >= 1, got {n}")
    return (n + 1) // 2


def complete_graph(n: int) -> LabeledGraph:
    if n < 1:
        raise InvalidParameterError(f"complete_graph needs n >= 1, got {n}")
    return LabeledGraph(
        n,
        frozenset(Edge(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)),
    )


def to_networkx(g: LabeledGraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(g.vertices)
    graph.add_edges_from(g.edges)
    return graph


def is_connected(g: LabeledGraph) -> bool:
    """
    True iff all n vertices lie in one component (isolated vertices count).
    """
    if g.n < 1:
        raise InvalidParameterError("is_connected needs at least one vertex")
    return nx.is_connected(to_networkx(g))


def is_complete(g: LabeledGraph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def _first_path_defect(p: Path, host: LabeledGraph) -> Optional[str]:
    for v in p:
        if not 1 <= v <= host.n:
            return f"vertex {v} outside 1..{host.n}"
    if not p.is_simple:
        return "repeated vertex"
    for a, b in zip(p, p[1:]):
        if not host.has_edge(a, b):
            return f"edge {min(a, b)}-{max(a, b)} not in host"
    return None


def verify_decomposition(d: PathDecomposition) -> VerificationReport:
    """
    Check that `d` partitions its host's edges into simple paths within the bound.

    Invalid input yields a failing report, never an exception. On failure the
    first offending path or edge (in sorted order) is named.
    """
    host = d.host
    invalid_path, invalid_reason = None, None
    for p in d.paths:
        reason = _first_path_defect(p, host)
        if reason is not None:
            invalid_path, invalid_reason = list(p), reason
            break

    seen: Set[Edge] = set()
    duplicate = None
    for p in d.paths:
        for a, b in zip(p, p[1:]):
            if a == b or min(a, b) < 1:
                continue
            e = Edge(a, b)
            if e in seen and duplicate is None:
                duplicate = e
            seen.add(e)

    uncovered = min(host.edges - seen, default=None)
    bound = gallai_bound(host.n) if host.n >= 1 else 0
    report = VerificationReport(
        n=host.n,
        path_count=len(d.paths),
        bound=bound,
        paths_valid=invalid_path is None,
        invalid_path=invalid_path,
        invalid_reason=invalid_reason,
        edges_disjoint=duplicate is None,
        duplicate_edge=duplicate,
        covers_host=uncovered is None,
        uncovered_edge=uncovered,
        within_bound=len(d.paths) <= bound,
    )
    if not report.passed:
        logger.debug("verification failed for n=%d:\n%s", host.n, report.summary())
    return report


def _check_bijection(mapping: Mapping[Vertex, Vertex], n: int) -> Dict[Vertex, Vertex]:
    full = {v: mapping.get(v, v) for v in range(1, n + 1)}
    if sorted(full.values()) != list(range(1, n + 1)):
        raise InvalidParameterError(f"relabeling is not a permutation of 1..{n}")
    return full


def relabel_graph(g: LabeledGraph, mapping: Mapping[Vertex, Vertex]) -> LabeledGraph:
    return g.relabeled(_check_bijection(mapping, g.n))


def relabel(d: PathDecomposition, mapping: Mapping[Vertex, Vertex]) -> PathDecomposition:
    """
    Apply a vertex permutation (given as a partial map, identity elsewhere).
    """
    return d.relabeled(_check_bijection(mapping, d.n))


def host_from_removed(n: int, removed: Iterable[Edge]) -> LabeledGraph:
    removed = [Edge(*e) for e in removed]
    for e in removed:
        if e[1] > n:
            raise InvalidParameterError(f"removed edge {e[0]}-{e[1]} outside K_{n}")
    return complete_graph(n).without(removed)
