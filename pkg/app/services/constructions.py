"""
Explicit decompositions of K_n into floor((n+1)/2) paths.

Even n uses the Walecki zigzag and its rotations. Odd n = 2k+1 starts from the
zigzag decomposition of K_2k, reroutes consecutive pairs {i, i+1} through the
new vertex 2k+1 and closes with one extra path; which pairs are rerouted and
which are detached depends on the parity of k.
"""

import logging
from typing import Dict, Iterable, List, Sequence, Tuple

from app.exceptions import ConstructionError, InvalidParameterError
from app.models.graph_model import Edge, LabeledGraph, Path, PathDecomposition, Rotation, Vertex
from app.services.graph_core import complete_graph, gallai_bound, verify_decomposition

logger = logging.getLogger(__name__)


def zigzag(k: int) -> Tuple[Vertex, ...]:
    """
    Base Hamiltonian path 1, 2, 2k, 3, 2k-1, 4, ... on K_2k.
    """
    seq = [1, 2]
    for i in range(1, k):
        seq.append(2 * k + 1 - i)
        seq.append(i + 2)
    return tuple(seq)


def _self_verify(d: PathDecomposition, label: str) -> PathDecomposition:
    report = verify_decomposition(d)
    if not report.passed:
        raise ConstructionError(f"{label} failed self-verification:\n{report.summary()}")
    return d


def walecki_even(k: int) -> PathDecomposition:
    """
    k Hamiltonian paths partitioning K_2k; path t is the zigzag rotated by t.
    """
    if k < 1:
        raise InvalidParameterError(f"walecki_even needs k >= 1, got {k}")
    base = zigzag(k)
    paths = [Path(Rotation(2 * k, t).apply_path(base)) for t in range(k)]
    return _self_verify(PathDecomposition(complete_graph(2 * k), paths), f"walecki_even({k})")


def _locate(paths: Sequence[Sequence[Vertex]], edge: Edge) -> Tuple[int, int]:
    """
    Index of the path holding `edge` and the position of its first endpoint there.
    """
    for idx, p in enumerate(paths):
        for pos in range(len(p) - 1):
            if Edge(p[pos], p[pos + 1]) == edge:
                return idx, pos
    return -1, -1


def reroute(d: PathDecomposition, e: Edge, m: Vertex) -> PathDecomposition:
    """
    Replace edge e = {i, j} on its path by the detour i - m - j.

    The host loses e and gains {i, m} and {j, m}; it grows to include m if needed.
    """
    e = Edge(*e)
    paths = [list(p) for p in d.paths]
    idx, pos = _locate(paths, e)
    if idx < 0:
        raise InvalidParameterError(f"edge {e[0]}-{e[1]} is not on any path")
    if m in paths[idx]:
        raise InvalidParameterError(f"vertex {m} already lies on the path of {e[0]}-{e[1]}")
    detour = (Edge(e[0], m), Edge(e[1], m))
    covered = set(d.covered_edges())
    for f in detour:
        if f in covered:
            raise InvalidParameterError(f"detour edge {f[0]}-{f[1]} is already covered")
    paths[idx].insert(pos + 1, m)
    host = LabeledGraph(max(d.n, m), (d.host.edges - {e}) | frozenset(detour))
    logger.debug("rerouted %d-%d through %d", e[0], e[1], m)
    return PathDecomposition(host, paths)


def detach_end_edge(d: PathDecomposition, e: Edge, label: str = "detach") -> PathDecomposition:
    """
    Remove an edge that must sit at an end of its path; the host loses it too.
    """
    e = Edge(*e)
    paths = [list(p) for p in d.paths]
    idx, pos = _locate(paths, e)
    if idx < 0:
        raise ConstructionError(f"{label}: edge {e[0]}-{e[1]} is not on any path")
    p = paths[idx]
    if pos == 0:
        rest = p[1:]
    elif pos == len(p) - 2:
        rest = p[:-1]
    else:
        raise ConstructionError(
            f"{label}: edge {e[0]}-{e[1]} is interior to path {'-'.join(map(str, p))}"
        )
    if len(rest) >= 2:
        paths[idx] = rest
    else:
        del paths[idx]
    logger.debug("%s: removed end edge %d-%d", label, e[0], e[1])
    return PathDecomposition(d.host.without([e]), paths)


def _reroute_all(d: PathDecomposition, edges: Iterable[Edge], m: Vertex, label: str) -> PathDecomposition:
    edges = list(edges)
    owners: Dict[int, Edge] = {}
    for e in edges:
        idx, _ = _locate(d.paths, e)
        if idx in owners:
            raise ConstructionError(
                f"{label}: {owners[idx]} and {e} lie on the same path; "
                f"vertex {m} would be visited twice"
            )
        owners[idx] = e
    for e in edges:
        d = reroute(d, e, m)
    return d


def _with_path(d: PathDecomposition, vertices: List[Vertex]) -> PathDecomposition:
    new = Path(vertices)
    return PathDecomposition(d.host.with_edges(new.edges), tuple(d.paths) + (new,))


def odd_decomposition_odd_k(k: int) -> PathDecomposition:
    """
    k+1 paths partitioning K_2k+1 for odd k.
    """
    if k < 1 or k % 2 == 0:
        raise InvalidParameterError(f"odd_decomposition_odd_k needs odd k >= 1, got {k}")
    label = f"odd_decomposition_odd_k({k})"
    top = 2 * k + 1
    d = walecki_even(k)
    d = _reroute_all(d, [Edge(i, i + 1) for i in range(1, 2 * k, 2)], top, label)
    for i in range(2, 2 * k - 1, 2):
        d = detach_end_edge(d, Edge(i, i + 1), label)
    d = _with_path(d, list(range(1, 2 * k + 1)))
    return _self_verify(d, label)


def odd_decomposition_even_k(k: int) -> PathDecomposition:
    """
    k+1 paths partitioning K_2k+1 for even k.

    The closing path is 1, 2, ..., k+1, 2k+1, 2k, 2k-1, ..., k+2.
    """
    if k < 2 or k % 2:
        raise InvalidParameterError(f"odd_decomposition_even_k needs even k >= 2, got {k}")
    label = f"odd_decomposition_even_k({k})"
    top = 2 * k + 1
    rerouted = [Edge(i, i + 1) for i in range(1, k, 2)]
    rerouted += [Edge(i, i + 1) for i in range(k + 2, 2 * k - 1, 2)]
    d = _reroute_all(walecki_even(k), rerouted, top, label)

    closing = list(range(1, k + 2)) + [top] + list(range(2 * k, k + 1, -1))
    covered = set(d.covered_edges())
    for e in Path(closing).edges:
        if e in covered:
            d = detach_end_edge(d, e, label)
    d = _with_path(d, closing)
    return _self_verify(d, label)


def construct(n: int) -> PathDecomposition:
    """
    Decomposition of K_n into exactly floor((n+1)/2) paths.
    """
    if n < 2:
        raise InvalidParameterError(f"construct needs n >= 2, got {n}")
    if n % 2 == 0:
        d = walecki_even(n // 2)
    elif (n // 2) % 2:
        d = odd_decomposition_odd_k(n // 2)
    else:
        d = odd_decomposition_even_k(n // 2)
    if len(d.paths) != gallai_bound(n):
        raise ConstructionError(f"construct({n}) produced {len(d.paths)} paths")
    return d


def construction_name(n: int) -> str:
    if n % 2 == 0:
        return "walecki_even"
    return "odd_decomposition_odd_k" if (n // 2) % 2 else "odd_decomposition_even_k"
