"""
Surgery on the constructed decompositions: delete a star or a tadpole T_{m,1}
from K_n, or trim arbitrary edges off path ends, keeping at most
floor((n+1)/2) paths.

All surgery goes through `Surgery`, which edits vertex lists in place and
checks every end-edge assumption as it is made.
"""

import itertools
import logging
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

from app import config
from app.exceptions import ConstructionError, InvalidParameterError, TrimError
from app.models.graph_model import (
    Edge,
    Fork,
    LabeledGraph,
    Path,
    PathDecomposition,
    RemovalKind,
    RemovalRecord,
    Vertex,
)
from app.services.constructions import construct, walecki_even
from app.services.enumeration import enumerate_decompositions
from app.services.graph_core import (
    complete_graph,
    gallai_bound,
    relabel,
    relabel_graph,
    verify_decomposition,
)

logger = logging.getLogger(__name__)


class RemovalResult(NamedTuple):
    host: LabeledGraph
    decomposition: PathDecomposition
    record: RemovalRecord

    def relabel(self, mapping: Dict[Vertex, Vertex]) -> "RemovalResult":
        """
        Move the removed subgraph elsewhere by a vertex permutation.
        """
        return RemovalResult(
            relabel_graph(self.host, mapping),
            relabel(self.decomposition, mapping),
            self.record.relabeled(mapping),
        )


class TrimWitness(NamedTuple):
    removals: List[Edge]
    decomposition: PathDecomposition


class Surgery:
    """
    Mutable working copy of a decomposition.

    Removed edges leave the host; moved edges (bridges) stay in it.
    """

    def __init__(self, d: PathDecomposition, label: str = "surgery"):
        self.n = d.n
        self.label = label
        self.paths: List[List[Vertex]] = [list(p) for p in d.paths]
        self.host_edges: Set[Edge] = set(d.host.edges)
        self.removed: List[Edge] = []

    def locate(self, edge: Edge) -> Tuple[int, int]:
        for idx, p in enumerate(self.paths):
            for pos in range(len(p) - 1):
                if Edge(p[pos], p[pos + 1]) == edge:
                    return idx, pos
        return -1, -1

    def is_end_edge(self, edge: Edge) -> bool:
        idx, pos = self.locate(Edge(*edge))
        return idx >= 0 and (pos == 0 or pos == len(self.paths[idx]) - 2)

    def _cut_end(self, edge: Edge) -> int:
        """
        Drop an end edge from its path and return the path's index (-1 if it vanished).
        """
        idx, pos = self.locate(edge)
        if idx < 0:
            raise ConstructionError(f"{self.label}: edge {edge[0]}-{edge[1]} is not on any path")
        p = self.paths[idx]
        if pos == 0:
            rest = p[1:]
        elif pos == len(p) - 2:
            rest = p[:-1]
        else:
            raise ConstructionError(
                f"{self.label}: edge {edge[0]}-{edge[1]} is interior to {'-'.join(map(str, p))}"
            )
        if len(rest) >= 2:
            self.paths[idx] = rest
            return idx
        del self.paths[idx]
        return -1

    def trim(self, edge: Edge) -> None:
        edge = Edge(*edge)
        self._cut_end(edge)
        self.host_edges.discard(edge)
        self.removed.append(edge)
        logger.debug("%s: trimmed end edge %d-%d", self.label, edge[0], edge[1])

    def remove_fork(
        self,
        left: Vertex,
        center: Vertex,
        right: Vertex,
        bridge: Optional[Edge] = None,
    ) -> Fork:
        """
        Delete the consecutive edges left-center-right and rejoin the two pieces.

        The bridge (by default the fork's base) must be an end edge of another
        path; it moves onto the cut path.
        """
        fork = Fork.at(left, center, right)
        bridge = fork.base if bridge is None else Edge(*bridge)
        target = -1
        for idx, p in enumerate(self.paths):
            for pos in range(1, len(p) - 1):
                if p[pos] == center and {p[pos - 1], p[pos + 1]} == {left, right}:
                    target, cut = idx, pos
        if target < 0:
            raise ConstructionError(
                f"{self.label}: no path runs {left}-{center}-{right} consecutively"
            )
        owner, _ = self.locate(bridge)
        if owner == target:
            raise ConstructionError(f"{self.label}: bridge {bridge} lies on the cut path")
        if not self.is_end_edge(bridge):
            raise ConstructionError(f"{self.label}: bridge {bridge} is not an end edge")

        p = self.paths[target]
        head, tail = p[:cut], p[cut + 1 :]
        merged = None
        for x, h in ((head[-1], head), (head[0], head[::-1])):
            for y, t in ((tail[0], tail), (tail[-1], tail[::-1])):
                if merged is None and Edge(x, y) == bridge:
                    merged = h + t
        if merged is None:
            raise ConstructionError(
                f"{self.label}: bridge {bridge} does not join the pieces of {'-'.join(map(str, p))}"
            )
        if self._cut_end(bridge) < 0 and owner < target:
            target -= 1
        self.paths[target] = merged
        for arm in fork.arms:
            self.host_edges.discard(arm)
            self.removed.append(arm)
        logger.debug(
            "%s: removed fork %d-%d-%d, bridged with %d-%d",
            self.label,
            left,
            center,
            right,
            bridge[0],
            bridge[1],
        )
        return fork

    def split(self, edge: Edge) -> None:
        """
        Delete an interior edge, cutting its path in two; needs slack under the bound.
        """
        edge = Edge(*edge)
        if self.is_end_edge(edge):
            self.trim(edge)
            return
        if len(self.paths) + 1 > gallai_bound(self.n):
            raise ConstructionError(f"{self.label}: splitting {edge} would exceed the bound")
        idx, pos = self.locate(edge)
        if idx < 0:
            raise ConstructionError(f"{self.label}: edge {edge[0]}-{edge[1]} is not on any path")
        p = self.paths[idx]
        self.paths[idx : idx + 1] = [p[: pos + 1], p[pos + 1 :]]
        self.host_edges.discard(edge)
        self.removed.append(edge)
        logger.debug("%s: split path at %d-%d", self.label, edge[0], edge[1])

    def result(self) -> PathDecomposition:
        return PathDecomposition(LabeledGraph(self.n, frozenset(self.host_edges)), self.paths)


def _finish(surgery: Surgery, record: RemovalRecord) -> RemovalResult:
    d = surgery.result()
    report = verify_decomposition(d)
    if not report.passed:
        raise ConstructionError(f"{surgery.label} failed self-verification:\n{report.summary()}")
    if d.host.edges | record.removed_edges != complete_graph(d.n).edges:
        raise ConstructionError(f"{surgery.label}: host and removed edges do not rebuild K_{d.n}")
    return RemovalResult(d.host, d, record)


# --- Path ends ---


def trim_path_ends(
    d: PathDecomposition, removals: Sequence[Tuple[int, int]]
) -> Tuple[LabeledGraph, PathDecomposition]:
    """
    Remove the listed edges in order; each must be an end edge when its turn comes.
    """
    surgery = Surgery(d, "trim")
    for index, raw in enumerate(removals):
        try:
            edge = Edge(*raw)
        except InvalidParameterError as exc:
            raise TrimError(index, tuple(raw), str(exc)) from exc
        idx, _ = surgery.locate(edge)
        if idx < 0:
            raise TrimError(index, edge, "edge is not on any path")
        if not surgery.is_end_edge(edge):
            raise TrimError(index, edge, "edge is not an end edge")
        surgery.trim(edge)
    result = surgery.result()
    return result.host, result


def trim_record(removals: Sequence[Tuple[int, int]]) -> RemovalRecord:
    return RemovalRecord(kind=RemovalKind.FREE_FORM, removed_edges=frozenset(Edge(*e) for e in removals))


def _greedy_witness(d: PathDecomposition, target: Set[Edge]) -> Optional[List[Edge]]:
    """
    Lexicographically least trim order of `target` against `d`, if one exists.

    An edge that is an end edge stays one until it is removed, so taking the
    smallest removable edge each time never loses a solution.
    """
    surgery = Surgery(d, "witness")
    remaining = sorted(target)
    order: List[Edge] = []
    while remaining:
        pick = next((e for e in remaining if surgery.is_end_edge(e)), None)
        if pick is None:
            return None
        surgery.trim(pick)
        remaining.remove(pick)
        order.append(pick)
    return order


def _positions(paths: Sequence[Path]) -> Dict[Edge, Tuple[int, int]]:
    return {e: (idx, pos) for idx, p in enumerate(paths) for pos, e in enumerate(p.edges)}


def _prefix_suffix(positions: Dict[Edge, Tuple[int, int]], lengths: List[int], target: Iterable[Edge]) -> bool:
    by_path: Dict[int, Set[int]] = {}
    for e in target:
        if e not in positions:
            return False
        idx, pos = positions[e]
        by_path.setdefault(idx, set()).add(pos)
    for idx, taken in by_path.items():
        head = 0
        while head in taken:
            head += 1
        rest = taken - set(range(head))
        if rest and min(rest) < lengths[idx] - len(rest):
            return False
    return True


def path_ends_removable(d: PathDecomposition, target: Iterable[Tuple[int, int]]) -> bool:
    """
    True iff on every path the target edges form a prefix plus a suffix.
    """
    target = [Edge(*e) for e in target]
    return _prefix_suffix(_positions(d.paths), [len(p) - 1 for p in d.paths], target)


def path_ends_feasible(
    n: int, target: Iterable[Tuple[int, int]], cap: Optional[int] = None
) -> Optional[TrimWitness]:
    """
    Find a decomposition of K_n from which `target` can be trimmed off path ends.

    construct(n) is tried first, then every relabeling of every enumerated class
    (classes in fingerprint order, permutations in lexicographic order). The
    witness is the lexicographically least trim order against the first
    decomposition that admits one. None means infeasible over that whole set.
    """
    cap = config.enumeration_cap() if cap is None else cap
    if n < 2:
        raise InvalidParameterError(f"path_ends_feasible needs n >= 2, got {n}")
    if n > cap:
        raise InvalidParameterError(f"n={n} is above the search cap {cap}")
    edges = set()
    for raw in target:
        e = Edge(*raw)
        if e[1] > n:
            raise InvalidParameterError(f"edge {e[0]}-{e[1]} is not in K_{n}")
        edges.add(e)

    base = construct(n)
    if path_ends_removable(base, edges):
        return TrimWitness(_greedy_witness(base, edges), base)

    vertices = list(range(1, n + 1))
    for iso in enumerate_decompositions(n, cap=cap):
        rep = iso.representative
        positions = _positions(rep.paths)
        lengths = [len(p) - 1 for p in rep.paths]
        for image in itertools.permutations(vertices):
            # image[v-1] is where v goes; test the preimage of the target against rep
            inverse = {w: v for v, w in zip(vertices, image)}
            pulled = [Edge(inverse[a], inverse[b]) for a, b in edges]
            if _prefix_suffix(positions, lengths, pulled):
                d = rep.relabeled(dict(zip(vertices, image)))
                logger.info("target trimmable from a relabeled class representative")
                return TrimWitness(_greedy_witness(d, edges), d)
    return None


# --- Stars ---


def _center_end_and_side(p: Sequence[Vertex], center: Vertex) -> Tuple[Edge, Edge]:
    if p[1] == center:
        return Edge(p[0], center), Edge(center, p[2])
    if p[-2] == center:
        return Edge(p[-1], center), Edge(center, p[-3])
    raise ConstructionError(f"vertex {center} is not next to an end of {'-'.join(map(str, p))}")


def star_removal_order(n: int, m: int, interleaved: bool = False) -> List[Edge]:
    """
    Trim order for a star of m edges at vertex n when n = 2k+1 with k odd.

    Every path through n carries it next to one end; end edges go first, then
    side edges. With `interleaved` each path gives up its end and side edge
    before the next path is touched.
    """
    k = n // 2
    if n % 2 == 0 or k % 2 == 0:
        raise InvalidParameterError(f"star_removal_order needs n = 2k+1 with k odd, got {n}")
    if not 1 <= m <= n - 2:
        raise InvalidParameterError(f"star on {m} edges does not fit K_{n} (need 1 <= m <= {n - 2})")
    pairs = [_center_end_and_side(p, n) for p in construct(n).paths if n in p]
    if interleaved:
        return [e for pair in pairs for e in pair][:m]
    ends, sides = [end for end, _ in pairs], [side for _, side in pairs]
    return (ends + sides)[:m]


def remove_star(n: int, m: int) -> RemovalResult:
    """
    K_n minus a star of exactly m edges, decomposed into at most floor((n+1)/2) paths.

    The star is centered at vertex n.
    """
    if n < 3:
        raise InvalidParameterError(f"remove_star needs n >= 3, got {n}")
    if not 1 <= m <= n - 2:
        raise InvalidParameterError(f"star on {m} edges does not fit K_{n} (need 1 <= m <= {n - 2})")
    k, center = n // 2, n
    label = f"remove_star({n}, {m})"

    if n % 2 and k % 2:
        surgery = Surgery(construct(n), label)
        for edge in star_removal_order(n, m):
            surgery.trim(edge)
    elif n % 2:
        d = construct(n)
        surgery = Surgery(d, label)
        closing = d.path_containing(Edge(k + 1, center))
        pairs = [_center_end_and_side(p, center) for p in d.paths if center in p and p != closing]
        ends, sides = [end for end, _ in pairs], [side for _, side in pairs]
        for edge in ends[:m]:
            surgery.trim(edge)
        extra = m - len(ends)
        if m == 2 * k - 1:
            # the closing path gives up both of its center edges and borrows 1-2k from an end
            surgery.remove_fork(k + 1, center, 2 * k, bridge=Edge(2 * k, 1))
            extra -= 2
        for edge in sides[: max(extra, 0)]:
            surgery.trim(edge)
    else:
        surgery = Surgery(walecki_even(k), label)
        for p in [p for p in surgery.result().paths if center in p[1:-1]][: m // 2]:
            at = p.index(center)
            surgery.remove_fork(p[at - 1], center, p[at + 1])
        if m % 2:
            lone = next(p for p in surgery.paths if center in (p[0], p[-1]))
            surgery.trim(Edge(lone[0], lone[1]) if lone[0] == center else Edge(lone[-2], lone[-1]))

    if len(surgery.removed) != m or any(center not in e for e in surgery.removed):
        raise ConstructionError(f"{label}: removed {surgery.removed}, not a star of {m} edges")
    record = RemovalRecord(
        kind=RemovalKind.STAR, removed_edges=frozenset(surgery.removed), center=center
    )
    return _finish(surgery, record)


# --- Tadpoles ---


def _mirror(n: int, m: int) -> Dict[Vertex, Vertex]:
    """
    Relabeling v -> ((m - v) mod 2k) + 1 on 1..2k, which reverses the cycle 1..m.
    """
    even = n - n % 2
    return {v: (m - v) % even + 1 for v in range(1, even + 1)}


def remove_tadpole(n: int, m: int) -> RemovalResult:
    """
    K_n minus T_{m,1} (cycle 1..m plus the tail m-2k, or 2k-(2k+1) when m = 2k = n-1).

    The fork holding the tail also holds the cycle's closing edge 1-m, and its
    base 1-2k is an end edge, so the tail path is rejoined through the base.
    For odd m the same recipe runs on the mirrored cycle (tail 1-(m+1)) and the
    result is relabeled back.
    """
    if n < 4:
        raise InvalidParameterError(f"remove_tadpole needs n >= 4, got {n}")
    if not 3 <= m <= n - 1:
        raise InvalidParameterError(f"cycle length {m} outside 3..{n - 1}")
    k = n // 2
    label = f"remove_tadpole({n}, {m})"
    surgery = Surgery(construct(n), label)
    cycle = [Edge(i, i + 1) for i in range(1, m)]
    fork: Optional[Fork] = None
    mirrored = False

    if n % 2 and m == 2 * k:
        for edge in cycle + [Edge(2 * k, 1)]:
            surgery.trim(edge)
        surgery.split(Edge(2 * k, n))
    elif m % 2 == 0:
        if n % 2 == 0:
            fork = surgery.remove_fork(2 * k, m, 1)
            for edge in cycle:
                surgery.trim(edge)
        else:
            for edge in cycle:
                surgery.trim(edge)
            fork = surgery.remove_fork(2 * k, m, 1)
    else:
        mirrored = True
        if n % 2 == 0:
            fork = surgery.remove_fork(m, 1, m + 1)
            for edge in cycle:
                surgery.trim(edge)
        else:
            for edge in cycle:
                surgery.trim(edge)
            fork = surgery.remove_fork(m, 1, m + 1)

    if len(surgery.removed) != m + 1:
        raise ConstructionError(f"{label}: removed {len(surgery.removed)} edges, expected {m + 1}")
    record = RemovalRecord(
        kind=RemovalKind.TADPOLE,
        removed_edges=frozenset(surgery.removed),
        cycle_length=m,
        fork=fork,
    )
    result = _finish(surgery, record)
    if mirrored:
        result = result.relabel(_mirror(n, m))
    return result
