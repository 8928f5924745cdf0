"""
Isomorphism classes of minimum path decompositions of K_n.

The search fixes the longest path as 1, 2, ..., L and then repeatedly covers
the smallest uncovered edge, so every labeled decomposition containing that
path is produced exactly once. Results are merged by canonical form.
"""

import itertools
import logging
import math
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from app import config
from app.exceptions import ConstructionError, InvalidParameterError
from app.models.graph_model import CanonicalForm, Edge, IsoClass, LabeledGraph, Path, PathDecomposition, Vertex
from app.services.graph_core import complete_graph, gallai_bound, is_complete, verify_decomposition

logger = logging.getLogger(__name__)

RawPath = Tuple[Vertex, ...]
NAIVE_MAX_N = 6


def _normalize(seq: Sequence[Vertex]) -> RawPath:
    seq = tuple(seq)
    rev = seq[::-1]
    return seq if seq <= rev else rev


def _image(paths: Sequence[RawPath], mapping: Dict[Vertex, Vertex]) -> Tuple[RawPath, ...]:
    return tuple(sorted(_normalize([mapping[v] for v in p]) for p in paths))


def _anchored_mappings(n: int, source: RawPath, targets: Sequence[RawPath]) -> Iterator[Dict[Vertex, Vertex]]:
    """
    Every permutation of 1..n sending `source` onto one of `targets` (either orientation).
    """
    rest_src = [v for v in range(1, n + 1) if v not in source]
    for target in targets:
        for oriented in (target, target[::-1]):
            rest_dst = [v for v in range(1, n + 1) if v not in oriented]
            for perm in itertools.permutations(rest_dst):
                mapping = dict(zip(source, oriented))
                mapping.update(zip(rest_src, perm))
                yield mapping


def _canonical(n: int, paths: Sequence[RawPath]) -> Tuple[RawPath, ...]:
    """
    Least relabeled path list over all permutations.

    A shortest path of length L always maps to something no smaller than
    1..L, so only permutations sending some shortest path onto 1..L (either
    orientation) can reach the minimum.
    """
    if not paths:
        return ()
    shortest = min(len(p) for p in paths)
    prefix = tuple(range(1, shortest + 1))
    best: Optional[Tuple[RawPath, ...]] = None
    for p in paths:
        if len(p) != shortest:
            continue
        for source in (p, p[::-1]):
            for mapping in _anchored_mappings(n, source, [prefix]):
                image = _image(paths, mapping)
                if best is None or image < best:
                    best = image
    return best


def _automorphisms(n: int, paths: Sequence[RawPath]) -> int:
    if not paths:
        return math.factorial(n)
    target = tuple(sorted(_normalize(p) for p in paths))
    shortest = min(len(p) for p in paths)
    anchor = min(p for p in target if len(p) == shortest)
    candidates = [p for p in target if len(p) == shortest]
    return sum(1 for mapping in _anchored_mappings(n, anchor, candidates) if _image(paths, mapping) == target)


def canonical_form(d: PathDecomposition) -> CanonicalForm:
    """
    Fingerprint equal for two decompositions of K_n exactly when one is a relabeling of the other.
    """
    if not is_complete(d.host):
        raise InvalidParameterError(f"canonical_form needs a decomposition of K_{d.n}")
    report = verify_decomposition(d)
    if not (report.paths_valid and report.edges_disjoint and report.covers_host):
        raise InvalidParameterError(f"not a valid decomposition:\n{report.summary()}")
    return CanonicalForm(_canonical(d.n, [tuple(p) for p in d.paths]))


def automorphism_count(d: PathDecomposition) -> int:
    """
    Number of vertex permutations mapping the path set of `d` onto itself.
    """
    return _automorphisms(d.n, [tuple(p) for p in d.paths])


def apply_permutation(d: PathDecomposition, perm: Sequence[Vertex]) -> PathDecomposition:
    """
    Relabel vertex v as perm[v - 1].
    """
    if sorted(perm) != list(range(1, d.n + 1)):
        raise InvalidParameterError(f"{list(perm)} is not a permutation of 1..{d.n}")
    return d.relabeled({v: perm[v - 1] for v in range(1, d.n + 1)})


def _check_n(n: int, cap: Optional[int], budget: bool) -> None:
    if n < 2:
        raise InvalidParameterError(f"enumeration needs n >= 2, got {n}")
    limit = cap if cap is not None else config.enumeration_cap()
    if budget:
        limit = max(limit, config.enumeration_budget_cap())
    if n > limit:
        raise InvalidParameterError(
            f"n={n} exceeds the enumeration cap {limit}"
            + ("" if budget else "; pass a budget to go further")
        )


def _extensions(end: Vertex, adj: Dict[Vertex, Set[Vertex]], used: Set[Vertex], room: int) -> Iterator[List[Vertex]]:
    """
    Simple walks leaving `end` through unused vertices, at most `room` edges, the empty walk included.
    """
    yield []
    if room == 0:
        return
    for nxt in sorted(adj[end] - used):
        used.add(nxt)
        for tail in _extensions(nxt, adj, used, room - 1):
            yield [nxt] + tail
        used.discard(nxt)


def _paths_through(edge: Edge, adj: Dict[Vertex, Set[Vertex]], lo: int, hi: int) -> Iterator[RawPath]:
    """
    Simple paths in `adj` through `edge` with lo..hi edges, each listed once.
    """
    a, b = edge
    used = {a, b}
    for right in _extensions(b, adj, used, hi - 1):
        # vertices of `right` stay in `used` while its generator is suspended
        for left in _extensions(a, adj, used, hi - 1 - len(right)):
            size = 1 + len(right) + len(left)
            if size >= lo:
                yield tuple(reversed(left)) + (a, b) + tuple(right)


def _remove_path(adj: Dict[Vertex, Set[Vertex]], path: RawPath) -> None:
    for x, y in zip(path, path[1:]):
        adj[x].discard(y)
        adj[y].discard(x)


def _restore_path(adj: Dict[Vertex, Set[Vertex]], path: RawPath) -> None:
    for x, y in zip(path, path[1:]):
        adj[x].add(y)
        adj[y].add(x)


def _cover(
    adj: Dict[Vertex, Set[Vertex]], remaining: int, paths_left: int, longest: int, chosen: List[RawPath]
) -> Iterator[List[RawPath]]:
    if remaining == 0:
        yield list(chosen)
        return
    if paths_left == 0 or remaining > paths_left * longest:
        return
    edge = min(Edge(x, y) for x in adj for y in adj[x] if x < y)
    lo = max(1, remaining - (paths_left - 1) * longest)
    for path in _paths_through(edge, adj, lo, longest):
        _remove_path(adj, path)
        chosen.append(path)
        yield from _cover(adj, remaining - (len(path) - 1), paths_left - 1, longest, chosen)
        chosen.pop()
        _restore_path(adj, path)


def iter_anchored_decompositions(n: int, cap: Optional[int] = None, budget: bool = False) -> Iterator[List[RawPath]]:
    """
    Stream decompositions of K_n into floor((n+1)/2) paths whose longest path is 1, 2, ..., L.

    For even n only Hamiltonian first paths are tried, since then every path
    must be Hamiltonian.
    """
    _check_n(n, cap, budget)
    bound = gallai_bound(n)
    total = n * (n - 1) // 2
    lengths = [n] if n % 2 == 0 else range(2, n + 1)
    for size in lengths:
        longest = size - 1
        if total > bound * longest:
            continue
        first = tuple(range(1, size + 1))
        adj = {v: set(range(1, n + 1)) - {v} for v in range(1, n + 1)}
        _remove_path(adj, first)
        for rest in _cover(adj, total - longest, bound - 1, longest, [first]):
            yield rest


def _iso_class(host: LabeledGraph, key: Tuple[RawPath, ...]) -> IsoClass:
    aut = _automorphisms(host.n, key)
    return IsoClass(
        canonical=CanonicalForm(key),
        representative=PathDecomposition(host, tuple(Path(p) for p in key)),
        labeled_count=math.factorial(host.n) // aut,
        automorphisms=aut,
    )


class ClassStream:
    """
    Isomorphism classes of K_n decompositions, yielded as soon as they are discovered.

    `anchored` counts the anchored labeled decompositions consumed so far.
    """

    def __init__(self, n: int, cap: Optional[int] = None, budget: bool = False):
        _check_n(n, cap, budget)
        self.n = n
        self.cap = cap
        self.budget = budget
        self.anchored = 0

    def __iter__(self) -> Iterator[IsoClass]:
        host = complete_graph(self.n)
        seen: Set[Tuple[RawPath, ...]] = set()
        for raw in iter_anchored_decompositions(self.n, cap=self.cap, budget=self.budget):
            self.anchored += 1
            key = _canonical(self.n, raw)
            if key in seen:
                continue
            seen.add(key)
            logger.debug("n=%d: new class %s", self.n, key)
            yield _iso_class(host, key)


def enumerate_decompositions(n: int, cap: Optional[int] = None, budget: bool = False) -> List[IsoClass]:
    """
    All isomorphism classes of decompositions of K_n into floor((n+1)/2) paths, sorted by fingerprint.
    """
    stream = ClassStream(n, cap=cap, budget=budget)
    classes = sorted(stream, key=lambda c: c.canonical)
    labeled_total = sum(c.labeled_count for c in classes)
    if n % 2 == 0 and labeled_total != stream.anchored * math.factorial(n - 1):
        # each of the n!/2 Hamiltonian paths lies in the same number of decompositions
        raise ConstructionError(
            f"n={n}: orbit count {labeled_total} disagrees with anchored count {stream.anchored}"
        )
    logger.info("n=%d: %d classes, %d labeled decompositions", n, len(classes), labeled_total)
    return classes


def _path_library(n: int) -> Dict[Edge, List[RawPath]]:
    library: Dict[Edge, List[RawPath]] = {}
    for size in range(2, n + 1):
        for seq in itertools.permutations(range(1, n + 1), size):
            if seq > seq[::-1]:
                continue
            for e in Path(seq).edges:
                library.setdefault(e, []).append(seq)
    return library


def iter_labeled_decompositions(n: int) -> Iterator[Tuple[RawPath, ...]]:
    """
    Every labeled decomposition of K_n into floor((n+1)/2) paths, by exact cover over all simple paths.
    """
    if not 2 <= n <= NAIVE_MAX_N:
        raise InvalidParameterError(f"exhaustive labeled search supports 2 <= n <= {NAIVE_MAX_N}, got {n}")
    library = _path_library(n)
    uncovered = set(complete_graph(n).edges)
    chosen: List[RawPath] = []

    def search(paths_left: int) -> Iterator[Tuple[RawPath, ...]]:
        if not uncovered:
            yield tuple(sorted(chosen))
            return
        if paths_left == 0:
            return
        for path in library[min(uncovered)]:
            edges = Path(path).edges
            if not all(e in uncovered for e in edges):
                continue
            uncovered.difference_update(edges)
            chosen.append(path)
            yield from search(paths_left - 1)
            chosen.pop()
            uncovered.update(edges)

    yield from search(gallai_bound(n))


def count_labeled(n: int) -> int:
    return sum(1 for _ in iter_labeled_decompositions(n))
