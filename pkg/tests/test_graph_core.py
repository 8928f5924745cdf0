import pytest
from hypothesis import given, strategies as st

from app.exceptions import InvalidParameterError
from app.models.graph_model import Edge, LabeledGraph, Path, PathDecomposition
from app.services.constructions import construct
from app.services.graph_core import (
    complete_graph,
    gallai_bound,
    host_from_removed,
    is_complete,
    is_connected,
    relabel,
    relabel_graph,
    verify_decomposition,
)


@pytest.mark.parametrize("n, bound", [(1, 1), (2, 1), (3, 2), (6, 3), (7, 4), (40, 20)])
def test_gallai_bound(n, bound):
    assert gallai_bound(n) == bound


@given(st.integers(min_value=1, max_value=500))
def test_gallai_bound_parity(m):
    assert gallai_bound(2 * m) == m
    assert gallai_bound(2 * m + 1) == m + 1


def test_gallai_bound_rejects_zero():
    with pytest.raises(InvalidParameterError):
        gallai_bound(0)


def test_edge_is_unordered():
    assert Edge(5, 2) == Edge(2, 5)
    assert hash(Edge(5, 2)) == hash(Edge(2, 5))
    assert tuple(Edge(5, 2)) == (2, 5)
    assert Edge(2, 5).other(2) == 5


@pytest.mark.parametrize("a, b", [(3, 3), (0, 4)])
def test_edge_rejects_loops_and_bad_vertices(a, b):
    with pytest.raises(InvalidParameterError):
        Edge(a, b)


@given(st.lists(st.integers(min_value=1, max_value=30), min_size=2, max_size=12, unique=True))
def test_path_normalization(vertices):
    p = Path(vertices)
    assert Path(p) == p
    assert Path(reversed(vertices)) == p
    assert tuple(p) <= tuple(reversed(p))
    assert len(p.edges) == len(vertices) - 1


def test_path_needs_two_vertices():
    with pytest.raises(InvalidParameterError):
        Path([4])


def test_path_end_edges():
    p = Path([4, 5, 3, 6, 2, 1])
    assert p == (1, 2, 6, 3, 5, 4)
    assert p.end_edges == (Edge(1, 2), Edge(4, 5))
    assert Path([1, 2]).end_edges == (Edge(1, 2),)


def test_complete_graph():
    g = complete_graph(5)
    assert g.edge_count == 10
    assert all(g.degree(v) == 4 for v in g.vertices)
    assert is_complete(g)


def test_labeled_graph_rejects_edge_outside_vertex_range():
    with pytest.raises(InvalidParameterError):
        LabeledGraph(3, frozenset({Edge(1, 4)}))


def test_is_connected():
    assert is_connected(complete_graph(5))
    assert is_connected(host_from_removed(4, [(1, 4), (2, 4)]))
    assert not is_connected(host_from_removed(2, [(1, 2)]))
    assert is_connected(complete_graph(1))


@pytest.mark.parametrize("n", range(2, 12))
def test_constructions_verify(n):
    report = verify_decomposition(construct(n))
    assert report.passed
    assert report.summary().endswith("PASS")


def test_verify_empty_decomposition_of_k1():
    report = verify_decomposition(PathDecomposition(complete_graph(1), ()))
    assert report.passed
    assert report.path_count == 0


def test_verify_duplicate_edge():
    d = PathDecomposition(complete_graph(3), (Path([1, 2, 3]), Path([1, 2]), Path([1, 3])))
    report = verify_decomposition(d)
    assert not report.passed
    assert not report.edges_disjoint
    assert report.duplicate_edge == (1, 2)
    assert not report.within_bound


def test_verify_uncovered_edge():
    d = PathDecomposition(complete_graph(4), (Path([1, 2, 3, 4]),))
    report = verify_decomposition(d)
    assert not report.covers_host
    assert report.uncovered_edge == (1, 3)
    assert "[FAIL] host edges covered" in report.summary()


def test_verify_repeated_vertex():
    d = PathDecomposition(complete_graph(3), (Path([1, 2, 3, 1]),))
    report = verify_decomposition(d)
    assert not report.paths_valid
    assert report.invalid_reason == "repeated vertex"


def test_verify_edge_outside_host():
    host = host_from_removed(3, [(1, 3)])
    d = PathDecomposition(host, (Path([2, 1, 3]),))
    report = verify_decomposition(d)
    assert not report.paths_valid
    assert report.invalid_reason == "edge 1-3 not in host"


def test_verify_vertex_out_of_range():
    d = PathDecomposition(complete_graph(2), (Path([1, 2, 3]),))
    report = verify_decomposition(d)
    assert not report.paths_valid
    assert report.invalid_reason == "vertex 3 outside 1..2"


def test_relabel_keeps_validity():
    d = relabel(construct(7), {1: 7, 7: 1})
    assert verify_decomposition(d).passed
    assert Path([7, 2, 3, 4, 5, 6]) in d.paths


def test_relabel_rejects_non_bijection():
    with pytest.raises(InvalidParameterError):
        relabel(construct(4), {1: 2})


def test_relabel_graph_moves_removed_edges():
    g = relabel_graph(host_from_removed(5, [(1, 2), (2, 3)]), {1: 5, 5: 1})
    assert complete_graph(5).edges - g.edges == {Edge(2, 5), Edge(2, 3)}
    with pytest.raises(InvalidParameterError):
        relabel_graph(g, {1: 3})


def test_verify_vertex_below_range():
    d = PathDecomposition(complete_graph(3), (Path([0, 1]), Path([1, 2, 3]), Path([1, 3])))
    report = verify_decomposition(d)
    assert not report.paths_valid
    assert report.invalid_path == [0, 1]
    assert report.invalid_reason == "vertex 0 outside 1..3"
