import networkx as nx
import pytest

from app.exceptions import ConstructionError, InvalidParameterError, TrimError
from app.models.graph_model import Edge, Path, RemovalKind
from app.services.constructions import construct, walecki_even
from app.services.graph_core import complete_graph, gallai_bound, is_connected, verify_decomposition
from app.services.removal import (
    Surgery,
    path_ends_feasible,
    path_ends_removable,
    remove_star,
    remove_tadpole,
    star_removal_order,
    trim_path_ends,
)

STAR_CASES = [(n, m) for n in range(3, 21) for m in range(1, n - 1)]
TADPOLE_CASES = [(n, m) for n in range(4, 21) for m in range(3, n)]


def _tadpole_graph(m: int) -> nx.Graph:
    g = nx.cycle_graph(m)
    g.add_edge(0, m)
    return g


def _assert_rebuilds_complete_graph(result):
    assert result.host.edges | result.record.removed_edges == complete_graph(result.host.n).edges
    assert not result.host.edges & result.record.removed_edges


@pytest.mark.parametrize("n, m", STAR_CASES)
def test_remove_star(n, m):
    result = remove_star(n, m)
    assert result.record.kind == RemovalKind.STAR
    assert len(result.record.removed_edges) == m
    assert all(result.record.center in e for e in result.record.removed_edges)
    assert result.host.edge_count == n * (n - 1) // 2 - m
    assert is_connected(result.host)
    report = verify_decomposition(result.decomposition)
    assert report.passed
    assert len(result.decomposition.paths) <= gallai_bound(n)
    _assert_rebuilds_complete_graph(result)


@pytest.mark.parametrize("n, m", TADPOLE_CASES)
def test_remove_tadpole(n, m):
    result = remove_tadpole(n, m)
    assert result.record.kind == RemovalKind.TADPOLE
    assert result.record.cycle_length == m
    assert result.host.edge_count == n * (n - 1) // 2 - (m + 1)
    removed = nx.Graph(list(result.record.removed_edges))
    assert nx.is_isomorphic(removed, _tadpole_graph(m))
    assert verify_decomposition(result.decomposition).passed
    assert len(result.decomposition.paths) <= gallai_bound(n)
    _assert_rebuilds_complete_graph(result)
    if n >= 5:
        assert is_connected(result.host)


@pytest.mark.parametrize("n, m", TADPOLE_CASES)
def test_tadpole_sits_on_the_conventional_labels(n, m):
    k = n // 2
    cycle = {Edge(i, i + 1) for i in range(1, m)} | {Edge(1, m)}
    tail = Edge(2 * k, n) if m == 2 * k else Edge(m, 2 * k)
    assert remove_tadpole(n, m).record.removed_edges == cycle | {tail}


def test_k4_minus_triangle_tadpole_isolates_its_branch_vertex():
    result = remove_tadpole(4, 3)
    assert not is_connected(result.host)
    assert result.host.degree(3) == 0


def test_star_examples():
    result = remove_star(7, 5)
    assert result.host.edge_count == 16
    assert len(result.decomposition.paths) <= 4

    result = remove_star(6, 2)
    assert result.host.edge_count == 13
    assert len(result.decomposition.paths) == 3
    assert result.record.center == 6

    result = remove_star(4, 1)
    assert result.host.edge_count == 5
    assert len(result.decomposition.paths) == 2


def test_tadpole_examples():
    result = remove_tadpole(8, 6)
    assert result.host.edge_count == 21
    assert len(result.decomposition.paths) == 4
    assert result.record.fork is not None
    assert result.record.fork.center == 6

    result = remove_tadpole(7, 4)
    assert result.host.edge_count == 16
    assert len(result.decomposition.paths) <= 4

    result = remove_tadpole(5, 3)
    assert result.host.edge_count == 6
    assert len(result.decomposition.paths) <= 3


@pytest.mark.parametrize("n, m", [(2, 1), (5, 4), (5, 0), (8, 7)])
def test_remove_star_rejects_bad_parameters(n, m):
    with pytest.raises(InvalidParameterError):
        remove_star(n, m)


@pytest.mark.parametrize("n, m", [(3, 3), (6, 2), (6, 6)])
def test_remove_tadpole_rejects_bad_parameters(n, m):
    with pytest.raises(InvalidParameterError):
        remove_tadpole(n, m)


def test_relabeled_star_moves_center():
    result = remove_star(6, 3).relabel({6: 1, 1: 6})
    assert result.record.center == 1
    assert all(1 in e for e in result.record.removed_edges)
    assert verify_decomposition(result.decomposition).passed
    assert result.host == result.decomposition.host
    with pytest.raises(InvalidParameterError):
        remove_star(6, 3).relabel({6: 1})


def test_trim_k6_end_edge():
    host, d = trim_path_ends(walecki_even(3), [(5, 4)])
    assert Path([1, 2, 6, 3, 5]) in d.paths
    assert host.edge_count == 14
    assert verify_decomposition(d).passed


def test_trim_vanishing_path():
    host, d = trim_path_ends(walecki_even(1), [(1, 2)])
    assert d.paths == ()
    assert host.edge_count == 0


def test_trim_reports_offending_index():
    with pytest.raises(TrimError) as excinfo:
        trim_path_ends(walecki_even(3), [(4, 5), (3, 6)])
    assert excinfo.value.index == 1
    assert excinfo.value.edge == Edge(3, 6)


def test_trim_rejects_edge_not_on_any_path():
    with pytest.raises(TrimError) as excinfo:
        trim_path_ends(walecki_even(3), [(4, 5), (4, 5)])
    assert excinfo.value.index == 1


def test_star_removal_order_matches_trim_replay():
    order = star_removal_order(7, 5, interleaved=True)
    assert len(order) == 5
    host, d = trim_path_ends(construct(7), order)
    expected = remove_star(7, 5)
    assert host == expected.host
    assert d == expected.decomposition


def test_star_removal_order_puts_ends_first():
    order = star_removal_order(7, 5)
    ends = {Edge(1, 7), Edge(3, 7), Edge(5, 7)}
    assert set(order[:3]) == ends
    with pytest.raises(InvalidParameterError):
        star_removal_order(9, 3)


def test_surgery_split_needs_slack():
    surgery = Surgery(construct(6), "split")
    with pytest.raises(ConstructionError):
        surgery.split(Edge(6, 3))


def test_path_ends_removable():
    d = walecki_even(3)
    assert path_ends_removable(d, [(1, 2), (4, 5), (3, 5)])
    assert not path_ends_removable(d, [(3, 6)])
    assert path_ends_removable(d, [])


def test_feasible_star_witness_replays():
    target = [(i, 7) for i in range(1, 6)]
    witness = path_ends_feasible(7, target)
    assert witness is not None
    assert len(witness.removals) == 5
    host, _ = trim_path_ends(witness.decomposition, witness.removals)
    assert host.edge_count == 16


def test_feasible_empty_target():
    witness = path_ends_feasible(6, [])
    assert witness is not None
    assert witness.removals == []


def test_feasible_all_edges():
    target = list(complete_graph(6).edges)
    witness = path_ends_feasible(6, target)
    assert witness is not None
    assert sorted(witness.removals) == sorted(target)


def test_feasible_searches_beyond_the_construction():
    # 3-6 is interior to the K_6 construction but an end edge after relabeling
    assert not path_ends_removable(construct(6), [(3, 6)])
    witness = path_ends_feasible(6, [(3, 6)])
    assert witness is not None
    assert witness.removals == [Edge(3, 6)]
    assert verify_decomposition(witness.decomposition).passed


def test_feasible_rejects_out_of_range(monkeypatch):
    with pytest.raises(InvalidParameterError):
        path_ends_feasible(5, [(1, 6)])
    monkeypatch.setenv("GALLAI_ENUM_CAP", "5")
    with pytest.raises(InvalidParameterError):
        path_ends_feasible(6, [])
