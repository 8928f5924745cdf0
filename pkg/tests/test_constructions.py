import pytest
from hypothesis import given, settings, strategies as st

from app.exceptions import ConstructionError, InvalidParameterError
from app.models.graph_model import Edge, Path, Rotation
from app.services.constructions import (
    construct,
    construction_name,
    detach_end_edge,
    odd_decomposition_even_k,
    odd_decomposition_odd_k,
    reroute,
    walecki_even,
    zigzag,
)
from app.services.graph_core import gallai_bound, verify_decomposition


def test_zigzag_k3():
    assert zigzag(3) == (1, 2, 6, 3, 5, 4)


def test_rotation_wraps():
    assert Rotation(6, 2).apply(5) == 1
    assert Rotation(6, 2).apply_path([1, 2, 6]) == (3, 4, 2)
    with pytest.raises(InvalidParameterError):
        Rotation(7, 1)
    with pytest.raises(InvalidParameterError):
        Rotation(6, 3)


@pytest.mark.parametrize("k", range(1, 21))
def test_walecki_paths_are_rotations(k):
    d = walecki_even(k)
    assert len(d.paths) == k
    assert all(len(p) == 2 * k and p.is_simple for p in d.paths)
    rotations = {Path(Rotation(2 * k, t).apply_path(zigzag(k))) for t in range(k)}
    assert set(d.paths) == rotations


def test_walecki_k1_is_single_edge():
    assert walecki_even(1).paths == (Path([1, 2]),)


@pytest.mark.parametrize("n", range(2, 41))
def test_construct_meets_bound(n):
    d = construct(n)
    assert verify_decomposition(d).passed
    assert len(d.paths) == gallai_bound(n)


def test_construct_small_examples():
    assert len(construct(2).paths) == 1
    assert len(construct(6).paths) == 3
    assert len(construct(7).paths) == 4
    assert construction_name(6) == "walecki_even"
    assert construction_name(7) == "odd_decomposition_odd_k"
    assert construction_name(9) == "odd_decomposition_even_k"


def test_construct_rejects_n_below_two():
    with pytest.raises(InvalidParameterError):
        construct(1)


def test_construct_is_deterministic():
    assert construct(13) == construct(13)


def test_reroute_k6_examples():
    d = reroute(walecki_even(3), Edge(1, 2), 7)
    assert Path([1, 7, 2, 6, 3, 5, 4]) in d.paths
    assert Path([3, 4, 2, 5, 1, 6]) in d.paths
    d = reroute(d, Edge(3, 4), 7)
    assert Path([3, 7, 4, 2, 5, 1, 6]) in d.paths
    assert d.n == 7


def test_reroute_single_edge():
    d = reroute(walecki_even(1), Edge(1, 2), 3)
    assert d.paths == (Path([1, 3, 2]),)
    assert d.host.edges == {Edge(1, 3), Edge(2, 3)}


def test_reroute_rejects_missing_edge():
    d = reroute(walecki_even(1), Edge(1, 2), 3)
    with pytest.raises(InvalidParameterError):
        reroute(d, Edge(1, 2), 4)


def test_reroute_rejects_vertex_already_on_path():
    with pytest.raises(InvalidParameterError):
        reroute(walecki_even(3), Edge(1, 2), 6)


def test_reroute_rejects_covered_detour():
    # 2-7 is already used by the detour of 1-2
    d = reroute(walecki_even(3), Edge(1, 2), 7)
    d = reroute(d, Edge(3, 4), 7)
    with pytest.raises(InvalidParameterError):
        reroute(d, Edge(2, 3), 7)


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=10), st.data())
def test_reroute_adds_exactly_one_edge(k, data):
    d = walecki_even(k)
    path = data.draw(st.sampled_from(d.paths))
    edge = data.draw(st.sampled_from(path.edges))
    rerouted = reroute(d, edge, 2 * k + 1)
    assert len(rerouted.paths) == len(d.paths)
    assert len(rerouted.covered_edges()) == len(d.covered_edges()) + 1
    assert verify_decomposition(rerouted).passed


def test_odd_k1_is_forced():
    d = odd_decomposition_odd_k(1)
    assert set(d.paths) == {Path([1, 3, 2]), Path([1, 2])}


@pytest.mark.parametrize("k", [1, 3, 5, 7, 9])
def test_odd_k_new_vertex_degree(k):
    d = odd_decomposition_odd_k(k)
    top = 2 * k + 1
    assert len(d.paths) == k + 1
    assert sum(1 for e in d.covered_edges() if top in e) == 2 * k
    assert all(p.count(top) <= 1 for p in d.paths)


@pytest.mark.parametrize("k", [2, 4, 6, 8])
def test_even_k_closing_path(k):
    d = odd_decomposition_even_k(k)
    top = 2 * k + 1
    closing = Path(list(range(1, k + 2)) + [top] + list(range(2 * k, k + 1, -1)))
    assert closing in d.paths
    assert len(d.paths) == k + 1
    assert sum(1 for e in d.covered_edges() if top in e) == 2 * k


def test_odd_constructions_reject_wrong_parity():
    with pytest.raises(InvalidParameterError):
        odd_decomposition_odd_k(2)
    with pytest.raises(InvalidParameterError):
        odd_decomposition_even_k(3)


def test_detach_interior_edge_is_a_construction_error():
    with pytest.raises(ConstructionError):
        detach_end_edge(walecki_even(3), Edge(6, 3))


def test_detach_end_edge_drops_vanishing_path():
    d = detach_end_edge(walecki_even(1), Edge(1, 2))
    assert d.paths == ()
    assert d.host.edge_count == 0
