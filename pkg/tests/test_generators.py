import pytest

from longcycle.connectivity import is_connected, is_two_connected
from longcycle.errors import BadParameters, BudgetExceeded
from longcycle.generators import (
    complete_bipartite,
    enumerate_labeled_graphs,
    gen_join_family,
    iter_labeled_adjacency,
)
from longcycle.graph import min_degree
from longcycle.oracles import circumference

from oracles import brute_two_connected


def test_n3_unfiltered():
    assert sum(1 for _ in enumerate_labeled_graphs(3)) == 8


def test_n4_connected():
    # Direct count: of the 64 labeled graphs on 4 vertices, 38 are connected.
    assert sum(1 for _ in enumerate_labeled_graphs(4, is_connected)) == 38


def test_n5_two_connected_double_count():
    fast = sum(1 for _ in enumerate_labeled_graphs(5, is_two_connected))
    slow = sum(1 for _ in enumerate_labeled_graphs(5, brute_two_connected))
    assert fast == slow == 238


def test_each_graph_exactly_once():
    seen = {tuple(sorted(g.edges())) for g in enumerate_labeled_graphs(5)}
    assert len(seen) == 1 << 10


def test_chunked_ranges_cover_everything():
    whole = list(iter_labeled_adjacency(4))
    parts = list(iter_labeled_adjacency(4, 0, 20)) + list(iter_labeled_adjacency(4, 20, 64))
    assert whole == parts


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        next(enumerate_labeled_graphs(8))


def test_join_family_k23():
    assert gen_join_family(2, 3, "empty") == complete_bipartite(2, 3)


def test_join_family_k3_n4():
    g = gen_join_family(3, 4, "complete")
    assert g.n == 7 and min_degree(g) == 3
    assert circumference(g) == 6


@pytest.mark.parametrize("delta", [2, 3, 4])
@pytest.mark.parametrize("inner", ["empty", "complete", "random"])
def test_join_family_degrees(delta, inner):
    for m in range(delta + 1, delta + 4):
        g = gen_join_family(delta, m, inner, seed=m, shuffle=True)
        assert g.n == delta + m
        assert min_degree(g) == delta
        degrees = g.degrees()
        assert sum(d == delta for d in degrees) == m
        assert sum(d > delta for d in degrees) == delta
        assert is_two_connected(g)


def test_join_family_vertex_count():
    for delta in (2, 3, 4):
        assert gen_join_family(delta, delta + 1).n == 2 * delta + 1


def test_join_family_seeded():
    a = gen_join_family(4, 6, "random", seed=7, shuffle=True)
    b = gen_join_family(4, 6, "random", seed=7, shuffle=True)
    assert a == b


@pytest.mark.parametrize("delta, m", [(2, 2), (3, 1), (1, 5)])
def test_join_family_bad_parameters(delta, m):
    with pytest.raises(BadParameters):
        gen_join_family(delta, m)


def test_unknown_inner_policy():
    with pytest.raises(BadParameters):
        gen_join_family(2, 3, "sparse")
