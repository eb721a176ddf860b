import random

import pytest

from longcycle.connectivity import is_two_connected
from longcycle.dirac import crossing_cycle, dirac_cycle, maximal_path
from longcycle.errors import NotTwoConnected
from longcycle.generators import (
    complete_bipartite,
    cycle_graph,
    enumerate_labeled_graphs,
    path_graph,
    petersen_graph,
    random_graph,
)
from longcycle.graph import min_degree
from longcycle.oracles import circumference


def bound(g):
    return min(g.n, 2 * min_degree(g))


def test_c5():
    c = dirac_cycle(cycle_graph(5))
    assert len(c) == 5


def test_petersen():
    g = petersen_graph()
    c = dirac_cycle(g)
    assert c.is_valid(g) and len(c) >= 6


def test_k23_tight():
    g = complete_bipartite(2, 3)
    c = dirac_cycle(g)
    assert len(c) == 4 == circumference(g)


def test_not_two_connected():
    with pytest.raises(NotTwoConnected):
        dirac_cycle(path_graph(4))


def test_maximal_path_is_maximal():
    rng = random.Random(1)
    for _ in range(100):
        g = random_graph(rng.randint(3, 12), rng.uniform(0.2, 0.7), rng)
        p = maximal_path(g)
        assert len(set(p)) == len(p)
        assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
        for end in (p[0], p[-1]):
            assert all(w in p for w in g.neighbors(end))


def test_crossing_cycle_covers_endpoint_degrees():
    rng = random.Random(2)
    for _ in range(200):
        g = random_graph(rng.randint(4, 12), rng.uniform(0.3, 0.8), rng)
        if not is_two_connected(g):
            continue
        p = maximal_path(g)
        c = crossing_cycle(g, p)
        assert c.is_valid(g)
        assert len(c) >= min(g.degree(p[0]), g.degree(p[-1])) + 1


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_bound_exhaustive_small(n):
    for g in enumerate_labeled_graphs(n, is_two_connected):
        trace = []
        c = dirac_cycle(g, trace)
        assert c.is_valid(g) and len(c) >= bound(g)
        assert not any("search" in step for step in trace)


def test_bound_on_fixtures(fixture_graphs):
    for graphs in fixture_graphs.values():
        for g in graphs:
            c = dirac_cycle(g)
            assert c.is_valid(g) and len(c) >= bound(g)


def test_bound_on_random_larger_graphs():
    rng = random.Random(11)
    done = 0
    while done < 40:
        g = random_graph(rng.randint(10, 16), rng.uniform(0.2, 0.5), rng)
        if not is_two_connected(g):
            continue
        done += 1
        c = dirac_cycle(g)
        assert c.is_valid(g) and len(c) >= bound(g)
