import random
from itertools import combinations

import networkx as nx
import pytest

from longcycle._bits import bits_of
from longcycle.connectivity import cut_vertices, is_two_connected, two_fan
from longcycle.errors import Disconnected, NoFan
from longcycle.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    enumerate_labeled_graphs,
    gen_join_family,
    path_graph,
    random_graph,
)
from longcycle.graph import from_edge_list
from longcycle.oracles import longest_cycle_exact

from oracles import brute_cut_vertices, brute_two_connected, max_vertex_disjoint_paths


def test_cut_vertices_examples():
    assert cut_vertices(path_graph(3)) == {1}
    assert cut_vertices(cycle_graph(5)) == set()
    bowtie = from_edge_list(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert cut_vertices(bowtie) == {2}


def test_cut_vertices_disconnected():
    with pytest.raises(Disconnected):
        cut_vertices(from_edge_list(4, [(0, 1), (2, 3)]))


def test_is_two_connected_examples():
    assert is_two_connected(complete_graph(4))
    assert not is_two_connected(path_graph(4))
    assert is_two_connected(complete_bipartite(2, 3))
    assert not is_two_connected(complete_graph(2))


@pytest.mark.parametrize("n", range(1, 7))
def test_two_connectivity_matches_brute_force(n):
    for g in enumerate_labeled_graphs(n):
        assert is_two_connected(g) == brute_two_connected(g)


def test_cut_vertices_match_networkx_and_brute_force():
    rng = random.Random(3)
    checked = 0
    while checked < 300:
        g = random_graph(rng.randint(3, 14), rng.uniform(0.1, 0.5), rng)
        h = nx.Graph(list(g.edges()))
        h.add_nodes_from(range(g.n))
        if not nx.is_connected(h):
            continue
        checked += 1
        found = cut_vertices(g)
        assert found == set(nx.articulation_points(h)) == brute_cut_vertices(g)


def test_fan_k4():
    fan = two_fan(complete_graph(4), 3, {0, 1, 2})
    assert [list(fan.q1), list(fan.q2)] == [[3, 0], [3, 1]]
    assert fan.is_valid(complete_graph(4), bits_of({0, 1, 2}))


def test_fan_c6_with_chord():
    # 4-cycle target 0-1-2-3 inside C6 plus chord 0-3; apex 4 reaches it only via 3 and via 5-0.
    g = from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    fan = two_fan(g, 4, {0, 1, 2, 3})
    assert set(fan.feet) == {0, 3}
    assert fan.is_valid(g, bits_of({0, 1, 2, 3}))
    assert max_vertex_disjoint_paths(g, 4, {0, 1, 2, 3}) == 2


@pytest.mark.parametrize("delta, m", [(2, 3), (3, 4), (3, 6), (4, 5)])
def test_fan_in_join_lands_on_hub(delta, m):
    g = gen_join_family(delta, m, "random", seed=delta * m)
    c = longest_cycle_exact(g)
    assert len(c) == 2 * delta
    hub = set(range(delta))
    for z in set(range(g.n)) - set(c):
        fan = two_fan(g, z, set(c))
        assert fan.is_valid(g, c.mask)
        assert set(fan.feet) <= hub


def test_fan_precondition_errors():
    g = complete_graph(4)
    with pytest.raises(NoFan):
        two_fan(g, 0, {0, 1})
    with pytest.raises(NoFan):
        two_fan(g, 0, {1})
    with pytest.raises(NoFan):
        two_fan(path_graph(4), 0, {2, 3})


def test_fan_deterministic():
    g = gen_join_family(3, 5, "random", seed=11, shuffle=True)
    assert two_fan(g, 0, {3, 4, 5}) == two_fan(g, 0, {3, 4, 5})


@pytest.mark.parametrize("n", [3, 4, 5])
def test_fan_exists_for_every_target(n):
    for g in enumerate_labeled_graphs(n, is_two_connected):
        for z in range(n):
            rest = [v for v in range(n) if v != z]
            for size in range(2, n):
                for target in combinations(rest, size):
                    fan = two_fan(g, z, set(target))
                    assert fan.is_valid(g, bits_of(target))


@pytest.mark.parametrize("n", [6, 7])
def test_fan_exists_sampled_targets(n):
    rng = random.Random(n)
    graphs = list(enumerate_labeled_graphs(6, is_two_connected)) if n == 6 else None
    for _ in range(1500):
        if graphs is not None:
            g = rng.choice(graphs)
        else:
            g = random_graph(7, rng.uniform(0.3, 0.8), rng)
            if not is_two_connected(g):
                continue
        z = rng.randrange(g.n)
        rest = [v for v in range(g.n) if v != z]
        target = rng.sample(rest, rng.randint(2, len(rest)))
        assert two_fan(g, z, set(target)).is_valid(g, bits_of(target))
