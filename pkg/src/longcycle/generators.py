"""Named graphs, the extremal join family, random graphs and labeled enumeration."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable, Iterator, Literal

from .errors import BadParameters, BudgetExceeded
from .graph import Graph, from_edge_list, join

InnerPolicy = Literal["empty", "complete", "random"]

MAX_ENUMERATION_N = 7


def empty_graph(n: int) -> Graph:
    return Graph._trusted(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, [full ^ (1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParameters("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty_graph(a), empty_graph(b))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return from_edge_list(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def gen_join_family(
    delta: int,
    m: int,
    inner: InnerPolicy = "empty",
    seed: int | None = None,
    shuffle: bool = False,
) -> Graph:
    """A graph isomorphic to ``H ∨ N_m`` with ``|H| = delta``.

    The hub occupies vertices ``0..delta-1`` unless ``shuffle`` is set, in which
    case labels are permuted with the same seeded generator that draws random
    hub edges.
    """
    if delta < 2 or m <= delta:
        raise BadParameters(f"need delta >= 2 and m > delta, got delta={delta}, m={m}")
    rng = random.Random(seed)
    pairs = list(combinations(range(delta), 2))
    if inner == "empty":
        hub_edges = []
    elif inner == "complete":
        hub_edges = pairs
    elif inner == "random":
        hub_edges = [e for e in pairs if rng.random() < 0.5]
    else:
        raise BadParameters(f"unknown inner policy {inner!r}")
    g = join(from_edge_list(delta, hub_edges), empty_graph(m))
    if shuffle:
        perm = list(range(g.n))
        rng.shuffle(perm)
        g = relabel(g, perm)
    return g


def _chunk_tables(n: int, chunk: int = 7):
    pairs = list(combinations(range(n), 2))
    tables = []
    for start in range(0, len(pairs), chunk):
        group = pairs[start : start + chunk]
        table = []
        for value in range(1 << len(group)):
            adj = [0] * n
            for bit, (u, v) in enumerate(group):
                if value >> bit & 1:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
            table.append(adj)
        tables.append((start, len(group), table))
    return len(pairs), tables


def iter_labeled_adjacency(n: int, start: int = 0, stop: int | None = None) -> Iterator[tuple[int, list[int]]]:
    """Yield ``(edge_mask, adjacency rows)`` for labeled graphs with mask in ``[start, stop)``.

    Bit ``k`` of the mask is the k-th pair of ``combinations(range(n), 2)``.
    """
    if n > MAX_ENUMERATION_N:
        raise BudgetExceeded(f"labeled enumeration is limited to n <= {MAX_ENUMERATION_N}")
    total, tables = _chunk_tables(n)
    stop = 1 << total if stop is None else stop
    if total == 0:
        if start < stop:
            yield 0, [0] * n
        return
    rows = range(n)
    for mask in range(start, stop):
        adj = [0] * n
        for offset, width, table in tables:
            part = table[(mask >> offset) & ((1 << width) - 1)]
            adj = [adj[i] | part[i] for i in rows]
        yield mask, adj


def enumerate_labeled_graphs(n: int, filter: Callable[[Graph], bool] | None = None) -> Iterator[Graph]:
    for _, adj in iter_labeled_adjacency(n):
        g = Graph._trusted(n, adj)
        if filter is None or filter(g):
            yield g
