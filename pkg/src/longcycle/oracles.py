"""Exact exponential-time cycle oracles (bitmask dynamic programming)."""

from __future__ import annotations

from functools import lru_cache

from ._bits import iter_bits, lowest
from .errors import BudgetExceeded
from .graph import Cycle, Graph

LONGEST_CYCLE_BUDGET = 14
HAMILTON_BUDGET = 16


def _walk_back(adj, reach, mask: int, end: int, start: int) -> list[int]:
    order = [end]
    while mask != 1 << start:
        prev_mask = mask ^ (1 << end)
        end = lowest(reach[prev_mask] & adj[end])
        mask = prev_mask
        order.append(end)
    order.reverse()
    return order


@lru_cache(maxsize=256)
def hamilton_cycle_exact(g: Graph) -> Cycle | None:
    """A Hamilton cycle of ``g``, or ``None`` when the graph is non-Hamiltonian.

    ``reach[mask]`` holds the end vertices of paths that start at vertex 0 and
    visit exactly ``mask``.
    """
    n = g.n
    if n > HAMILTON_BUDGET:
        raise BudgetExceeded(f"Hamilton oracle is limited to n <= {HAMILTON_BUDGET}")
    if n < 3:
        return None
    adj = g.adj
    full = (1 << n) - 1
    reach = [0] * (1 << n)
    reach[1] = 1
    others = range(1, n)
    for mask in range(1, full, 2):
        ends = reach[mask]
        if not ends:
            continue
        for w in others:
            bit = 1 << w
            if not mask & bit and adj[w] & ends:
                reach[mask | bit] |= bit
    closing = reach[full] & adj[0]
    if not closing:
        return None
    return Cycle(_walk_back(adj, reach, full, lowest(closing), 0))


def longest_cycle_exact(g: Graph) -> Cycle | None:
    """A maximum-length cycle, or ``None`` for a forest.

    Every cycle is counted once, from its minimum vertex (the anchor), over
    vertex subsets above the anchor.
    """
    n = g.n
    if n > LONGEST_CYCLE_BUDGET:
        raise BudgetExceeded(f"longest-cycle oracle is limited to n <= {LONGEST_CYCLE_BUDGET}")
    adj = g.adj
    best_len, best = 0, None
    for s in range(n - 2):
        anchor = 1 << s
        allowed = ((1 << n) - 1) & ~((anchor << 1) - 1)
        if (adj[s] & allowed).bit_count() < 2 or (allowed.bit_count() + 1) <= best_len:
            continue
        reach: dict[int, int] = {anchor: anchor}
        # Masks are processed in increasing order; each extension only grows the mask.
        pending = [anchor]
        while pending:
            nxt_layer = {}
            for mask in pending:
                ends = reach[mask]
                size = mask.bit_count()
                if size >= 3 and size > best_len:
                    closing = ends & adj[s]
                    if closing:
                        best_len, best = size, (s, mask, lowest(closing), reach)
                for w in iter_bits(allowed & ~mask):
                    if adj[w] & ends:
                        key = mask | (1 << w)
                        if key in reach:
                            reach[key] |= 1 << w
                        else:
                            reach[key] = 1 << w
                            nxt_layer[key] = True
            pending = list(nxt_layer)
        if best_len == n:
            break
    if best is None:
        return None
    s, mask, end, reach = best
    return Cycle(_walk_back(adj, reach, mask, end, s))


def circumference(g: Graph) -> int:
    c = longest_cycle_exact(g)
    return 0 if c is None else len(c)
