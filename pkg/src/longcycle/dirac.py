"""Constructive cycles of length at least ``min(n, 2 * min_degree)`` in 2-connected graphs."""

from __future__ import annotations

import logging

from .connectivity import is_two_connected
from .errors import NotTwoConnected, TheoremViolation
from .frame import build_frame, reentry_step, short_segment_step
from .graph import Cycle, Graph, Path, min_degree
from .surgery import DEFAULT_SEARCH_BUDGET, bridge_improve, longer_cycle_search, longest_attached_path

log = logging.getLogger(__name__)


def maximal_path(g: Graph, start: int = 0) -> list[int]:
    """Greedy path extended at both ends (lowest id first) until no end has a new neighbour."""
    adj = g.adj
    path = [start]
    used = 1 << start
    for _ in range(2):
        while True:
            free = adj[path[-1]] & ~used
            if not free:
                break
            w = (free & -free).bit_length() - 1
            path.append(w)
            used |= 1 << w
        path.reverse()
    return path


def crossing_cycle(g: Graph, path: list[int]) -> Cycle:
    """Cycle from the endpoint neighbourhoods of a maximal path.

    With a crossing pair (``v_0 ~ v_i``, ``v_L ~ v_j``, ``j < i``) of minimal
    gap, the cycle ``v_0..v_j v_L..v_i`` holds every neighbour of both ends.
    Without one, fall back to the cycle closed by ``v_0``'s farthest neighbour.
    """
    adj = g.adj
    last = len(path) - 1
    head, tail = path[0], path[-1]
    a_idx = [i for i in range(1, last + 1) if adj[head] >> path[i] & 1]
    b_idx = [j for j in range(0, last) if adj[tail] >> path[j] & 1]
    best = None
    for i in a_idx:
        for j in b_idx:
            if j < i and (best is None or i - j < best[0] - best[1]):
                best = (i, j)
    if best is not None:
        i, j = best
        return Cycle(path[: j + 1] + path[i:][::-1])
    return Cycle(path[: a_idx[-1] + 1])


def extend_cycle(g: Graph, c: Cycle, budget: int = DEFAULT_SEARCH_BUDGET) -> tuple[Cycle, str]:
    """One strictly longer cycle than a non-Hamiltonian ``c`` with ``len(c) < 2 * min_degree``.

    Uses the longest attached path: if its far end ``x`` sees the cycle only at
    ``y`` the path is rerouted; otherwise ``x``'s attachments cut the cycle into
    segments and counting forces one of them to be short enough to splice or swap.
    """
    p = longest_attached_path(g, c, budget)
    x, y = p[0], p[-1]
    out, step = None, ""
    if not g.adj[x] & c.mask & ~(1 << y):
        out, step = reentry_step(g, c, p)
        if isinstance(out, Path):
            p, out = out, None
    if out is None:
        out, step = short_segment_step(g, c, build_frame(g, c, p))
    if out:
        return out, step
    out = bridge_improve(g, c, budget)
    if out:
        log.info("extension fell back to bridge search (%s)", list(c))
        return out, "bridge-search"
    out = longer_cycle_search(g, c, budget)
    if out:
        log.info("extension fell back to exhaustive search (%s)", list(c))
        return out, "exhaustive-search"
    raise TheoremViolation("no longer cycle found below the degree bound", graph=g, stage="dirac")


def dirac_cycle(g: Graph, trace: list[str] | None = None, budget: int = DEFAULT_SEARCH_BUDGET) -> Cycle:
    if not is_two_connected(g):
        raise NotTwoConnected("dirac_cycle needs a 2-connected graph")
    target = min(g.n, 2 * min_degree(g))
    c = crossing_cycle(g, maximal_path(g))
    if trace is not None:
        trace.append("crossing")
    while len(c) < target:
        c, step = extend_cycle(g, c, budget)
        if trace is not None:
            trace.append(step)
    return c
