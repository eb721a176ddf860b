"""Local cycle surgeries: each either returns a strictly longer cycle or says why not.

None of these mutate their inputs. A successful surgery returns a fresh
:class:`Cycle` that has been validated against the host graph; a failed one
returns a falsy :class:`NotApplicable` carrying a reason code, so callers can
write ``if out := splice_consecutive(...)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from ._bits import iter_bits, lowest
from .errors import BudgetExceeded
from .graph import Cycle, Graph, Path

log = logging.getLogger(__name__)

DEFAULT_SEARCH_BUDGET = 200_000


@dataclass(frozen=True, slots=True)
class NotApplicable:
    reason: str

    def __bool__(self) -> bool:
        return False


SurgeryOutcome = Cycle | NotApplicable


def _accept(g: Graph, c: Cycle, vertices: Sequence[int], reason: str = "construction-invalid") -> SurgeryOutcome:
    new = Cycle(vertices)
    if len(new) > len(c) and new.is_valid(g):
        return new
    return NotApplicable(reason)


def _replace_arc(c: Cycle, bridge: Sequence[int]) -> list[int]:
    """Cycle through ``bridge`` (u..v) plus the forward arc from v back to u.

    This drops the interior of the forward arc from u to v.
    """
    u, v = bridge[0], bridge[-1]
    return list(bridge) + c.arc(v, u)[1:-1]


def _off_cycle(c: Cycle, vertices: Sequence[int]) -> bool:
    return all(v not in c for v in vertices)


def splice_bridge(g: Graph, c: Cycle, bridge: Sequence[int]) -> SurgeryOutcome:
    """Replace the cycle edge between the bridge's consecutive endpoints by the bridge."""
    if len(c) == g.n:
        return NotApplicable("already-hamiltonian")
    u, v = bridge[0], bridge[-1]
    if len(bridge) < 3 or u not in c or v not in c or not _off_cycle(c, bridge[1:-1]):
        return NotApplicable("not-a-bridge")
    if c.succ(u) == v:
        return _accept(g, c, _replace_arc(c, bridge))
    if c.succ(v) == u:
        return _accept(g, c, _replace_arc(c, bridge[::-1]))
    return NotApplicable("ends-not-consecutive")


def splice_consecutive(g: Graph, c: Cycle, z: int, z1: int, z2: int) -> SurgeryOutcome:
    if z in c:
        return NotApplicable("apex-on-cycle")
    if not (g.has_edge(z, z1) and g.has_edge(z, z2)):
        return NotApplicable("apex-not-adjacent")
    return splice_bridge(g, c, [z1, z, z2])


def reentry_cycle(
    g: Graph,
    c: Cycle,
    p: Path,
    z: int,
    z_prime: int,
    u_x: int,
    link: Sequence[int] | None = None,
) -> SurgeryOutcome:
    """Cycle made of the longer ``c``-arc between ``z_prime`` and ``y`` and a rerouted ``p``.

    ``p`` runs from ``x`` (off the cycle) to ``y`` on the cycle and holds every
    neighbour of ``x``. The rerouted path is ``z_prime z`` (or ``link``, a path
    from ``z_prime`` to ``z`` through vertices off both ``c`` and ``p``), then
    ``p`` backwards from ``z`` to ``x``, the chord ``x u_x``, and ``p`` forward
    from ``u_x`` to ``y``.
    """
    if len(c) == g.n:
        return NotApplicable("already-hamiltonian")
    vs = p.vertices
    x, y = vs[0], vs[-1]
    if y not in c or not _off_cycle(c, vs[:-1]):
        return NotApplicable("path-not-attached")
    if g.adj[x] & c.mask & ~(1 << y):
        return NotApplicable("x-has-cycle-neighbour")
    if z not in vs or u_x not in vs or z_prime not in c or z_prime == y:
        return NotApplicable("bad-anchor")
    link = [z_prime, z] if link is None else list(link)
    if link[0] != z_prime or link[-1] != z or not _off_cycle(c, link[1:]) or set(link[1:-1]) & set(vs):
        return NotApplicable("bad-link")
    s, t = vs.index(z), vs.index(u_x)
    if not (0 < s < t) or not g.has_edge(x, u_x):
        return NotApplicable("bad-anchor")
    rerouted = [*link[:-1], *vs[s::-1], *vs[t:]]
    forward = c.arc(y, z_prime)
    backward = c.arc(z_prime, y)
    if len(forward) >= len(backward):
        tail = forward[1:-1]
    else:
        tail = backward[::-1][1:-1]
    return _accept(g, c, rerouted + tail)


def detour_cycle(g: Graph, c: Cycle, x: int, xi: int, xj: int, q: Path) -> SurgeryOutcome:
    """Drop edges ``xi ai`` and ``xj aj``, add ``xj x xi`` and the path ``q`` between ``ai`` and ``aj``.

    ``ai``/``aj`` are the neighbours of ``xi``/``xj`` in one common rotational
    direction; both directions are tried.
    """
    if len(c) == g.n:
        return NotApplicable("already-hamiltonian")
    if x in c or xi not in c or xj not in c or xi == xj:
        return NotApplicable("bad-attachments")
    if not (g.has_edge(x, xi) and g.has_edge(x, xj)):
        return NotApplicable("x-not-adjacent")
    qs = q.vertices
    if len(qs) < 2 or qs[0] == qs[-1]:
        return NotApplicable("degenerate-path")
    if not _off_cycle(c, qs[1:-1]) or x in qs:
        return NotApplicable("path-hits-forbidden")
    ends = {qs[0], qs[-1]}
    for oriented in (c, c.reversed()):
        ai, aj = oriented.succ(xi), oriented.succ(xj)
        if {ai, aj} != ends or ai in (xi, xj) or aj in (xi, xj):
            continue
        inner = qs[1:-1] if qs[-1] == ai else qs[::-1][1:-1]
        vertices = oriented.arc(ai, xj) + [x] + oriented.arc(aj, xi)[::-1] + list(inner)
        out = _accept(g, c, vertices)
        if out:
            return out
    return NotApplicable("ends-not-flanking")


def segment_swap(g: Graph, c: Cycle, p: Path, attach: int, y: int) -> SurgeryOutcome:
    """Replace a short ``c``-arc between ``attach`` and ``y`` by ``attach x ... y``."""
    if len(c) == g.n:
        return NotApplicable("already-hamiltonian")
    vs = p.vertices
    if vs[-1] != y or y not in c or attach not in c or attach == y:
        return NotApplicable("bad-endpoints")
    x = vs[0]
    if not _off_cycle(c, vs[:-1]) or not g.has_edge(x, attach):
        return NotApplicable("path-not-attached")
    bridge = [attach, *vs]
    others = g.adj[x] & ~(1 << attach) & ~(1 << y)
    candidates = []
    for oriented in (c, c.reversed()):
        arc = oriented.arc(attach, y)
        interior = arc[1:-1]
        if not any(others >> v & 1 for v in interior):
            candidates.append((len(interior), oriented))
    if not candidates:
        return NotApplicable("arc-holds-attachments")
    candidates.sort(key=lambda item: item[0])
    size, oriented = candidates[0]
    if size >= p.length:
        return NotApplicable("arc-not-shorter")
    return _accept(g, c, _replace_arc(oriented, bridge))


def pair_reroute_cycle(g: Graph, c: Cycle, a: int, x: int, u: int) -> SurgeryOutcome:
    """Swap the cycle vertex ``a`` for the off-cycle edge ``x u`` (either orientation)."""
    if len(c) == g.n:
        return NotApplicable("already-hamiltonian")
    if a not in c or x in c or u in c or not g.has_edge(x, u):
        return NotApplicable("bad-vertices")
    s1, s2 = c.pred(a), c.succ(a)
    for first, second in ((u, x), (x, u)):
        if g.has_edge(s1, first) and g.has_edge(second, s2):
            out = _accept(g, c, _replace_arc(c, [s1, first, second, s2]))
            if out:
                log.debug("pair reroute at %d used order %d-%d", a, first, second)
                return out
    return NotApplicable("no-orientation-validates")


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("path search budget exhausted")


def longest_attached_path(g: Graph, c: Cycle, budget: int = DEFAULT_SEARCH_BUDGET) -> Path:
    """Longest path ending on ``c`` whose other vertices all avoid ``c``; oriented off-cycle end first.

    Depth-first, neighbours in increasing id order; the first path of maximum
    length wins.
    """
    cmask = c.mask
    off = g.all_vertices & ~cmask
    if not off:
        raise ValueError("cycle is Hamiltonian; no attached path exists")
    adj = g.adj
    meter = _Budget(budget)
    best: list[int] = []
    region_size = off.bit_count()

    def dfs(path: list[int], used: int) -> bool:
        nonlocal best
        meter.spend()
        if len(path) > len(best):
            best = path.copy()
            if len(best) == region_size:
                return True
        for w in iter_bits(adj[path[-1]] & off & ~used):
            path.append(w)
            if dfs(path, used | 1 << w):
                return True
            path.pop()
        return False

    chosen_start = None
    for w in iter_bits(off):
        if not adj[w] & cmask:
            continue
        before = len(best)
        done = dfs([w], 1 << w)
        if len(best) > before:
            chosen_start = w
        if done:
            break
    if chosen_start is None:
        raise ValueError("no off-cycle vertex touches the cycle")
    y = lowest(adj[best[0]] & cmask)
    return Path(best[::-1] + [y])


def bridge_improve(g: Graph, c: Cycle, budget: int = DEFAULT_SEARCH_BUDGET) -> SurgeryOutcome:
    """Any path between two cycle vertices through off-cycle vertices that beats the shorter arc."""
    if len(c) == g.n:
        return NotApplicable("already-hamiltonian")
    cmask = c.mask
    off = g.all_vertices & ~cmask
    adj = g.adj
    meter = _Budget(budget)
    size = len(c)

    def dfs(path: list[int], used: int):
        meter.spend()
        tip = path[-1]
        if len(path) >= 2:
            u = path[0]
            for v in iter_bits(adj[tip] & cmask & ~(1 << u)):
                forward = (c.index(v) - c.index(u)) % size - 1
                backward = size - 2 - forward
                interior = len(path) - 1
                if interior > min(forward, backward):
                    oriented = c if forward <= backward else c.reversed()
                    return _replace_arc(oriented, path + [v])
        for w in iter_bits(adj[tip] & off & ~used):
            path.append(w)
            found = dfs(path, used | 1 << w)
            if found:
                return found
            path.pop()
        return None

    for u in c.vertices:
        for w in iter_bits(adj[u] & off):
            found = dfs([u, w], 1 << w)
            if found:
                return _accept(g, c, found)
    return NotApplicable("no-improving-bridge")


def longer_cycle_search(g: Graph, c: Cycle, budget: int = DEFAULT_SEARCH_BUDGET) -> SurgeryOutcome:
    """Depth-first search for any cycle longer than ``c``; last-resort fallback."""
    if len(c) == g.n:
        return NotApplicable("already-hamiltonian")
    target = len(c) + 1
    adj = g.adj
    meter = _Budget(budget)

    def dfs(path: list[int], used: int, anchor: int, allowed: int):
        meter.spend()
        tip = path[-1]
        if len(path) >= target and adj[tip] >> anchor & 1:
            return path.copy()
        for w in iter_bits(adj[tip] & allowed & ~used):
            path.append(w)
            found = dfs(path, used | 1 << w, anchor, allowed)
            if found:
                return found
            path.pop()
        return None

    for s in range(g.n):
        allowed = g.all_vertices & ~((1 << (s + 1)) - 1)
        if allowed.bit_count() + 1 < target:
            break
        found = dfs([s], 1 << s, s, allowed)
        if found:
            return _accept(g, c, found)
    return NotApplicable("no-longer-cycle")
