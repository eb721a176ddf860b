"""Articulation points, 2-connectivity, and width-2 Menger fans."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from ._bits import bits_of, iter_bits
from .errors import Disconnected, NoFan
from .graph import Graph, Path


def reachable(g: Graph, start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside the vertex set ``allowed``."""
    seen = frontier = 1 << start
    adj = g.adj
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    full = g.all_vertices
    return reachable(g, 0, full) == full


def cut_vertices(g: Graph) -> set[int]:
    """Articulation vertices by one iterative low-link DFS."""
    if not is_connected(g):
        raise Disconnected("cut vertices are defined here for connected graphs only")
    n = g.n
    if n <= 2:
        return set()
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    root = 0
    disc[root] = low[root] = 0
    clock = 1
    root_children = 0
    # Each frame: vertex, parent, remaining neighbour mask.
    stack = [(root, -1, g.adj[root])]
    while stack:
        v, parent, rest = stack[-1]
        if rest:
            w = (rest & -rest).bit_length() - 1
            stack[-1] = (v, parent, rest & (rest - 1))
            if disc[w] == -1:
                disc[w] = low[w] = clock
                clock += 1
                if v == root:
                    root_children += 1
                stack.append((w, v, g.adj[w]))
            elif w != parent and disc[w] < low[v]:
                low[v] = disc[w]
            continue
        stack.pop()
        if parent >= 0:
            if low[v] < low[parent]:
                low[parent] = low[v]
            if parent != root and low[v] >= disc[parent]:
                cuts.add(parent)
    if root_children > 1:
        cuts.add(root)
    return cuts


@lru_cache(maxsize=256)
def is_two_connected(g: Graph) -> bool:
    if g.n < 3 or min(a.bit_count() for a in g.adj) < 2:
        return False
    if not is_connected(g):
        return False
    return not cut_vertices(g)


@dataclass(frozen=True, slots=True)
class TwoFan:
    apex: int
    q1: Path
    q2: Path

    @property
    def feet(self) -> tuple[int, int]:
        return self.q1[-1], self.q2[-1]

    def is_valid(self, g: Graph, target: int) -> bool:
        a, b = self.q1.vertices, self.q2.vertices
        if not (self.q1.is_valid(g) and self.q2.is_valid(g)):
            return False
        if a[0] != self.apex or b[0] != self.apex or a[-1] == b[-1]:
            return False
        if set(a) & set(b) != {self.apex}:
            return False
        if not (target >> a[-1] & 1 and target >> b[-1] & 1):
            return False
        inner = bits_of(a[:-1]) | bits_of(b[:-1])
        return not inner & target


def two_fan(g: Graph, z: int, target: set[int] | frozenset[int] | int) -> TwoFan:
    """Two paths from ``z`` to distinct vertices of ``target``, sharing only ``z``.

    Unit vertex capacities, every target vertex wired to one super-sink, two
    BFS augmentations exploring neighbours in increasing id order.
    """
    tmask = target if isinstance(target, int) else bits_of(target)
    if tmask >> z & 1:
        raise NoFan("apex lies in the target set")
    if tmask.bit_count() < 2:
        raise NoFan("target set needs at least two vertices")

    n = g.n
    sink = 2 * n
    source = 2 * z + 1
    cap: dict[int, dict[int, int]] = {u: {} for u in range(2 * n + 1)}

    def arc(a: int, b: int) -> None:
        cap[a][b] = cap[a].get(b, 0) + 1
        cap[b].setdefault(a, 0)

    for v in range(n):
        if v == z:
            continue
        if tmask >> v & 1:
            arc(2 * v, sink)
        else:
            arc(2 * v, 2 * v + 1)
    for u in range(n):
        if tmask >> u & 1:
            continue
        for v in iter_bits(g.adj[u]):
            if v != z:
                arc(2 * u + 1, 2 * v)

    original = {a: dict(row) for a, row in cap.items()}
    for _ in range(2):
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in sorted(cap[a]):
                if cap[a][b] > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            raise NoFan(f"fewer than two disjoint paths from {z}; graph is not 2-connected")
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a

    def flow(a: int, b: int) -> int:
        return original[a].get(b, 0) - cap[a][b]

    paths = []
    used: set[tuple[int, int]] = set()
    for _ in range(2):
        walk = [z]
        node = source
        while node != sink:
            nxt = next(b for b in sorted(cap[node]) if (node, b) not in used and flow(node, b) > 0)
            used.add((node, nxt))
            if nxt != sink and nxt % 2 == 0:
                walk.append(nxt // 2)
            node = nxt
        paths.append(Path(walk))
    paths.sort(key=lambda p: p[-1])
    return TwoFan(z, paths[0], paths[1])
