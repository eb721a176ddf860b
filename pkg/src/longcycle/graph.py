"""Core graph types: simple undirected graphs, paths, cycles, join certificates.

Adjacency is stored as one int bitmask per vertex, so membership tests and
neighbourhood intersections are single integer operations. Vertices are the
integers ``0..n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal, Sequence

from ._bits import bits_of, iter_bits
from .errors import EmptyGraph, LoopEdge, NotOnPath, OrderViolation, VertexOutOfRange

MAX_VERTICES = 62

Bounds = Literal["closed", "left-open", "right-open", "open"]


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        # Skips validation; callers guarantee symmetry and no loops.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def is_consistent(self) -> bool:
        """Symmetric and irreflexive adjacency within range."""
        full = self.all_vertices
        for u, row in enumerate(self.adj):
            if row >> u & 1 or row & ~full:
                return False
            for v in iter_bits(row):
                if not self.adj[v] >> u & 1:
                    return False
        return True

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return from_edge_list(self.n, list(self.edges()) + list(pairs))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0 or n > MAX_VERTICES:
        raise VertexOutOfRange(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, adj)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraph("minimum degree of the empty graph is undefined")
    return min(a.bit_count() for a in g.adj)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` (h shifted by g.n) plus every cross edge."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise VertexOutOfRange(f"join would have {n} vertices")
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    adj = [row | h_mask for row in g.adj]
    adj += [(row << g.n) | g_mask for row in h.adj]
    return Graph._trusted(n, adj)


def _check_walk(g: Graph, vertices: Sequence[int], closed: bool) -> bool:
    seen = 0
    for v in vertices:
        if not 0 <= v < g.n or seen >> v & 1:
            return False
        seen |= 1 << v
    pairs = zip(vertices, vertices[1:])
    if not all(g.adj[a] >> b & 1 for a, b in pairs):
        return False
    return not closed or bool(g.adj[vertices[-1]] >> vertices[0] & 1)


@dataclass(frozen=True, slots=True)
class Path:
    vertices: tuple[int, ...]

    def __init__(self, vertices: Iterable[int]):
        object.__setattr__(self, "vertices", tuple(vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    @property
    def length(self) -> int:
        """Number of edges."""
        return max(len(self.vertices) - 1, 0)

    @property
    def mask(self) -> int:
        return bits_of(self.vertices)

    def reversed(self) -> "Path":
        return Path(self.vertices[::-1])

    def is_valid(self, g: Graph) -> bool:
        return len(self.vertices) >= 1 and _check_walk(g, self.vertices, closed=False)


@dataclass(frozen=True, slots=True)
class Cycle:
    """Cyclically ordered distinct vertices; ``len`` is the cycle length."""

    vertices: tuple[int, ...]
    _pos: dict = field(default=None, compare=False, hash=False, repr=False)

    def __init__(self, vertices: Iterable[int]):
        vs = tuple(vertices)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(vs)})

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    @property
    def mask(self) -> int:
        return bits_of(self.vertices)

    def index(self, v: int) -> int:
        return self._pos[v]

    def succ(self, v: int) -> int:
        vs = self.vertices
        return vs[(self._pos[v] + 1) % len(vs)]

    def pred(self, v: int) -> int:
        vs = self.vertices
        return vs[self._pos[v] - 1]

    def arc(self, u: int, v: int) -> list[int]:
        """Vertices from ``u`` forward to ``v``, both included."""
        vs = self.vertices
        i, j = self._pos[u], self._pos[v]
        if i <= j:
            return list(vs[i : j + 1])
        return list(vs[i:] + vs[: j + 1])

    def reversed(self) -> "Cycle":
        return Cycle(self.vertices[::-1])

    def rotated_to(self, v: int) -> "Cycle":
        i = self._pos[v]
        return Cycle(self.vertices[i:] + self.vertices[:i])

    def is_valid(self, g: Graph) -> bool:
        return len(self.vertices) >= 3 and _check_walk(g, self.vertices, closed=True)


@dataclass(frozen=True, slots=True)
class JoinCertificate:
    """Witness that a graph is (some graph on ``hub``) joined with an edgeless ``independent``."""

    hub: tuple[int, ...]
    independent: tuple[int, ...]

    def __init__(self, hub: Iterable[int], independent: Iterable[int]):
        object.__setattr__(self, "hub", tuple(sorted(hub)))
        object.__setattr__(self, "independent", tuple(sorted(independent)))

    @property
    def delta(self) -> int:
        return len(self.hub)

    @property
    def m(self) -> int:
        return len(self.independent)

    def is_valid(self, g: Graph) -> bool:
        hub, ind = bits_of(self.hub), bits_of(self.independent)
        if len(set(self.hub)) != len(self.hub) or len(set(self.independent)) != len(self.independent):
            return False
        if hub & ind or hub | ind != g.all_vertices:
            return False
        for v in self.independent:
            if g.adj[v] & ind or g.adj[v] & hub != hub:
                return False
        return self.m > len(self.hub)


def path_slice(p: Path | Sequence[int], i: int, j: int, bounds: Bounds = "closed") -> Path:
    vs = tuple(p)
    try:
        a, b = vs.index(i), vs.index(j)
    except ValueError as exc:
        raise NotOnPath(f"{i} or {j} not on path") from exc
    if a > b:
        raise OrderViolation(f"{i} occurs after {j}")
    if bounds in ("left-open", "open"):
        a += 1
    if bounds in ("right-open", "open"):
        b -= 1
    if bounds not in ("closed", "left-open", "right-open", "open"):
        raise ValueError(f"unknown bounds {bounds!r}")
    return Path(vs[a : b + 1])
