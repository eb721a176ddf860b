"""The attachment frame of an off-cycle path and the improvement steps built on it."""

from __future__ import annotations

from dataclasses import dataclass

from ._bits import iter_bits, lowest
from .graph import Cycle, Graph, Path
from .surgery import (
    NotApplicable,
    SurgeryOutcome,
    reentry_cycle,
    segment_swap,
    splice_consecutive,
)


@dataclass(frozen=True)
class AttachmentFrame:
    """How the far end ``x`` of a longest attached path ``p`` sees the cycle.

    ``attachments`` are the neighbours of ``x`` on the cycle other than ``y``,
    in forward cyclic order starting just after ``y``. ``segments[i]`` is the
    forward arc from the i-th hub vertex to the next one, where the hub is
    ``attachments + (y,)``; ``flank[i]`` is the vertex following the i-th hub
    vertex on its segment (``None`` for a bare edge).
    """

    x: int
    p: Path
    y: int
    attachments: tuple[int, ...]
    segments: tuple[tuple[int, ...], ...]
    flank: tuple[int | None, ...]

    @property
    def k(self) -> int:
        return len(self.attachments)

    @property
    def hub(self) -> tuple[int, ...]:
        return self.attachments + (self.y,)

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "path": list(self.p),
            "y": self.y,
            "attachments": list(self.attachments),
            "segments": [list(s) for s in self.segments],
            "flank": list(self.flank),
            "k": self.k,
        }


def build_frame(g: Graph, c: Cycle, p: Path) -> AttachmentFrame:
    x, y = p[0], p[-1]
    size = len(c)
    base = c.index(y)
    near = [v for v in c.vertices if v != y and g.has_edge(x, v)]
    if not near:
        raise ValueError(f"{x} has no neighbour on the cycle besides {y}")
    near.sort(key=lambda v: (c.index(v) - base) % size)
    hub = near + [y]
    segments = tuple(tuple(c.arc(hub[i], hub[(i + 1) % len(hub)])) for i in range(len(hub)))
    flank = tuple(seg[1] if len(seg) > 2 else None for seg in segments)
    return AttachmentFrame(x, p, y, tuple(near), segments, flank)


def _link_to_cycle(g: Graph, start: int, goal: int, allowed: int) -> list[int] | None:
    """Shortest path from ``start`` to some vertex of ``goal`` with interior in ``allowed``."""
    parent = {start: start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            hits = g.adj[v] & goal
            if hits:
                path = [lowest(hits), v]
                while path[-1] != start:
                    path.append(parent[path[-1]])
                return path
            for w in iter_bits(g.adj[v] & allowed):
                if w not in parent:
                    parent[w] = v
                    nxt.append(w)
        frontier = nxt
    return None


def reentry_anchor(g: Graph, c: Cycle, p: Path) -> tuple[int, int, int, list[int]] | None:
    """``(z, z_prime, u_x, link)`` for rerouting ``p`` when ``x`` only sees ``p``.

    ``z`` is the first vertex of ``p`` (from ``x``) joined to some ``z_prime``
    on the cycle other than ``y`` by ``link`` (``z_prime`` first, ``z`` last),
    whose interior avoids both the cycle and ``p``; a direct edge is the usual
    case. ``u_x`` is the first neighbour of ``x`` after ``z``. Returns ``None``
    when ``x`` has no neighbour beyond ``z``.
    """
    vs = p.vertices
    x, y = vs[0], vs[-1]
    others = c.mask & ~(1 << y)
    free = g.all_vertices & ~c.mask & ~p.mask
    for s in range(1, len(vs) - 1):
        link = _link_to_cycle(g, vs[s], others, free)
        if link is None:
            continue
        for t in range(s + 1, len(vs)):
            if g.has_edge(x, vs[t]):
                return vs[s], link[0], vs[t], link
        return None
    return None


def short_segment_step(g: Graph, c: Cycle, frame: AttachmentFrame) -> tuple[SurgeryOutcome, str]:
    """Splice across a bare segment, else swap a segment at ``y`` shorter than ``p``."""
    x, y = frame.x, frame.y
    for seg in frame.segments:
        if len(seg) == 2:
            out = splice_consecutive(g, c, x, seg[0], seg[1])
            if out:
                return out, "splice-segment"
    for attach in dict.fromkeys((frame.attachments[-1], frame.attachments[0])):
        out = segment_swap(g, c, frame.p, attach, y)
        if out:
            return out, "segment-swap"
    return NotApplicable("segments-long-enough"), ""


def rotations(g: Graph, p: Path, limit: int = 256) -> list[Path]:
    """Paths reachable from ``p`` by rotations at the off-cycle end, keeping ``y`` fixed.

    Rotating at a neighbour ``p[j]`` of the end gives ``p[j-1] .. p[0] p[j] .. p[-1]``:
    same vertex set, same length, new far end. Breadth-first, ``p`` itself first.
    """
    seen = {p.vertices}
    order = [p]
    i = 0
    while i < len(order) and len(order) < limit:
        vs = order[i].vertices
        i += 1
        x = vs[0]
        for j in range(2, len(vs)):
            if g.has_edge(x, vs[j]):
                rotated = vs[j - 1 :: -1] + vs[j:]
                if rotated not in seen:
                    seen.add(rotated)
                    order.append(Path(rotated))
    return order


def reentry_step(g: Graph, c: Cycle, p: Path) -> tuple[SurgeryOutcome | Path, str]:
    """Reroute ``p`` when its end sees the cycle only at ``y``.

    Tries ``p`` and then its rotations. A rotation whose new end does see the
    cycle elsewhere is returned as a ``Path`` so the caller can build a frame on it.
    """
    y = p[-1]
    others = c.mask & ~(1 << y)
    for q in rotations(g, p):
        if g.adj[q[0]] & others:
            return q, "rotate"
        anchor = reentry_anchor(g, c, q)
        if anchor is None:
            continue
        z, z_prime, u_x, link = anchor
        out = reentry_cycle(g, c, q, z, z_prime, u_x, link)
        if out:
            return out, "reentry" if q is p else "rotate-reentry"
    return NotApplicable("no-reentry-anchor"), ""
