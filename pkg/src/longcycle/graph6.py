"""graph6 reading and writing (short form, n <= 62).

Upper-triangle adjacency bits are taken column by column
(``(0,1), (0,2), (1,2), (0,3), ...``), packed big-endian into 6-bit groups,
zero padded, and each group offset by 63.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import MalformedHeader, NonAsciiByte, TooLarge, TruncatedBits
from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


def _data_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise MalformedHeader("empty graph6 line")
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise NonAsciiByte(f"non-ascii character in {text!r}") from exc
    if any(b < 63 or b > 126 for b in data):
        raise NonAsciiByte(f"byte outside 63..126 in {text!r}")
    n = data[0] - 63
    if n > MAX_VERTICES:
        raise MalformedHeader("long-form headers (n > 62) are not supported")
    body = data[1:]
    need = _data_length(n)
    if len(body) < need:
        raise TruncatedBits(f"expected {need} data bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise MalformedHeader(f"{len(body) - need} trailing bytes after graph data")

    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    total = 6 * need
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits >> (total - 1 - k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph._trusted(n, adj)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_VERTICES:
        raise TooLarge(f"n={n} needs the long graph6 form")
    need = _data_length(n)
    bits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            bits = (bits << 1) | (row >> i & 1)
    bits <<= 6 * need - n * (n - 1) // 2
    out = [chr(n + 63)]
    for shift in range(6 * (need - 1), -1, -6):
        out.append(chr(((bits >> shift) & 63) + 63))
    return "".join(out)


def read_graph6(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` for every non-blank line, header-only lines skipped."""
    for number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if text.startswith(HEADER):
            text = text[len(HEADER):]
        if text:
            yield number, text


def write_graph6(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(encode_graph6(g) + "\n")
