"""graph6 encoding and decoding for graphs on at most 64 vertices.

Format: a size prefix (one byte ``n + 63`` for ``n <= 62``, else ``~``
followed by three bytes of 6-bit big-endian ``n``), then the upper triangle
of the adjacency matrix in column order ``(0,1), (0,2), (1,2), (0,3), ...``
packed six bits per byte, zero padded, each byte offset by 63.
"""

from __future__ import annotations

from hereditary.graph import MAX_VERTICES, CapacityError, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the index of the offending character."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def _sixbits(text: str, i: int) -> int:
    c = ord(text[i])
    if not 63 <= c <= 126:
        raise Graph6Error(f"byte {c!r} outside graph6 range 63..126", i)
    return c - 63


def parse_graph6(text: str) -> Graph:
    s = text.rstrip("\r\n")
    start = 0
    if s.startswith(HEADER):
        start = len(HEADER)
    if len(s) <= start:
        raise Graph6Error("missing size byte", start)

    first = _sixbits(s, start)
    if first < 63:
        n, pos = first, start + 1
    else:
        if len(s) < start + 4:
            raise Graph6Error("truncated long size prefix", len(s))
        if ord(s[start + 1]) == 126:
            raise Graph6Error("graphs this large are not supported", start + 1)
        n = 0
        for k in range(1, 4):
            n = (n << 6) | _sixbits(s, start + k)
        pos = start + 4
        if n < 63:
            raise Graph6Error("non-minimal size prefix", start)
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 string encodes {n} vertices; at most {MAX_VERTICES} supported")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} adjacency bytes, found {len(body)}", len(s))
    if len(body) > nbytes:
        raise Graph6Error("trailing characters after adjacency data", pos + nbytes)

    bits = []
    for b in range(nbytes):
        word = _sixbits(s, pos + b)
        bits.extend(word >> shift & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bit", pos + nbytes - 1)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = [chr(126)] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    word = 0
    filled = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            word = (word << 1) | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(word + 63))
                word = filled = 0
    if filled:
        out.append(chr((word << (6 - filled)) + 63))
    return "".join(out)


def read_graph6_lines(lines):
    """Yield ``(line_number, graph or Graph6Error/CapacityError)`` for each data line.

    Blank lines and ``>>`` header lines are skipped; numbering is 1-based.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or (line.startswith(">>") and not line.startswith(HEADER)):
            continue
        if line == HEADER:
            continue
        try:
            yield lineno, parse_graph6(line)
        except (Graph6Error, CapacityError) as exc:
            yield lineno, exc
