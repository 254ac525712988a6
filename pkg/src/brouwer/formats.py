"""graph6 and plain edge-list text formats.

graph6 (for n <= 62): one header byte ``n + 63`` followed by the upper
triangle of the adjacency matrix in column order x01, x02, x12, x03, ...
packed big-endian six bits per byte, each byte offset by 63 and the tail
zero-padded.  The column-order stream is transposed into the row-major
internal bit field on parse and back on write.

Edge list: a first line ``n m`` followed by ``m`` lines ``u v`` with
0-based endpoints.  Lines starting with ``#`` and blank lines are skipped.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph, edge_index

GRAPH6_MAX_N = 62
_HEADER = ">>graph6<<"


class Graph6ParseError(ValueError):
    """Malformed graph6 input; ``offset`` is the failing byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@lru_cache(maxsize=None)
def _column_order(n: int) -> tuple[int, ...]:
    """Row-major bit positions listed in graph6 column order."""
    return tuple(edge_index(n, i, j) for j in range(1, n) for i in range(j))


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6ParseError("empty graph6 string", 0)
    codes = [ord(c) for c in s]
    if codes[0] == 126:
        raise Graph6ParseError("multi-byte vertex count (n > 62) not supported", 0)
    if not 63 <= codes[0] <= 63 + GRAPH6_MAX_N:
        raise Graph6ParseError(f"bad header byte {codes[0]}", 0)
    n = codes[0] - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(codes) - 1 < nbytes:
        raise Graph6ParseError(
            f"truncated payload, expected {nbytes} bytes after header", len(codes)
        )
    if len(codes) - 1 > nbytes:
        raise Graph6ParseError("trailing data after payload", 1 + nbytes)
    for pos, c in enumerate(codes[1:], start=1):
        if not 63 <= c <= 126:
            raise Graph6ParseError(f"byte {c} outside graph6 range", pos)
    bits = 0
    order = _column_order(n)
    for t, slot in enumerate(order):
        c = codes[1 + t // 6] - 63
        if c >> (5 - t % 6) & 1:
            bits |= 1 << slot
    return Graph(n, bits)


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 supports n <= {GRAPH6_MAX_N}, got n={g.n}")
    order = _column_order(g.n)
    out = [chr(g.n + 63)]
    for base in range(0, len(order), 6):
        byte = 0
        for k, slot in enumerate(order[base:base + 6]):
            if g.bits >> slot & 1:
                byte |= 1 << (5 - k)
        out.append(chr(byte + 63))
    return "".join(out)


def parse_edgelist(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(
                f"line {lineno}: expected two integers, got {line!r}"
            ) from None
        if header is None:
            header = (a, b, lineno)
        else:
            edges.append((a, b, lineno))
    if header is None:
        raise ValueError("empty edge-list input, expected a 'n m' header line")
    n, m, header_line = header
    if n < 1:
        raise ValueError(f"line {header_line}: need n >= 1, got n={n}")
    if m != len(edges):
        raise ValueError(
            f"line {header_line}: header declares m={m} but {len(edges)} "
            f"edge lines follow"
        )
    bits = 0
    for u, v, lineno in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {lineno}: vertex out of range ({u}, {v}) for n={n}")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop ({u}, {v})")
        e = edge_index(n, u, v)
        if bits >> e & 1:
            raise ValueError(f"line {lineno}: duplicate edge ({u}, {v})")
        bits |= 1 << e
    return Graph(n, bits)


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
