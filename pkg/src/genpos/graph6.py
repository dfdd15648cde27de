"""graph6 encoder/decoder (McKay's format).

A graph6 string is N(n) followed by the upper triangle of the adjacency
matrix read column by column ((0,1), (0,2), (1,2), (0,3), ...), packed
six bits per printable character (value + 63).  N(n) is a single
character for n <= 62, '~' plus three characters for n <= 258047, and
'~~' plus six characters above that.  The optional '>>graph6<<' header
is tolerated on input and never emitted.
"""

from __future__ import annotations

from .errors import ParseError
from .graphs import Graph

HEADER = ">>graph6<<"
_LOW = 63
_HIGH = 126


def _encode_size(n: int) -> list[int]:
    if n <= 62:
        return [n + _LOW]
    if n <= 258047:
        return [_HIGH] + [((n >> shift) & 0x3F) + _LOW for shift in (12, 6, 0)]
    if n <= 68719476735:
        return [_HIGH, _HIGH] + [((n >> shift) & 0x3F) + _LOW for shift in (30, 24, 18, 12, 6, 0)]
    raise ParseError(f"graph too large for graph6: n={n}")


def _decode_size(codes: list[int], pos: int) -> tuple[int, int]:
    if pos >= len(codes):
        raise ParseError("empty graph6 string")
    if codes[pos] != _HIGH:
        return codes[pos] - _LOW, pos + 1
    if pos + 1 < len(codes) and codes[pos + 1] == _HIGH:
        chunk, pos = codes[pos + 2 : pos + 8], pos + 8
        width = 6
    else:
        chunk, pos = codes[pos + 1 : pos + 4], pos + 4
        width = 3
    if len(chunk) != width:
        raise ParseError("truncated graph6 size field")
    n = 0
    for c in chunk:
        n = (n << 6) | (c - _LOW)
    return n, pos


def emit_graph6(graph: Graph) -> str:
    """Encode a graph; vertices keep their ids."""
    n = graph.n
    out = _encode_size(n)
    acc = 0
    nbits = 0
    for v in range(1, n):
        col = graph.adj[v]
        for u in range(v):
            acc = (acc << 1) | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + _LOW)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + _LOW)
    return "".join(map(chr, out))


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string; optional header and trailing newline allowed."""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :].strip()
    if not s:
        raise ParseError("empty graph6 string")
    codes = []
    for i, ch in enumerate(s):
        c = ord(ch)
        if not (_LOW <= c <= _HIGH):
            raise ParseError(f"invalid graph6 character {ch!r} at position {i}")
        codes.append(c)
    n, pos = _decode_size(codes, 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(codes) - pos != need:
        raise ParseError(
            f"graph6 payload for n={n} needs {need} characters, got {len(codes) - pos}"
        )
    edges = []
    bit = 0
    for v in range(1, n):
        for u in range(v):
            code = codes[pos + bit // 6] - _LOW
            if code >> (5 - bit % 6) & 1:
                edges.append((u, v))
            bit += 1
    return Graph(n, edges)
