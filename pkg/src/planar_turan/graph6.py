"""graph6 text format, bit-exact per the nauty/McKay description.

Only the undirected graph6 flavor is supported (no sparse6/digraph6).
The upper triangle is serialized column-wise: bit (i, j) for j in
1..n-1, i in 0..j-1, padded with zeros to a multiple of six, each
6-bit group offset by 63 into printable ASCII.
"""

from __future__ import annotations

from .graph import Graph, build_graph

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"vertex count {n} exceeds the supported graph6 range")


def to_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.bits[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line; tolerates the optional >>graph6<< header."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    vals = []
    for ch in s:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise ValueError(f"invalid graph6 character {ch!r}")
        vals.append(code)
    if vals[0] == 63:
        if len(vals) < 4:
            raise ValueError("truncated graph6 vertex count")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    need = n * (n - 1) // 2
    if len(body) * 6 < need:
        raise ValueError(f"graph6 body too short for {n} vertices")
    bits = []
    for code in body:
        bits.extend(code >> s6 & 1 for s6 in (5, 4, 3, 2, 1, 0))
    if any(bits[need:]):
        raise ValueError("nonzero padding bits in graph6 body")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)
