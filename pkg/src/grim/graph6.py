"""graph6 interchange: the compact printable encoding of small simple graphs.

Only the short form (n <= 62) is supported. Layout: one header byte n+63,
then the upper triangle of the adjacency matrix read column by column
((0,1), (0,2), (1,2), (0,3), ...), packed big-endian into 6-bit groups,
zero-padded, each group offset by 63 into the printable range 63..126.
"""

from __future__ import annotations

from .graphs import Graph, GraphError

MAX_N = 62
_OPTIONAL_HEADER = ">>graph6<<"


def emit_graph6(g: Graph) -> str:
    """Encode a graph; vertices are numbered by ascending id."""
    n = g.n
    if n > MAX_N:
        raise GraphError(f"graph6 short form caps at {MAX_N} vertices, got {n}")
    pos = {v: i for i, v in enumerate(g.vertices)}
    bits = 0
    nbits = 0
    adj = [[False] * n for _ in range(n)]
    for u, v in g.edges():
        adj[pos[u]][pos[v]] = adj[pos[v]][pos[u]] = True
    for j in range(1, n):
        for i in range(j):
            bits = bits << 1 | adj[i][j]
            nbits += 1
    pad = -nbits % 6
    bits <<= pad
    nbits += pad
    out = [chr(n + 63)]
    for shift in range(nbits - 6, -1, -6):
        out.append(chr((bits >> shift & 0x3F) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (optional '>>graph6<<' prefix tolerated)."""
    s = text.strip()
    if s.startswith(_OPTIONAL_HEADER):
        s = s[len(_OPTIONAL_HEADER) :]
    if not s:
        raise GraphError("empty graph6 string")
    codes = [ord(c) for c in s]
    if any(c < 63 or c > 126 for c in codes):
        raise GraphError("graph6 byte out of printable range 63..126")
    n = codes[0] - 63
    if n > MAX_N:
        raise GraphError("graph6 long form (n > 62) unsupported")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    body = codes[1:]
    if len(body) < need:
        raise GraphError(f"truncated graph6 bit field: need {need} bytes, got {len(body)}")
    if len(body) > need:
        raise GraphError("trailing bytes after graph6 bit field")
    bits = 0
    for c in body:
        bits = bits << 6 | (c - 63)
    pad = 6 * need - npairs
    if bits & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits in graph6 encoding")
    bits >>= pad
    edges = []
    k = npairs
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if bits >> k & 1:
                edges.append((i, j))
    return Graph(range(n), edges)
