"""Exact graph canonicalization for memoization keys.

The key for a graph is the graph6 encoding of a canonically relabeled
copy, so two graphs get equal keys exactly when they are isomorphic (no
hashing, no false positives). The labeling is found by iterated
neighborhood-color refinement followed by a backtracking search over the
residual cell orderings, individualizing one vertex at a time and
keeping the lexicographically least adjacency bit matrix over all
orderings compatible with the refinement cell structure.

Components are canonicalized independently and concatenated in a
deterministic order, which sidesteps the search blowup on unions of many
identical components while staying exact. Everything below works on
bitmask adjacency rows; Graph objects are only touched at the boundary.

An optional vertex coloring participates in the refinement and is
appended to the key, which turns the key into a colored-isomorphism
invariant (used for weighted game states).

Exactness is preferred over speed; the intended regime is n <= 16.
"""

from __future__ import annotations

from .graphs import Graph

DEFAULT_CAP = 16


class CanonCapError(RuntimeError):
    """Graph exceeds the configured canonicalization cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"canonicalization capped at {cap} vertices, got {n}")
        self.n = n
        self.cap = cap


def _rows_of(g: Graph) -> tuple[tuple[int, ...], list[int]]:
    vs = g.vertices
    idx = {v: i for i, v in enumerate(vs)}
    rows = [0] * len(vs)
    for v in vs:
        i = idx[v]
        for u in g.neighbors(v):
            rows[i] |= 1 << idx[u]
    return vs, rows


def _dense_components(n: int, rows: list[int]) -> list[list[int]]:
    unseen = (1 << n) - 1
    comps = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            reach = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                reach |= rows[v]
            frontier = reach & ~comp
            comp |= frontier
        unseen &= ~comp
        members = []
        c = comp
        while c:
            v = (c & -c).bit_length() - 1
            c &= c - 1
            members.append(v)
        comps.append(members)
    return comps


def _refine(neigh: list[list[int]], colors: list[int]) -> list[int]:
    """Iterate (color, sorted neighbor colors) signatures to a fixed point.

    New color ids are assigned in sorted-signature order, which is an
    isomorphism invariant, so equal graphs always refine to equal colorings.
    """
    n = len(neigh)
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in neigh[v]))) for v in range(n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [palette[sigs[v]] for v in range(n)]
        if len(palette) == ncolors:
            return colors
        ncolors = len(palette)


def _dedupe_twins(cell: list[int], rows: list[int]) -> list[int]:
    # Vertices u, v with N(u)\{v} == N(v)\{u} are swappable by a
    # transposition automorphism; exploring one per twin class suffices.
    keep = []
    seen: set[int] = set()
    for v in cell:
        open_key = rows[v]             # equal iff non-adjacent twins
        closed_key = rows[v] | 1 << v  # equal iff adjacent twins
        if open_key not in seen and closed_key not in seen:
            keep.append(v)
        seen.add(open_key)
        seen.add(closed_key)
    return keep


def _canon_order(n: int, neigh: list[list[int]], rows: list[int], init_colors: list[int]) -> list[int]:
    """Placement order (position -> local vertex) minimizing the row-major
    adjacency bit string among refinement-compatible orderings."""
    if n <= 1:
        return list(range(n))
    colors = _refine(neigh, init_colors)
    cells: list[list[int]] = []
    for c in sorted(set(colors)):
        cells.append(sorted(v for v in range(n) if colors[v] == c))

    best_chunks: list[int] | None = None
    best_perm: list[int] | None = None

    def search(cells: list[list[int]], placed: list[int], chunks: list[int], equal_prefix: bool):
        nonlocal best_chunks, best_perm
        if not cells:
            if best_chunks is None or (not equal_prefix and chunks < best_chunks):
                best_chunks = list(chunks)
                best_perm = list(placed)
            return
        cell = cells[0]
        candidates = cell if len(cell) == 1 else _dedupe_twins(cell, rows)
        d = len(placed)
        for v in candidates:
            rv = rows[v]
            chunk = 0
            for u in placed:
                chunk = chunk << 1 | (rv >> u & 1)
            tight = equal_prefix
            if best_chunks is not None and tight:
                ref = best_chunks[d]
                if chunk > ref:
                    continue
                if chunk < ref:
                    tight = False
            rest: list[list[int]] = []
            lead = [u for u in cell if u != v]
            for c in ([lead] if lead else []) + cells[1:]:
                non = [u for u in c if not rv >> u & 1]
                adj = [u for u in c if rv >> u & 1]
                if non:
                    rest.append(non)
                if adj:
                    rest.append(adj)
            chunks.append(chunk)
            search(rest, placed + [v], chunks, tight)
            chunks.pop()

    search(cells, [], [], True)
    assert best_perm is not None
    return best_perm


def _emit_rows(n: int, rows: list[int]) -> str:
    """graph6 text for dense rows (row i bit j set iff i ~ j)."""
    bits = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            bits = bits << 1 | (rows[i] >> j & 1)
            nbits += 1
    pad = -nbits % 6
    bits <<= pad
    nbits += pad
    out = [chr(n + 63)]
    for shift in range(nbits - 6, -1, -6):
        out.append(chr((bits >> shift & 0x3F) + 63))
    return "".join(out)


def _component_pieces(g: Graph, colors: dict[int, int] | None):
    """Per-component (size, g6, colorseq, canon_rows) tuples, sorted."""
    vs, rows = _rows_of(g)
    n = len(vs)
    if colors is None:
        full_init = None
    else:
        raw = sorted({colors[v] for v in vs})
        rank = {c: i for i, c in enumerate(raw)}
        full_init = [rank[colors[v]] for v in vs]
    pieces = []
    for members in _dense_components(n, rows):
        k = len(members)
        local = {v: i for i, v in enumerate(members)}
        neigh = [[] for _ in range(k)]
        lrows = [0] * k
        for v in members:
            i = local[v]
            r = rows[v]
            while r:
                u = (r & -r).bit_length() - 1
                r &= r - 1
                neigh[i].append(local[u])
                lrows[i] |= 1 << local[u]
        if full_init is None:
            init = [len(neigh[i]) for i in range(k)]
        else:
            pre = sorted({(full_init[members[i]], len(neigh[i])) for i in range(k)})
            prank = {c: i for i, c in enumerate(pre)}
            init = [prank[(full_init[members[i]], len(neigh[i]))] for i in range(k)]
        perm = _canon_order(k, neigh, lrows, init)
        canon_rows = [0] * k
        for pi in range(k):
            rp = lrows[perm[pi]]
            for pj in range(k):
                if rp >> perm[pj] & 1:
                    canon_rows[pi] |= 1 << pj
        colorseq = None
        if colors is not None:
            colorseq = tuple(colors[vs[members[perm[pi]]]] for pi in range(k))
        pieces.append((k, _emit_rows(k, canon_rows), colorseq, canon_rows, [vs[members[p]] for p in perm]))
    pieces.sort(key=lambda p: (p[0], p[1], p[2] if p[2] is not None else ()))
    return pieces


def canonical_form(g: Graph, colors: dict[int, int] | None = None, cap: int = DEFAULT_CAP) -> bytes:
    """Isomorphism-invariant exact key: canonical graph6 of the relabeled
    graph, plus the vertex colors in canonical order when supplied."""
    if g.n > cap:
        raise CanonCapError(g.n, cap)
    pieces = _component_pieces(g, colors)
    if colors is None:
        if len(pieces) == 1:
            return pieces[0][1].encode("ascii")
        rows: list[int] = []
        for k, _, _, canon_rows, _ in pieces:
            off = len(rows)
            rows.extend(r << off for r in canon_rows)
        return _emit_rows(len(rows), rows).encode("ascii")
    g6_parts = []
    color_parts = []
    for _, g6, colorseq, _, _ in pieces:
        g6_parts.append(g6)
        color_parts.extend(str(c) for c in colorseq)
    return ("+".join(g6_parts) + "|" + ",".join(color_parts)).encode("ascii")


def canonical_graph(g: Graph, colors: dict[int, int] | None = None, cap: int = DEFAULT_CAP) -> Graph:
    """Canonically relabeled copy of g on dense ids 0..n-1."""
    if g.n > cap:
        raise CanonCapError(g.n, cap)
    pieces = _component_pieces(g, colors)
    edges = []
    off = 0
    total = 0
    for k, _, _, canon_rows, _ in pieces:
        for i in range(k):
            r = canon_rows[i]
            while r:
                j = (r & -r).bit_length() - 1
                r &= r - 1
                if i < j:
                    edges.append((off + i, off + j))
        off += k
        total += k
    return Graph(range(total), edges)


def canonical_labeling(g: Graph, colors: dict[int, int] | None = None, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Mapping original id -> canonical position (canonical_graph's labels)."""
    if g.n > cap:
        raise CanonCapError(g.n, cap)
    pieces = _component_pieces(g, colors)
    out: dict[int, int] = {}
    off = 0
    for k, _, _, _, original_order in pieces:
        for pos, v in enumerate(original_order):
            out[v] = off + pos
        off += k
    return out


def refinement_colors(g: Graph, colors: dict[int, int] | None = None) -> dict[int, int]:
    """Stable refinement coloring of the whole graph, by original id.

    Any automorphism must preserve these colors, so they prune symmetry
    searches cheaply.
    """
    vs, rows = _rows_of(g)
    n = len(vs)
    neigh = []
    for i in range(n):
        r = rows[i]
        lst = []
        while r:
            u = (r & -r).bit_length() - 1
            r &= r - 1
            lst.append(u)
        neigh.append(lst)
    if colors is None:
        init = [len(neigh[i]) for i in range(n)]
    else:
        raw = sorted({(colors[vs[i]], len(neigh[i])) for i in range(n)})
        rank = {c: i for i, c in enumerate(raw)}
        init = [rank[(colors[vs[i]], len(neigh[i]))] for i in range(n)]
    final = _refine(neigh, init) if n else []
    return {vs[i]: final[i] for i in range(n)}
