"""Immutable simple graphs, the standard families, and graph combinators.

Vertex ids are small nonnegative integers. Constructors in this module
always produce dense ids 0..n-1; operations elsewhere that delete vertices
keep the survivors' original ids (a play session needs stable ids), and
ids are only re-densified during canonicalization.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class GraphError(ValueError):
    """Malformed graph construction, family spec, or encoding."""


class Graph:
    """A finite simple undirected graph, immutable after construction.

    Safe to share between threads; every operation returns a new value.
    """

    __slots__ = ("vertices", "_adj", "_hash")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        vs = tuple(sorted(set(int(v) for v in vertices)))
        if any(v < 0 for v in vs):
            raise GraphError("vertex ids must be nonnegative")
        adj: dict[int, set[int]] = {v: set() for v in vs}
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise GraphError(f"edge ({u},{v}) references a missing vertex")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "_adj", {v: frozenset(nb) for v, nb in adj.items()})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as sorted (u, v) pairs with u < v."""
        return sorted((u, v) for u in self.vertices for v in self._adj[u] if u < v)

    def relabel(self, mapping: dict[int, int]) -> "Graph":
        """Apply a vertex-id mapping (must be injective on the vertex set)."""
        if len({mapping[v] for v in self.vertices}) != self.n:
            raise GraphError("relabeling is not injective")
        return Graph(
            (mapping[v] for v in self.vertices),
            ((mapping[u], mapping[v]) for u, v in self.edges()),
        )

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on `keep`, original ids retained."""
        ks = set(keep)
        if not ks <= set(self.vertices):
            raise GraphError("induced set contains missing vertices")
        return Graph(ks, ((u, v) for u, v in self.edges() if u in ks and v in ks))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self._adj == other._adj

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.vertices, frozenset(self._adj.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


EMPTY = Graph(())


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(range(n), ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(range(n), ((i, j) for i in range(n) for j in range(i + 1, n)))


def wheel_graph(n: int) -> Graph:
    """Wheel on n vertices: an (n-1)-cycle joined with a single hub."""
    if n < 4:
        raise GraphError("wheel needs n >= 4")
    return join(cycle_graph(n - 1), complete_graph(1))


def star_graph(n: int) -> Graph:
    """Star with one hub (id 0) and n leaves, n+1 vertices total."""
    if n < 1:
        raise GraphError("star needs n >= 1 leaves")
    return Graph(range(n + 1), ((0, i) for i in range(1, n + 1)))


def complete_multipartite(parts: Iterable[int]) -> Graph:
    """Complete multipartite graph; edges exactly between distinct parts."""
    sizes = list(parts)
    if not sizes or any(s < 1 for s in sizes):
        raise GraphError("part sizes must be positive")
    bounds = []
    start = 0
    for s in sizes:
        bounds.append(range(start, start + s))
        start += s
    edges = [
        (u, v)
        for i, p in enumerate(bounds)
        for q in bounds[i + 1 :]
        for u in p
        for v in q
    ]
    return Graph(range(start), edges)


def _densify(g: Graph, offset: int = 0) -> Graph:
    pos = {v: offset + i for i, v in enumerate(g.vertices)}
    return g.relabel(pos)


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; operands are relabeled to adjacent dense id ranges."""
    a = _densify(g)
    b = _densify(h, offset=a.n)
    return Graph(range(a.n + b.n), a.edges() + b.edges())


def join(g: Graph, h: Graph) -> Graph:
    """Union plus every cross edge between the two vertex sets."""
    a = _densify(g)
    b = _densify(h, offset=a.n)
    cross = [(u, v) for u in range(a.n) for v in range(a.n, a.n + b.n)]
    return Graph(range(a.n + b.n), a.edges() + b.edges() + cross)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Box product: (x,y)~(w,z) iff x=w and y~z, or y=z and x~w."""
    if g.n == 0 or h.n == 0:
        raise GraphError("cartesian product needs nonempty operands")
    gi = {v: i for i, v in enumerate(g.vertices)}
    hi = {v: i for i, v in enumerate(h.vertices)}
    nh = h.n

    def pid(x, y):
        return gi[x] * nh + hi[y]

    edges = []
    for x in g.vertices:
        for y, z in h.edges():
            edges.append((pid(x, y), pid(x, z)))
    for y in h.vertices:
        for x, w in g.edges():
            edges.append((pid(x, y), pid(w, y)))
    return Graph(range(g.n * nh), edges)


def components(g: Graph) -> list[Graph]:
    """Maximal connected subgraphs, original ids retained.

    Ordered by smallest contained vertex id, so the output is deterministic.
    """
    seen: set[int] = set()
    out: list[Graph] = []
    for root in g.vertices:
        if root in seen:
            continue
        comp = {root}
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for u in g.neighbors(v):
                if u not in comp:
                    comp.add(u)
                    frontier.append(u)
        seen |= comp
        out.append(g.induced(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def random_graph(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi sample: each of the C(n,2) edges kept with probability p."""
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(range(n), edges)


def all_labeled_graphs(n: int) -> Iterator[tuple[int, Graph]]:
    """All 2^C(n,2) labeled graphs on {0..n-1}, as (edge-mask, graph) pairs.

    Bit k of the mask corresponds to the k-th pair (i, j), i < j, in
    lexicographic order.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        yield mask, Graph(range(n), edges)
