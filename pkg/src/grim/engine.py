"""Grim move semantics: follower generation, the weighted variant, and the
blowup reduction from weighted positions to plain ones.

A move selects a vertex; the vertex goes away with its incident edges, and
any vertex left with degree zero is swept away as part of the same move.
Positions are therefore always kept free of isolated vertices.

In the weighted variant a vertex of weight t must be selected t times
before it is deleted, but isolation still removes it immediately whatever
weight remains (selections that only decrement a weight are legal moves
and consume a turn).
"""

from __future__ import annotations

from .canon import DEFAULT_CAP, canonical_form
from .graphs import Graph, GraphError


def normalize(g: Graph) -> Graph:
    """Remove all isolated vertices; idempotent."""
    keep = [v for v in g.vertices if g.degree(v) > 0]
    if len(keep) == len(g.vertices):
        return g
    return g.induced(keep)


def legal_moves(g: Graph) -> tuple[int, ...]:
    """Every present vertex is selectable; empty exactly on the empty graph."""
    return g.vertices


def follower(g: Graph, vertex: int) -> Graph:
    """Position after selecting `vertex` on a normalized graph.

    Deletes the vertex, its edges, and anything isolated by the deletion;
    surviving vertices keep their ids.
    """
    if not g.has_vertex(vertex):
        raise GraphError(f"vertex {vertex} not present")
    keep = [
        v
        for v in g.vertices
        if v != vertex and len(g.neighbors(v) - {vertex}) > 0
    ]
    return g.induced(keep)


def followers(g: Graph) -> list[tuple[int, Graph]]:
    return [(v, follower(g, v)) for v in g.vertices]


class WeightedGraph:
    """A graph plus a positive selection count per vertex."""

    __slots__ = ("graph", "weights")

    def __init__(self, graph: Graph, weights: dict[int, int]):
        if set(weights) != set(graph.vertices):
            raise GraphError("weights must cover exactly the vertex set")
        if any(w < 1 for w in weights.values()):
            raise GraphError("weights must be >= 1")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "weights", dict(weights))

    def __setattr__(self, name, value):
        raise AttributeError("WeightedGraph is immutable")

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.graph == other.graph and self.weights == other.weights

    def __repr__(self):
        return f"WeightedGraph(n={self.graph.n}, weights={self.weights})"


def weighted_normalize(wg: WeightedGraph) -> WeightedGraph:
    """Drop isolated vertices regardless of their remaining weight."""
    g = normalize(wg.graph)
    return WeightedGraph(g, {v: wg.weights[v] for v in g.vertices})


def weighted_moves(wg: WeightedGraph) -> tuple[int, ...]:
    return wg.graph.vertices


def weighted_follower(wg: WeightedGraph, vertex: int) -> WeightedGraph:
    """Select a vertex: decrement its weight, deleting it (with the usual
    isolation sweep) once the weight hits zero."""
    g = wg.graph
    if not g.has_vertex(vertex):
        raise GraphError(f"vertex {vertex} not present")
    w = wg.weights[vertex]
    if w > 1:
        new = dict(wg.weights)
        new[vertex] = w - 1
        return WeightedGraph(g, new)
    f = follower(g, vertex)
    return WeightedGraph(f, {v: wg.weights[v] for v in f.vertices})


def blowup(wg: WeightedGraph) -> Graph:
    """Replace each weight-t vertex by t pairwise non-adjacent copies, every
    copy adjacent to the copies of the original neighbors.

    Weight-1 vertices map to single copies, so an all-ones weighting
    returns (a relabeling of) the underlying graph.
    """
    g = wg.graph
    copies: dict[int, list[int]] = {}
    nxt = 0
    for v in g.vertices:
        copies[v] = list(range(nxt, nxt + wg.weights[v]))
        nxt += wg.weights[v]
    edges = [
        (a, b)
        for u, v in g.edges()
        for a in copies[u]
        for b in copies[v]
    ]
    return Graph(range(nxt), edges)


def weighted_key(wg: WeightedGraph, cap: int = DEFAULT_CAP) -> bytes:
    """Memo key invariant under weight-preserving isomorphism."""
    return canonical_form(wg.graph, colors=wg.weights, cap=cap)


def weighted_outcome(wg: WeightedGraph, memo: dict | None = None, cap: int = DEFAULT_CAP) -> str:
    """Exhaustive N/P search of the weighted game (normal play).

    The state space is tiny in the intended regime (few vertices, small
    weights); this is the reference the blowup reduction is checked against.
    """
    if memo is None:
        memo = {}

    def visit(state: WeightedGraph) -> str:
        state = weighted_normalize(state)
        if state.graph.n == 0:
            return "P"
        key = weighted_key(state, cap=cap)
        got = memo.get(key)
        if got is not None:
            return got
        result = "P"
        for v in weighted_moves(state):
            if visit(weighted_follower(state, v)) == "P":
                result = "N"
                break
        memo[key] = result
        return result

    return visit(wg)
