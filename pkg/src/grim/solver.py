"""Memoized Sprague-Grundy evaluation, N/P classification, and optimal moves.

The value of a position is the mex over its followers' values; disjoint
unions combine by xor (nim-sum), so the solver decomposes into connected
components and caches one value per component, keyed by canonical form.
Component-level caching is what lets unions reuse work aggressively.

Path and cycle components bypass both the canonicalization and the vertex
cap: the followers of a path are unions of shorter paths (deleting a
vertex splits it, and a stranded single vertex vanishes with the move),
and every deletion on a cycle opens it into the same path. Those families
are evaluated by a dedicated length-indexed recurrence over the same game
rules, which reaches lengths in the hundreds instantly.

The shared memo is a plain dict: concurrent readers/writers only ever
store the same value for a key, so races are benign (last write wins).
"""

from __future__ import annotations

from .canon import canonical_form
from .engine import follower, normalize
from .graphs import Graph, GraphError, components, is_connected

DEFAULT_SOLVER_CAP = 16

_shared_memo: dict[bytes, int] = {}
_path_values: list[int] = [0, 0]  # by length; a lone vertex normalizes away


class SolverCapError(RuntimeError):
    """A component is too large for exact generic evaluation."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"component of {size} vertices exceeds the solver cap of {cap}")
        self.size = size
        self.cap = cap


def clear_memo() -> None:
    """Drop all cached values (shared memo and path table)."""
    _shared_memo.clear()
    del _path_values[2:]


def _mex(values) -> int:
    m = 0
    while m in values:
        m += 1
    return m


def path_sg(length: int) -> int:
    """Game value of a path with `length` vertices.

    Deleting vertex i leaves pieces of i-1 and length-i vertices; a piece
    of one vertex is isolated and removed by the same move.
    """
    if length < 0:
        raise GraphError("negative path length")
    while len(_path_values) <= length:
        n = len(_path_values)
        seen = set()
        for i in range(1, (n + 1) // 2 + 1):
            seen.add(_path_values[i - 1] ^ _path_values[n - i])
        _path_values.append(_mex(seen))
    return _path_values[length]


def _shape_value(comp: Graph, decomposed: bool) -> int | None:
    """Closed-path-family value for path/cycle shaped graphs, else None."""
    n = comp.n
    if n < 2:
        return 0 if n == 0 else None
    degs = [comp.degree(v) for v in comp.vertices]
    if max(degs) > 2:
        return None
    twice_m = sum(degs)
    if twice_m == 2 * (n - 1):
        # acyclic with m = n-1 forces a single component: a path
        return path_sg(n)
    if twice_m == 2 * n and min(degs) == 2:
        if not decomposed and not is_connected(comp):
            return None
        # every move opens the cycle into the same (n-1)-path
        return 1 if path_sg(n - 1) == 0 else 0
    return None


class _Frame:
    __slots__ = ("key", "graph", "parts")

    def __init__(self, key: bytes, graph: Graph):
        self.key = key
        self.graph = graph
        self.parts = None  # per follower: list of int values / bytes keys


def _unit_sg(unit: Graph, cap: int, memo: dict, path_shortcut: bool, decompose: bool) -> int:
    if path_shortcut:
        sv = _shape_value(unit, decompose)
        if sv is not None:
            return sv
    if unit.n > cap:
        raise SolverCapError(unit.n, cap)
    key = canonical_form(unit, cap=max(cap, unit.n))
    hit = memo.get(key)
    if hit is not None:
        return hit

    queued: dict[bytes, Graph] = {key: unit}
    stack = [_Frame(key, unit)]
    while stack:
        fr = stack[-1]
        if fr.key in memo:
            stack.pop()
            continue
        if fr.parts is None:
            fr.parts = []
            pending = []
            for v in fr.graph.vertices:
                f = follower(fr.graph, v)
                units = components(f) if decompose else ([f] if f.n else [])
                entry: list = []
                for u in units:
                    if path_shortcut:
                        sv = _shape_value(u, decompose)
                        if sv is not None:
                            entry.append(sv)
                            continue
                    if u.n > cap:
                        raise SolverCapError(u.n, cap)
                    uk = canonical_form(u, cap=max(cap, u.n))
                    entry.append(uk)
                    if uk not in memo and uk not in queued:
                        queued[uk] = u
                        pending.append(_Frame(uk, u))
                fr.parts.append(entry)
            if pending:
                stack.extend(pending)
                continue
        # A sibling scheduled before us may still be unresolved; requeue it.
        missing = {
            p
            for entry in fr.parts
            for p in entry
            if isinstance(p, bytes) and p not in memo
        }
        if missing:
            stack.extend(_Frame(mk, queued[mk]) for mk in sorted(missing))
            continue
        seen = set()
        for entry in fr.parts:
            val = 0
            for p in entry:
                val ^= p if isinstance(p, int) else memo[p]
            seen.add(val)
        memo[fr.key] = _mex(seen)
        stack.pop()
    return memo[key]


def sg_value(
    g: Graph,
    *,
    cap: int = DEFAULT_SOLVER_CAP,
    memo: dict | None = None,
    decompose: bool = True,
    path_shortcut: bool = True,
) -> int:
    """Exact game value of a position.

    `decompose` and `path_shortcut` exist so tests can cross-validate the
    nim-sum decomposition and the path-family recurrence against the plain
    game-tree evaluation; leave them on for normal use.
    """
    g = normalize(g)
    if memo is None:
        memo = _shared_memo
    if g.n == 0:
        return 0
    units = components(g) if decompose else [g]
    total = 0
    for u in units:
        total ^= _unit_sg(u, cap, memo, path_shortcut, decompose)
    return total


def outcome(g: Graph, **kwargs) -> str:
    """"P" when the player to move loses under perfect play, else "N"."""
    return "P" if sg_value(g, **kwargs) == 0 else "N"


def winning_moves(g: Graph, **kwargs) -> list[int]:
    """Vertices whose deletion leaves a losing position for the opponent."""
    g = normalize(g)
    return [v for v in g.vertices if sg_value(follower(g, v), **kwargs) == 0]


def best_move(g: Graph, **kwargs) -> int:
    """Deterministic engine move.

    A winning move with the lowest vertex id if any exists; otherwise the
    move leaving the opponent the largest game value (a delay heuristic),
    again lowest id on ties.
    """
    g = normalize(g)
    if g.n == 0:
        raise GraphError("no moves on the empty graph")
    best = None
    best_val = -1
    for v in g.vertices:
        val = sg_value(follower(g, v), **kwargs)
        if val == 0:
            return v
        if val > best_val:
            best, best_val = v, val
    return best
