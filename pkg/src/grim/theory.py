"""Closed-form outcome classifiers, symmetry-based strategy detection, and
the brute-force harness that cross-checks both against the solver.

The multipartite classifier is a first-match decision table. Rules (a)-(i)
mirror proven statements; the singleton-excess parity rule and the
{1,1,3,n} rule are stated without proof in the source material, so the
verify harness is what justifies trusting them at small sizes.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .canon import canonical_form, refinement_colors
from .engine import WeightedGraph, blowup, normalize, weighted_key, weighted_outcome
from .families import make_family
from .graphs import (
    Graph,
    GraphError,
    cartesian_product,
    complete_multipartite,
    is_connected,
    union,
)
from .octal import KNOWN_ZEROS, SGSequence, octal6_sequence
from .solver import outcome, sg_value, winning_moves

DEFAULT_AUT_CAP = 12

N, P, UNKNOWN = "N", "P", "Unknown"


class AutomorphismCapError(RuntimeError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"symmetry search capped at {cap} vertices, got {n}")
        self.n = n
        self.cap = cap


@dataclass(frozen=True)
class Prediction:
    outcome: str                 # "N", "P", or "Unknown"
    rule: str
    witness: str | None = None


def classify_multipartite(parts) -> Prediction:
    """Predict the outcome of a complete multipartite graph from its part
    sizes, first matching rule wins."""
    ps = sorted(int(p) for p in parts)
    if not ps or ps[0] < 1:
        raise GraphError("part sizes must be positive")
    t = len(ps)
    total = sum(ps)
    singles = sum(1 for p in ps if p == 1)

    if t == 1:
        return Prediction(P, "single-part", None)
    if singles == t:
        out = N if t % 2 == 0 else P
        return Prediction(out, "clique-parity", "any vertex" if out == N else None)
    if t == 2 and ps[0] == 1:
        return Prediction(N, "star-hub", "delete the hub")
    if t == 2:
        out = N if total % 2 == 1 else P
        return Prediction(out, "bipartite-parity", "shrink a part of size > 2" if out == N else None)
    if t == 3 and ps[0] == 1 and ps[1] == 1:
        out = N if ps[2] % 2 == 0 else P
        return Prediction(out, "two-singletons", "delete in the large part" if out == N else None)
    if t == 3 and ps[0] == 1 and ps[1] == 2:
        return Prediction(N, "one-two-n", "leave two singletons or an even bipartite rest")
    if t == 3 and ps[0] == 1 and ps[1] >= 3:
        out = N if (ps[1] + ps[2]) % 2 == 0 else P
        return Prediction(out, "one-singleton-tripartite", None)
    if ps[0] >= 2:
        out = P if total % 2 == 0 else N
        return Prediction(out, "no-singletons-parity", "delete in an odd part" if out == N else None)
    if singles == 1 and t > 3:
        if total % 2 == 0 and ps[1] > 2:
            return Prediction(P, "one-singleton-parity", None)
        return Prediction(N, "one-singleton-parity", "delete the singleton" if total % 2 else "shrink a 2-part")
    alpha = sum(p - 1 for p in ps if p > 1)
    if singles > 1 and singles > alpha:
        out = P if singles % 2 != alpha % 2 else N
        return Prediction(out, "singleton-excess-parity", None)
    if t == 4 and ps[:3] == [1, 1, 3] and ps[3] >= 3:
        return Prediction(N, "double-singleton-three", "leave the three-part family follower")
    return Prediction(UNKNOWN, "unclassified", None)


def _path_zero(n: int, seq: SGSequence | None) -> bool | None:
    """Whether the n-vertex path has value zero; None when undecidable from
    the stored zero list alone."""
    if n <= 1:
        return True
    if n % 2 == 1:
        return False
    if seq is not None and n <= seq.max_n:
        return seq[n] == 0
    if n in KNOWN_ZEROS:
        return True
    return None


def classify_family(spec: str, seq: SGSequence | None = None) -> Prediction:
    """Predict the outcome for a named family spec without running the solver.

    Even-length paths are only decided by the stored zero list or by a
    supplied value sequence; otherwise they (and anything derived from
    them) classify as Unknown.
    """
    head, sep, rest = spec.partition(":")
    if not sep:
        raise GraphError(f"unsupported spec {spec!r}")
    if head == "complete":
        return classify_multipartite([1] * _single_size(rest))
    if head == "star":
        return classify_multipartite([1, _single_size(rest)])
    if head == "kpartite":
        return classify_multipartite([int(x) for x in rest.split(",")])
    if head == "path":
        return _classify_path(_single_size(rest), seq)
    if head == "cycle":
        n = _single_size(rest)
        if n < 3:
            raise GraphError("cycle needs n >= 3")
        z = _path_zero(n - 1, seq)
        if z is None:
            return Prediction(UNKNOWN, "cycle-from-path", None)
        if z:
            return Prediction(N, "cycle-from-path", "any vertex opens a losing path")
        return Prediction(P, "cycle-from-path", None)
    if head == "wheel":
        n = _single_size(rest)
        if n < 4:
            raise GraphError("wheel needs n >= 4")
        inner = _classify_path(n - 2, seq)
        if inner.outcome == UNKNOWN:
            return Prediction(UNKNOWN, "wheel-from-path", None)
        if inner.outcome == N:
            # hub deletion leaves the cycle, whose lone follower is the path
            return Prediction(N, "wheel-from-path", "delete the hub")
        return Prediction(P, "wheel-from-path", None)
    raise GraphError(f"unsupported spec {spec!r}")


def _single_size(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise GraphError(f"bad size {text!r}") from None


def _classify_path(n: int, seq: SGSequence | None) -> Prediction:
    if n < 1:
        raise GraphError("path needs n >= 1")
    if n == 1:
        return Prediction(P, "normalizes-empty", None)
    if n % 2 == 1:
        return Prediction(N, "odd-path-reflection", "delete the middle vertex")
    z = _path_zero(n, seq)
    if z is None:
        return Prediction(UNKNOWN, "even-path", None)
    return Prediction(P if z else N, "even-path", None)


# ---------------------------------------------------------------------------
# involutions


def is_pairing_involution(g: Graph, sigma: dict[int, int]) -> bool:
    """Order-2 automorphism, no fixed points, no vertex adjacent to its image."""
    return _check_involution(g, sigma, fixed_allowed=0)


def is_near_involution(g: Graph, sigma: dict[int, int]) -> bool:
    """Order-2 automorphism with exactly one fixed point, no sigma-edges."""
    return _check_involution(g, sigma, fixed_allowed=1)


def _check_involution(g: Graph, sigma: dict[int, int], fixed_allowed: int) -> bool:
    vs = set(g.vertices)
    if set(sigma) != vs or set(sigma.values()) != vs:
        return False
    fixed = 0
    for v in vs:
        w = sigma[v]
        if sigma[w] != v:
            return False
        if w == v:
            fixed += 1
        elif g.has_edge(v, w):
            return False
    if fixed != fixed_allowed:
        return False
    if fixed == len(vs):
        return False  # the identity has order 1, not 2
    for u, v in g.edges():
        if not g.has_edge(sigma[u], sigma[v]):
            return False
    return True


def _pair_search(g: Graph, fixed: int | None) -> dict[int, int] | None:
    """Backtracking search for a qualifying involution pairing the vertices
    other than `fixed` (if given)."""
    vs = [v for v in g.vertices if v != fixed]
    if len(vs) % 2:
        return None
    colors = refinement_colors(g)
    sigma: dict[int, int] = {} if fixed is None else {fixed: fixed}

    def consistent(u: int, w: int) -> bool:
        for a, b in sigma.items():
            if g.has_edge(u, a) != g.has_edge(w, b):
                return False
            if g.has_edge(u, b) != g.has_edge(w, a):
                return False
        return True

    def extend(remaining: list[int]) -> bool:
        if not remaining:
            return True
        u = remaining[0]
        for w in remaining[1:]:
            if colors[w] != colors[u] or g.has_edge(u, w):
                continue
            if not consistent(u, w):
                continue
            sigma[u] = w
            sigma[w] = u
            rest = [x for x in remaining if x != u and x != w]
            if extend(rest):
                return True
            del sigma[u], sigma[w]
        return False

    if extend(vs):
        return dict(sigma)
    return None


def find_pairing_involution(g: Graph, cap: int = DEFAULT_AUT_CAP) -> dict[int, int] | None:
    """A fixed-point-free order-2 automorphism with no vertex adjacent to
    its image, if one exists. Its existence certifies a P position."""
    if g.n > cap:
        raise AutomorphismCapError(g.n, cap)
    if g.n == 0:
        return None
    sigma = _pair_search(g, fixed=None)
    if sigma is not None:
        assert is_pairing_involution(g, sigma)
    return sigma


def find_near_involution(g: Graph, cap: int = DEFAULT_AUT_CAP):
    """An order-2 automorphism fixing exactly one vertex, no sigma-edges.

    Returns (sigma, fixed_vertex) or None. On a graph with no isolated
    vertices the fixed vertex is a proven winning first move.
    """
    if g.n > cap:
        raise AutomorphismCapError(g.n, cap)
    if any(g.degree(v) == 0 for v in g.vertices):
        raise GraphError("near-involution strategy requires no isolated vertices")
    if g.n < 3:
        return None  # one fixed point plus at least one swapped pair
    # Equal refinement colors do not imply equal orbits, so every fixed
    # candidate must be tried.
    for v0 in g.vertices:
        sigma = _pair_search(g, fixed=v0)
        if sigma is not None:
            assert is_near_involution(g, sigma)
            return sigma, v0
    return None


# ---------------------------------------------------------------------------
# exhaustive class enumeration


@lru_cache(maxsize=None)
def enumerate_graphs(n: int, connected: bool = False) -> tuple[Graph, ...]:
    """All isomorphism classes on n vertices, one representative each.

    Built by augmentation: every class on n vertices extends some class on
    n-1 vertices by one vertex joined to a subset, so candidates are
    deduplicated by canonical key. Feasible through n = 8 at desk scale.
    """
    if n == 0:
        return () if connected else (Graph(()),)
    if n == 1:
        return (Graph([0]),)
    reps: dict[bytes, Graph] = {}
    for base in enumerate_graphs(n - 1, False):
        base_edges = base.edges()
        for mask in range(1 << (n - 1)):
            extra = [(i, n - 1) for i in range(n - 1) if mask >> i & 1]
            cand = Graph(range(n), base_edges + extra)
            key = canonical_form(cand, cap=n)
            if key not in reps:
                reps[key] = cand
    out = [reps[k] for k in sorted(reps)]
    if connected:
        out = [g for g in out if is_connected(g)]
    return tuple(out)


def partitions(total: int, min_part: int = 1) -> Iterator[tuple[int, ...]]:
    """Nondecreasing integer partitions of `total`."""
    if total == 0:
        yield ()
        return
    for p in range(min_part, total + 1):
        for rest in partitions(total - p, p):
            yield (p,) + rest


# ---------------------------------------------------------------------------
# verification harness


@dataclass
class VerificationReport:
    suite: str
    bound: int
    checked: int = 0
    failed: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return self.checked - self.failed

    @property
    def ok(self) -> bool:
        return self.checked > 0 and self.failed == 0

    def summary(self) -> str:
        status = "ok" if self.ok else "FAIL"
        return (
            f"suite={self.suite} bound={self.bound} "
            f"passed={self.passed}/{self.checked} [{status}]"
        )


SUITES = (
    "complete",
    "bipartite",
    "k1mn",
    "multipartite-no1s",
    "one-singleton",
    "singleton-parity",
    "k113n",
    "paths-cycles-wheels",
    "union-self",
    "cartesian",
    "blowup",
    "octal-equiv",
)

Check = tuple[str, Callable[[], str | None]]  # label, returns failure detail


def verify(
    suite: str,
    size_bound: int,
    seq: SGSequence | None = None,
    workers: int = 0,
) -> VerificationReport:
    """Enumerate a suite's instances within size_bound and compare theory
    predictions against the solver (or two engines against each other)."""
    if suite not in SUITES:
        raise GraphError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    checks = list(_suite_checks(suite, size_bound, seq))
    report = VerificationReport(suite=suite, bound=size_bound, checked=len(checks))
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: (c[0], c[1]()), checks))
    else:
        results = [(label, fn()) for label, fn in checks]
    for label, failure in results:
        if failure is not None:
            report.failed += 1
            report.counterexamples.append(f"{label}: {failure}")
    report.counterexamples.sort()
    return report


def _against_solver(g: Graph, pred: Prediction) -> str | None:
    if pred.outcome == UNKNOWN:
        return f"classifier returned Unknown (rule {pred.rule})"
    actual = outcome(g)
    if actual != pred.outcome:
        return f"predicted {pred.outcome} by {pred.rule}, solver says {actual}"
    return None


def _multipartite_check(parts: tuple[int, ...]) -> Check:
    label = "K_{" + ",".join(map(str, parts)) + "}"

    def run() -> str | None:
        return _against_solver(complete_multipartite(parts), classify_multipartite(parts))

    return label, run


def _suite_checks(suite: str, bound: int, seq: SGSequence | None) -> Iterator[Check]:
    if suite == "complete":
        for n in range(1, bound + 1):
            yield _multipartite_check((1,) * n)

    elif suite == "bipartite":
        for m in range(1, bound):
            for n in range(m, bound - m + 1):
                yield _multipartite_check((m, n))

    elif suite == "k1mn":
        for m in range(1, bound):
            for n in range(m, bound - m):
                yield _multipartite_check((1, m, n))

    elif suite == "multipartite-no1s":
        for total in range(6, bound + 1):
            for parts in partitions(total, min_part=2):
                if len(parts) >= 3:
                    yield _multipartite_check(parts)

    elif suite == "one-singleton":
        for total in range(7, bound + 1):
            for rest in partitions(total - 1, min_part=2):
                if len(rest) >= 3:
                    yield _multipartite_check((1,) + rest)

    elif suite == "singleton-parity":
        for total in range(4, bound + 1):
            for parts in partitions(total):
                pred = classify_multipartite(parts)
                if pred.rule == "singleton-excess-parity":
                    yield _multipartite_check(parts)

    elif suite == "k113n":
        for n in range(3, bound - 4):
            yield _multipartite_check((1, 1, 3, n))

    elif suite == "paths-cycles-wheels":
        if seq is None:
            seq = octal6_sequence(max(bound, 2))
        for head, lo in (("path", 1), ("cycle", 3), ("wheel", 4)):
            for n in range(lo, bound + 1):
                yield _family_check(f"{head}:{n}", seq)

    elif suite == "union-self":
        for n in range(1, bound + 1):
            for i, g in enumerate(enumerate_graphs(n)):
                yield _union_self_check(f"n={n}#{i}", g)

    elif suite == "cartesian":
        yield from _cartesian_checks(bound)

    elif suite == "blowup":
        yield from _blowup_checks(bound)

    elif suite == "octal-equiv":
        yield _octal_equiv_check(bound, seq)


def _family_check(spec: str, seq: SGSequence) -> Check:
    def run() -> str | None:
        return _against_solver(make_family(spec), classify_family(spec, seq=seq))

    return spec, run


def _union_self_check(label: str, g: Graph) -> Check:
    def run() -> str | None:
        # plain game-tree evaluation: no nim-sum splitting, no path table
        val = sg_value(union(g, g), decompose=False, path_shortcut=False)
        if val != 0:
            return f"G+G has value {val}, expected 0"
        return None

    return f"union-self {label}", run


def _cartesian_checks(bound: int) -> Iterator[Check]:
    paired: list[tuple[str, Graph, dict[int, int]]] = []
    near: list[tuple[str, Graph, dict[int, int], int]] = []
    for n in range(2, 5):
        for i, g in enumerate(enumerate_graphs(n)):
            if normalize(g).n != g.n:
                continue  # factors with isolated vertices muddy the move rules
            sigma = find_pairing_involution(g)
            if sigma is not None:
                paired.append((f"n={n}#{i}", g, sigma))
            hit = find_near_involution(g)
            if hit is not None:
                near.append((f"n={n}#{i}", g, hit[0], hit[1]))

    def product_sigma(g, h, sg_map, sh_map):
        gi = {v: k for k, v in enumerate(g.vertices)}
        hi = {v: k for k, v in enumerate(h.vertices)}
        nh = h.n
        out = {}
        for x in g.vertices:
            for y in h.vertices:
                out[gi[x] * nh + hi[y]] = gi[sg_map[x]] * nh + hi[sh_map[y]]
        return out

    for la, ga, sa in paired:
        for lb, gb, sb in paired:
            if ga.n * gb.n > bound:
                continue

            def run(ga=ga, gb=gb, sa=sa, sb=sb) -> str | None:
                prod = cartesian_product(ga, gb)
                sigma = product_sigma(ga, gb, sa, sb)
                if not is_pairing_involution(prod, sigma):
                    return "componentwise map is not a pairing involution"
                actual = outcome(prod)
                if actual != P:
                    return f"product predicted P, solver says {actual}"
                return None

            yield f"cart-pairing {la} x {lb}", run

    for la, ga, sa, fa in near:
        for lb, gb, sb, fb in near:
            if ga.n * gb.n > bound:
                continue

            def run(ga=ga, gb=gb, sa=sa, sb=sb, fa=fa, fb=fb) -> str | None:
                prod = cartesian_product(ga, gb)
                sigma = product_sigma(ga, gb, sa, sb)
                if not is_near_involution(prod, sigma):
                    return "componentwise map is not a near-involution"
                gi = {v: k for k, v in enumerate(ga.vertices)}
                hi = {v: k for k, v in enumerate(gb.vertices)}
                fixed = gi[fa] * gb.n + hi[fb]
                actual = outcome(prod)
                if actual != N:
                    return f"product predicted N, solver says {actual}"
                if fixed not in winning_moves(prod):
                    return f"fixed vertex {fixed} is not a winning move"
                return None

            yield f"cart-near {la} x {lb}", run


def _blowup_checks(bound: int, max_weight: int = 3) -> Iterator[Check]:
    seen: set[bytes] = set()
    for n in range(1, bound + 1):
        for i, g in enumerate(enumerate_graphs(n)):
            for ws in itertools.product(range(1, max_weight + 1), repeat=n):
                wg = WeightedGraph(g, dict(zip(g.vertices, ws)))
                key = weighted_key(wg)
                if key in seen:
                    continue
                seen.add(key)
                label = f"n={n}#{i} w={','.join(map(str, ws))}"

                def run(wg=wg) -> str | None:
                    direct = weighted_outcome(wg)
                    reduced = outcome(blowup(wg))
                    if direct != reduced:
                        return f"weighted game {direct}, blowup {reduced}"
                    return None

                yield f"blowup {label}", run


def _octal_equiv_check(bound: int, seq: SGSequence | None) -> Check:
    def run() -> str | None:
        from .octal import path_equivalence_check

        report = path_equivalence_check(bound, seq=seq)
        if not report.ok:
            first = report.mismatches[:3]
            return f"{len(report.mismatches)} mismatches, first {first}"
        return None

    return f"path/heap values agree to n={bound}", run
