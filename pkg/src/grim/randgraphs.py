"""Win-probability analysis on Erdos-Renyi graphs: exact enumeration of the
second player's winning probability as a polynomial in the edge probability,
crossing points with 1/2, Monte-Carlo estimates beyond enumeration reach,
and the closed-form lower bound on where the second player takes over.

Histograms hold exact integer counts per edge count, so the winning
probability evaluates in the binomial-weighted form

    W2(p) = sum_k p_counts[k] * p^k * (1-p)^(m_max-k)

with no premature polynomial expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, sqrt

import numpy as np

from .graphs import Graph
from .solver import outcome

DEFAULT_ENUM_CAP = 6


@dataclass
class EdgeCountHistogram:
    """Per-edge-count tallies of labeled second-player-win graphs on n vertices."""

    n: int
    p_counts: list[int]
    total_counts: list[int]

    @property
    def m_max(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def n_counts(self) -> list[int]:
        return [t - p for t, p in zip(self.total_counts, self.p_counts)]


@dataclass
class CrossingReport:
    n: int
    roots: list[float]
    method: str = "exact-bisection"


@dataclass
class MonteCarloEstimate:
    n: int
    p: float
    trials: int
    seed: int
    p2_fraction: float
    stderr: float


def exact_histogram(n: int, enum_cap: int = DEFAULT_ENUM_CAP) -> EdgeCountHistogram:
    """Classify every labeled graph on n vertices and tally losing-mover
    (second-player-win) positions by edge count."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > enum_cap:
        raise ValueError(f"exact enumeration capped at n={enum_cap}, got {n}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    m = len(pairs)
    p_counts = [0] * (m + 1)
    class_cache: dict[bytes, str] = {}
    from .canon import canonical_form
    from .engine import normalize

    for mask in range(1 << m):
        edges = [pairs[k] for k in range(m) if mask >> k & 1]
        g = normalize(Graph(range(n), edges))
        key = canonical_form(g)
        got = class_cache.get(key)
        if got is None:
            got = outcome(g)
            class_cache[key] = got
        if got == "P":
            p_counts[bin(mask).count("1")] += 1
    totals = [comb(m, k) for k in range(m + 1)]
    return EdgeCountHistogram(n=n, p_counts=p_counts, total_counts=totals)


def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")


def w2(hist: EdgeCountHistogram, p: float) -> float:
    """Probability that the second player wins G(n, p)."""
    _check_p(p)
    m = hist.m_max
    return sum(c * p**k * (1.0 - p) ** (m - k) for k, c in enumerate(hist.p_counts) if c)


def w1(hist: EdgeCountHistogram, p: float) -> float:
    """Probability that the first player wins G(n, p); complements w2."""
    _check_p(p)
    m = hist.m_max
    return sum(c * p**k * (1.0 - p) ** (m - k) for k, c in enumerate(hist.n_counts) if c)


def crossings(hist: EdgeCountHistogram, tol: float = 1e-12, step: float = 1e-3) -> CrossingReport:
    """Roots of W2(p) = 1/2 in (0, 1) by sign-change scan plus bisection."""
    if tol <= 0:
        raise ValueError("tol must be positive")

    def f(p: float) -> float:
        return w2(hist, p) - 0.5

    roots: list[float] = []
    grid = np.arange(0.0, 1.0 + step / 2, step)
    prev_p, prev_v = float(grid[0]), f(float(grid[0]))
    for gp in grid[1:]:
        cur_p, cur_v = float(gp), f(float(gp))
        if prev_v == 0.0 and 0.0 < prev_p < 1.0:
            roots.append(prev_p)
        elif prev_v * cur_v < 0.0:
            lo, hi = prev_p, cur_p
            flo = prev_v
            while hi - lo > tol:
                mid = (lo + hi) / 2
                fm = f(mid)
                if fm == 0.0:
                    lo = hi = mid
                    break
                if (flo < 0) == (fm < 0):
                    lo, flo = mid, fm
                else:
                    hi = mid
            roots.append((lo + hi) / 2)
        prev_p, prev_v = cur_p, cur_v
    return CrossingReport(n=hist.n, roots=roots)


def monte_carlo(n: int, p: float, trials: int, seed: int, solver_cap: int = 16) -> MonteCarloEstimate:
    """Estimate the second player's win probability by sampling.

    Each of the C(n,2) edges appears independently with probability p.
    Sampled edge sets are grouped before classification, so the cost is
    bounded by the number of distinct graphs drawn; the estimate itself is
    exactly the per-trial tally and is reproducible from the seed alone.
    """
    _check_p(p)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    m = len(pairs)
    rng = np.random.default_rng(seed)
    hits = 0
    chunk = 200_000
    done = 0
    weights = (1 << np.arange(m, dtype=np.uint64)) if m else np.zeros(0, dtype=np.uint64)
    while done < trials:
        batch = min(chunk, trials - done)
        if m:
            draws = rng.random((batch, m)) < p
            masks = draws.astype(np.uint64) @ weights
        else:
            masks = np.zeros(batch, dtype=np.uint64)
        uniq, counts = np.unique(masks, return_counts=True)
        for mask, count in zip(uniq, counts):
            mask = int(mask)
            edges = [pairs[k] for k in range(m) if mask >> k & 1]
            g = Graph(range(n), edges)
            if outcome(g, cap=solver_cap) == "P":
                hits += int(count)
        done += batch
    frac = hits / trials
    se = sqrt(frac * (1.0 - frac) / trials)
    return MonteCarloEstimate(n=n, p=p, trials=trials, seed=seed, p2_fraction=frac, stderr=se)


def p0_bound(n: int) -> float:
    """Edge probability beyond which the second player wins at least half
    the time, valid for odd n (the complete graph on odd n is a loss for
    the mover): (1/4)^(1/(n^2-n))."""
    if n < 3 or n % 2 == 0:
        raise ValueError("bound requires odd n >= 3")
    return 0.25 ** (1.0 / (n * n - n))


def reference_w2_n4(p: float) -> float:
    """The previously reported n=4 closed form, kept verbatim for comparison.

    Exact enumeration disagrees with it in two places: the empty-graph term
    should be (1-p)^6 (four vertices have six edge slots, not five), and the
    three labeled 4-cycles contribute a 3p^4(1-p)^2 term it lacks. Its 0.5
    crossing sits near 0.157; the derived exact one sits near 0.124.
    """
    _check_p(p)
    return 3 * p**2 * (1 - p) ** 4 + 16 * p**3 * (1 - p) ** 3 + (1 - p) ** 5


def histogram_polynomial(hist: EdgeCountHistogram) -> str:
    """Human-readable binomial-weighted form of W2 for reports."""
    m = hist.m_max
    terms = []
    for k, c in enumerate(hist.p_counts):
        if not c:
            continue
        factors = []
        if c != 1 or (k == m == 0):
            factors.append(str(c))
        if k:
            factors.append(f"p^{k}" if k > 1 else "p")
        if m - k:
            factors.append(f"(1-p)^{m-k}" if m - k > 1 else "(1-p)")
        terms.append("*".join(factors) or "1")
    return " + ".join(terms) if terms else "0"
