"""Game-value sequence for the heap game Octal .6, at desk scale.

A move removes one chip from a heap and leaves the remainder as exactly
one or two nonempty heaps, so

    values[n] = mex({values[n-1]} | {values[a] ^ values[b] : a+b = n-1, a,b >= 1})

with values[1] = 0. The inner pair loop is the whole cost (O(n^2) total);
it runs vectorized, and mex bookkeeping uses a flat scratch array of seen
flags reset by bumping a generation counter instead of clearing.

The sequence file format is an 8-byte magic header followed by the values
for n = 1..N as little-endian 16-bit words, which supports resuming a
longer run and byte-diffing against golden files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

MAGIC = b"OCT6SGV1"

# Zero positions of the sequence, exhaustive for n <= 10^7 per the
# published computation this workbench reproduces at smaller scale.
KNOWN_ZEROS = (4, 12, 20, 30, 46, 72, 98, 124, 150, 176, 314, 408)


@dataclass
class SGSequence:
    """values[n] is the game value of heap size n; index 0 is unused."""

    values: np.ndarray

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.max_n:
            raise IndexError(f"heap size {n} outside 1..{self.max_n}")
        return int(self.values[n])


def octal6_sequence(
    max_n: int,
    progress: Callable[[int], None] | None = None,
    progress_every: int = 10_000,
) -> SGSequence:
    """Compute values for heap sizes 1..max_n."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    values = np.zeros(max_n + 1, dtype=np.uint16)
    _fill(values, start=2, progress=progress, progress_every=progress_every)
    return SGSequence(values)


def extend_sequence(
    seq: SGSequence,
    new_max: int,
    progress: Callable[[int], None] | None = None,
    progress_every: int = 10_000,
) -> SGSequence:
    """Resume computation past an existing prefix."""
    if new_max <= seq.max_n:
        return seq
    values = np.zeros(new_max + 1, dtype=np.uint16)
    values[: seq.max_n + 1] = seq.values
    _fill(values, start=seq.max_n + 1, progress=progress, progress_every=progress_every)
    return SGSequence(values)


def _fill(values: np.ndarray, start: int, progress, progress_every) -> None:
    max_n = len(values) - 1
    known_max = int(values[1:start].max()) if start > 1 else 0
    seen = np.zeros(known_max + 2, dtype=np.int64)
    gen = 0
    for n in range(max(start, 2), max_n + 1):
        gen += 1
        rest = n - 1
        half = rest // 2
        single = int(values[rest])
        bound = single
        xors = None
        if half >= 1:
            xors = values[1 : half + 1] ^ values[rest - 1 : rest - half - 1 : -1]
            bound = max(bound, int(xors.max()))
        if bound + 2 > len(seen):
            grown = np.zeros(bound + 66, dtype=np.int64)
            grown[: len(seen)] = seen
            seen = grown
        if xors is not None:
            seen[xors] = gen
        seen[single] = gen
        # index bound+1 is never marked, so a hole always exists
        val = int(np.flatnonzero(seen[: bound + 2] != gen)[0])
        if val > 0xFFFF:
            raise OverflowError(f"value {val} at n={n} does not fit in 16 bits")
        values[n] = val
        if progress is not None and n % progress_every == 0:
            progress(n)


def zeros(seq: SGSequence) -> list[int]:
    """Heap sizes n >= 2 with value zero, ascending.

    n = 1 is excluded by convention: a single vertex is swept before play
    ever starts, so it is not a playable position in the graph game this
    sequence mirrors.
    """
    return [int(i) for i in np.flatnonzero(seq.values[2:] == 0) + 2]


def save_sequence(seq: SGSequence, path: str) -> None:
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(seq.values[1:].astype("<u2").tobytes())


def load_sequence(path: str) -> SGSequence:
    with open(path, "rb") as fh:
        magic = fh.read(len(MAGIC))
        if magic != MAGIC:
            raise ValueError(f"bad sequence file magic {magic!r}")
        body = fh.read()
    if len(body) % 2:
        raise ValueError("truncated sequence file")
    vals = np.frombuffer(body, dtype="<u2")
    values = np.zeros(len(vals) + 1, dtype=np.uint16)
    values[1:] = vals
    return SGSequence(values)


@dataclass
class EquivalenceReport:
    """Outcome of the path/heap value cross-check."""

    max_n: int
    checked: int
    mismatches: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def path_equivalence_check(max_n: int = 300, seq: SGSequence | None = None) -> EquivalenceReport:
    """Compare the generic graph solver on paths against the heap sequence.

    The two sides are computed by different rules (vertex deletion with
    isolation sweeps vs. chip removal with heap splits); their agreement
    for all n is the theorem being exercised.
    """
    from .graphs import path_graph
    from .solver import sg_value

    if seq is None or seq.max_n < max_n:
        seq = octal6_sequence(max_n)
    report = EquivalenceReport(max_n=max_n, checked=max_n - 1)
    for n in range(2, max_n + 1):
        got = sg_value(path_graph(n))
        want = seq[n]
        if got != want:
            report.mismatches.append((n, got, want))
    return report
