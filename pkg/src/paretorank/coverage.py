"""Scoring a ranking algorithm against the benchmark classes.

The algorithm's output is read as an ordered partition: tie groups of node
indices, best group first.  Replacing each node by its benchmark class number
gives a sequence whose distance from the benchmark is the minimum number of
adjacent transpositions needed to sort it ascending, i.e. the number of
strictly-out-of-order pairs.  Pairs inside one benchmark class cost nothing.

Ties in the algorithm's output make the distance ambiguous, so both extremes
are reported: the best arrangement orders every tie group ascending by
benchmark class, the worst one descending.  Normalizing by the largest
distance any sequence can reach yields coverage in [0, 1]; certratio, the
gap between best and worst coverage, measures how much the ties hide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linkanalysis import RankedSequence
from .pareto import EquivalenceClasses


def inversion_count(seq: Sequence[int]) -> int:
    """Number of pairs (i, j) with i < j and seq[i] > seq[j].

    Merge-sort counting; equal elements are never counted.
    """
    work = list(seq)
    buf = [0] * len(work)

    def count(lo: int, hi: int) -> int:
        if hi - lo <= 1:
            return 0
        mid = (lo + hi) // 2
        inv = count(lo, mid) + count(mid, hi)
        i, j, k = lo, mid, lo
        while i < mid and j < hi:
            if work[i] <= work[j]:
                buf[k] = work[i]
                i += 1
            else:
                inv += mid - i
                buf[k] = work[j]
                j += 1
            k += 1
        buf[k : k + mid - i] = work[i:mid]
        buf[k + mid - i : hi] = work[j:hi]
        work[lo:hi] = buf[lo:hi]
        return inv

    return count(0, len(work))


def max_distance(p: EquivalenceClasses) -> int:
    """Largest possible distance: all unordered pairs minus within-class pairs."""
    n = len(p.rank_of)
    total = n * (n - 1) // 2
    for s in p.sizes():
        total -= s * (s - 1) // 2
    return total


def _check_partition(groups: Sequence[Sequence[int]], n: int) -> None:
    seen = [False] * n
    count = 0
    for group in groups:
        for i in group:
            if not 0 <= i < n:
                raise ValueError(f"node index {i} out of range")
            if seen[i]:
                raise ValueError(f"node index {i} appears twice in the ranking")
            seen[i] = True
            count += 1
    if count != n:
        raise ValueError(f"ranking covers {count} of {n} nodes")


def sequence_distance(order: Sequence[int], p: EquivalenceClasses) -> int:
    """Swap distance of a tie-free node ordering (best node first)."""
    _check_partition([order], len(p.rank_of))
    return inversion_count([p.rank_of[i] for i in order])


@dataclass(frozen=True)
class CoverageReport:
    distance_best: int
    distance_worst: int
    max_distance: int
    best_coverage: float
    worst_coverage: float
    certratio: float
    degenerate: bool  # max_distance == 0, coverage pinned to 1


def coverage_report(
    s: RankedSequence | Sequence[Sequence[int]], p: EquivalenceClasses
) -> CoverageReport:
    """Score a ranking against the benchmark.

    `s` is a RankedSequence or a bare list of tie groups (best first);
    together the groups must contain every node index exactly once.
    """
    groups = s.groups if isinstance(s, RankedSequence) else s
    _check_partition(groups, len(p.rank_of))
    maxd = max_distance(p)
    best_seq: list[int] = []
    worst_seq: list[int] = []
    for group in groups:
        ranks = sorted(p.rank_of[i] for i in group)
        best_seq.extend(ranks)
        worst_seq.extend(reversed(ranks))
    best_d = inversion_count(best_seq)
    worst_d = inversion_count(worst_seq)
    if maxd == 0:
        return CoverageReport(best_d, worst_d, 0, 1.0, 1.0, 0.0, True)
    return CoverageReport(
        distance_best=best_d,
        distance_worst=worst_d,
        max_distance=maxd,
        best_coverage=1.0 - best_d / maxd,
        worst_coverage=1.0 - worst_d / maxd,
        certratio=(worst_d - best_d) / maxd,
        degenerate=False,
    )
