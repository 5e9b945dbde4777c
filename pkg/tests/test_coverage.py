"""Distance and coverage scoring against the benchmark partition."""

import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paretorank import (
    EquivalenceClasses,
    coverage_report,
    inversion_count,
    max_distance,
    sequence_distance,
    to_ranked_sequence,
)
from oracles import bubble_sort_distance, greedy_diff_distance


def classes_of(sizes):
    """Build an EquivalenceClasses with consecutive indices per class."""
    classes = []
    rank_of = []
    start = 0
    for k, s in enumerate(sizes):
        classes.append(tuple(range(start, start + s)))
        rank_of.extend([k + 1] * s)
        start += s
    return EquivalenceClasses(classes=tuple(classes), rank_of=tuple(rank_of))


def random_classes(rng, n):
    """Random ordered partition of range(n) into 1..n classes."""
    k = rng.randint(1, n)
    assignment = [rng.randrange(k) for _ in range(n)]
    # make sure every class is non-empty
    for c in range(k):
        assignment[rng.randrange(n)] = c
    used = sorted(set(assignment))
    remap = {c: i for i, c in enumerate(used)}
    rank_of = tuple(remap[a] + 1 for a in assignment)
    classes = tuple(
        tuple(i for i in range(n) if rank_of[i] == c + 1) for c in range(len(used))
    )
    return EquivalenceClasses(classes=classes, rank_of=rank_of)


def test_worked_example_total_reversal():
    # two classes of two; the exact reverse ordering pays every
    # cross-class pair: distance 4 of a possible 4, coverage 0
    p = classes_of([2, 2])
    order = [3, 2, 1, 0]
    assert max_distance(p) == 4
    assert sequence_distance(order, p) == 4
    r = coverage_report([[i] for i in order], p)
    assert r.distance_best == 4
    assert r.distance_worst == 4
    assert r.best_coverage == 0.0
    assert r.worst_coverage == 0.0
    assert r.certratio == 0.0
    assert not r.degenerate


def test_perfect_ordering_full_coverage():
    p = classes_of([2, 2])
    r = coverage_report([[0, 1], [2, 3]], p)
    assert r.distance_best == 0
    assert r.best_coverage == 1.0


def test_tie_group_spreads_best_and_worst():
    # middle tie group {1,2} straddles the class boundary: resolving it
    # ascending costs 3 swaps, descending 4
    p = classes_of([2, 2])
    r = coverage_report([[3], [1, 2], [0]], p)
    assert r.distance_best == 3
    assert r.distance_worst == 4
    assert r.max_distance == 4
    assert r.best_coverage == pytest.approx(0.25)
    assert r.worst_coverage == 0.0
    assert r.certratio == pytest.approx(0.25)


def test_inversion_count_basics():
    assert inversion_count([]) == 0
    assert inversion_count([1]) == 0
    assert inversion_count([1, 2, 3]) == 0
    assert inversion_count([3, 2, 1]) == 3
    assert inversion_count([2, 2, 1, 1]) == 4
    assert inversion_count([1, 1, 1]) == 0


@given(st.lists(st.integers(1, 10), max_size=40))
@settings(max_examples=300, deadline=None)
def test_inversion_count_matches_bubble_sort(seq):
    assert inversion_count(seq) == bubble_sort_distance(seq)


@given(st.lists(st.integers(1, 8), max_size=25))
@settings(max_examples=300, deadline=None)
def test_greedy_diff_strategy_agrees(seq):
    assert greedy_diff_distance(seq) == inversion_count(seq)


def test_max_distance_all_singletons():
    assert max_distance(classes_of([1] * 5)) == 10


def test_max_distance_single_class_is_zero():
    assert max_distance(classes_of([6])) == 0


@pytest.mark.parametrize("n", range(2, 7))
def test_max_distance_is_attained_and_never_exceeded(n):
    rng = random.Random(n)
    for _ in range(3):
        p = random_classes(rng, n)
        maxd = max_distance(p)
        best = 0
        for perm in itertools.permutations(range(n)):
            d = sequence_distance(list(perm), p)
            assert d <= maxd
            best = max(best, d)
        assert best == maxd


@pytest.mark.parametrize("seed", range(12))
def test_best_worst_match_exhaustive_group_orders(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    p = random_classes(rng, n)
    nodes = list(range(n))
    rng.shuffle(nodes)
    groups = []
    while nodes:
        take = rng.randint(1, min(3, len(nodes)))
        groups.append(nodes[:take])
        nodes = nodes[take:]
    r = coverage_report(groups, p)
    distances = []
    for resolution in itertools.product(
        *[itertools.permutations(g) for g in groups]
    ):
        flat = [i for group in resolution for i in group]
        distances.append(sequence_distance(flat, p))
    assert r.distance_best == min(distances)
    assert r.distance_worst == max(distances)


def test_tie_free_ranking_has_zero_certratio():
    rng = random.Random(5)
    p = random_classes(rng, 8)
    order = list(range(8))
    rng.shuffle(order)
    r = coverage_report([[i] for i in order], p)
    assert r.distance_best == r.distance_worst
    assert r.certratio == 0.0


def test_degenerate_single_class_benchmark():
    p = classes_of([4])
    r = coverage_report([[2], [0, 3], [1]], p)
    assert r.max_distance == 0
    assert r.best_coverage == 1.0
    assert r.worst_coverage == 1.0
    assert r.certratio == 0.0
    assert r.degenerate


def test_partition_validation():
    p = classes_of([2, 2])
    with pytest.raises(ValueError):
        coverage_report([[0, 1], [2]], p)  # missing node
    with pytest.raises(ValueError):
        coverage_report([[0, 1], [1, 2, 3]], p)  # duplicate
    with pytest.raises(ValueError):
        coverage_report([[0, 1], [2, 4]], p)  # out of range
    with pytest.raises(ValueError):
        sequence_distance([0, 1, 2], p)


def test_accepts_ranked_sequence_input():
    p = classes_of([2, 2])
    s = to_ranked_sequence(np.array([5.0, 5.0, 2.0, 1.0]))
    assert s.groups == ((0, 1), (2,), (3,))
    r = coverage_report(s, p)
    assert r.distance_best == 0
    assert r.distance_worst == 0
    assert r.best_coverage == 1.0


@pytest.mark.parametrize("seed", range(25))
def test_report_invariants(seed):
    rng = random.Random(100 + seed)
    n = rng.randint(1, 30)
    p = random_classes(rng, n)
    nodes = list(range(n))
    rng.shuffle(nodes)
    groups = []
    while nodes:
        take = rng.randint(1, min(5, len(nodes)))
        groups.append(nodes[:take])
        nodes = nodes[take:]
    r = coverage_report(groups, p)
    assert 0 <= r.distance_best <= r.distance_worst
    if r.degenerate:
        assert r.max_distance == 0
        assert (r.best_coverage, r.worst_coverage, r.certratio) == (1.0, 1.0, 0.0)
    else:
        assert r.distance_worst <= r.max_distance
        assert 0.0 <= r.worst_coverage <= r.best_coverage <= 1.0
        assert r.certratio == pytest.approx(r.best_coverage - r.worst_coverage)
        assert r.best_coverage == pytest.approx(1 - r.distance_best / r.max_distance)
