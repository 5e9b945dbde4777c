"""Ordinal ranking and non-dominated sorting."""

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paretorank import (
    EquivalenceClasses,
    dominates,
    equivalence_classes,
    ordinalize,
    rank_nodes,
)
from paretorank.pareto import _validate_classes
from oracles import layered_reference


def test_ordinalize_dense_ranks_with_ties():
    assert ordinalize(np.array([10.0, 10.0, 5.0])).tolist() == [1, 1, 2]


def test_ordinalize_two_columns():
    raw = np.array([[3.0, 2.0], [1.0, 1.0], [2.0, 3.0]])
    o = ordinalize(raw)
    assert o.tolist() == [[1, 2], [3, 3], [2, 1]]


def test_ordinalize_all_equal():
    assert ordinalize(np.array([4.0, 4.0, 4.0])).tolist() == [1, 1, 1]


def test_ordinalize_chains_near_ties():
    # adjacent values sit within relative tolerance of each other, so the
    # whole run collapses to one rank even though the endpoints differ by
    # more than the tolerance
    base = 1.0
    vals = np.array([base, base * (1 + 0.8e-9), base * (1 + 1.6e-9), 2.0])
    assert ordinalize(vals).tolist() == [2, 2, 2, 1]


def test_ordinalize_zero_tolerance_separates():
    vals = np.array([1.0, 1.0 + 1e-12])
    assert ordinalize(vals, tol=0.0).tolist() == [2, 1]
    assert ordinalize(vals).tolist() == [1, 1]


def test_ordinalize_input_validation():
    with pytest.raises(ValueError):
        ordinalize(np.array([1.0, np.nan]))
    with pytest.raises(ValueError):
        ordinalize(np.array([1.0, np.inf]))
    with pytest.raises(ValueError):
        ordinalize(np.array([1.0]), tol=-1e-9)
    with pytest.raises(ValueError):
        ordinalize(np.zeros((2, 2, 2)))


def test_ordinalize_empty():
    assert ordinalize(np.array([])).shape == (0,)


def test_dominates_examples():
    assert dominates((1, 2), (3, 3))
    assert not dominates((1, 2), (2, 1))
    assert not dominates((2, 1), (1, 2))
    assert not dominates((1, 1), (1, 1))
    assert dominates((1, 1), (1, 2))
    with pytest.raises(ValueError):
        dominates((1, 2), (1, 2, 3))


def test_three_node_classes():
    ordinals = np.array([[1, 2], [3, 3], [2, 1]])
    p = equivalence_classes(ordinals)
    assert p.classes == ((0, 2), (1,))
    assert p.rank_of == (1, 2, 1)
    assert p.n_classes == 2
    assert p.sizes() == (2, 1)


def test_identical_rows_single_class():
    ordinals = np.ones((5, 4), dtype=np.int64)
    p = equivalence_classes(ordinals)
    assert p.classes == ((0, 1, 2, 3, 4),)
    assert p.rank_of == (1, 1, 1, 1, 1)


def test_total_order_one_class_each():
    ordinals = np.array([[3, 3], [1, 1], [2, 2]])
    p = equivalence_classes(ordinals)
    assert p.rank_of == (3, 1, 2)


def test_empty_matrix():
    p = equivalence_classes(np.zeros((0, 4), dtype=np.int64))
    assert p.classes == ()
    assert p.rank_of == ()
    assert p.n_classes == 0


def test_unknown_method_rejected():
    with pytest.raises(ValueError):
        equivalence_classes(np.ones((2, 2), dtype=np.int64), method="bogus")
    with pytest.raises(ValueError):
        equivalence_classes(np.ones(4, dtype=np.int64))


def _random_ordinals(rng, n, m):
    cols = rng.randint(2, 4)
    return np.array(
        [[rng.randint(1, m) for _ in range(cols)] for _ in range(n)], dtype=np.int64
    )


@pytest.mark.parametrize("seed", range(40))
def test_naive_matches_pairwise_rescan_oracle(seed):
    rng = random.Random(seed)
    ordinals = _random_ordinals(rng, rng.randint(1, 40), rng.randint(1, 6))
    p = equivalence_classes(ordinals, method="naive")
    want = layered_reference([tuple(row) for row in ordinals.tolist()])
    assert list(p.rank_of) == [x + 1 for x in want]


@pytest.mark.parametrize("seed", range(40))
def test_fast_matches_naive_exactly(seed):
    rng = random.Random(500 + seed)
    ordinals = _random_ordinals(rng, rng.randint(1, 60), rng.randint(1, 5))
    a = equivalence_classes(ordinals, method="naive")
    b = equivalence_classes(ordinals, method="fast")
    assert a == b


@given(
    st.lists(
        st.tuples(st.integers(1, 5), st.integers(1, 5), st.integers(1, 5)),
        min_size=2,
        max_size=8,
    )
)
@settings(max_examples=200, deadline=None)
def test_dominance_axioms(rows):
    arr = [np.array(r) for r in rows]
    for a in arr:
        assert not dominates(a, a)
    for a in arr:
        for b in arr:
            if dominates(a, b):
                assert not dominates(b, a)
            for c in arr:
                if dominates(a, b) and dominates(b, c):
                    assert dominates(a, c)


@pytest.mark.parametrize("seed", range(10))
def test_monotone_transform_leaves_classes_unchanged(seed):
    rng = random.Random(900 + seed)
    n = rng.randint(2, 20)
    raw = np.array([[rng.uniform(0.5, 9.5) for _ in range(4)] for _ in range(n)])
    base = rank_nodes(raw)
    for f in (lambda x: 3.0 * x + 1.0, np.exp, lambda x: x**3):
        assert rank_nodes(f(raw)) == base


def test_strictly_dominated_append_lands_lower():
    rng = random.Random(11)
    ordinals = _random_ordinals(rng, 12, 4)
    worst = ordinals.max() + 1
    appended = np.vstack([ordinals, np.full((1, ordinals.shape[1]), worst)])
    p = equivalence_classes(appended)
    new_rank = p.rank_of[-1]
    assert new_rank == p.n_classes
    assert all(r < new_rank for r in p.rank_of[:-1])


def test_rank_nodes_is_ordinalize_then_sort():
    rng = random.Random(3)
    raw = np.array([[rng.uniform(0, 5) for _ in range(4)] for _ in range(15)])
    assert rank_nodes(raw) == equivalence_classes(ordinalize(raw))


def test_classes_listed_in_ascending_node_order():
    rng = random.Random(8)
    ordinals = _random_ordinals(rng, 25, 3)
    p = equivalence_classes(ordinals)
    for members in p.classes:
        assert list(members) == sorted(members)
    assert sum(p.sizes()) == ordinals.shape[0]


def test_validation_rejects_corrupt_grouping():
    ordinals = np.array([[1, 1], [2, 2]])
    merged = EquivalenceClasses(classes=((0, 1),), rank_of=(1, 1))
    with pytest.raises(AssertionError):
        _validate_classes(merged, ordinals)
    swapped = EquivalenceClasses(classes=((1,), (0,)), rank_of=(2, 1))
    with pytest.raises(AssertionError):
        _validate_classes(swapped, ordinals)
