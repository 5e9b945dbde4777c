"""Benchmark ranking by non-dominated sorting over indicator vectors.

Raw indicator values are first turned into per-column ordinals (dense ranks,
1 = best) with a relative tolerance for float ties.  Nodes are then peeled
into equivalence classes: class 1 is every node not dominated by any other,
class 2 is every node not dominated once class 1 is removed, and so on.
A node dominates another when it ranks at least as well on every indicator
and strictly better on at least one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels

DEFAULT_TOL = 1e-9


def _close(a: float, b: float, tol: float) -> bool:
    return abs(a - b) <= tol * max(abs(a), abs(b))


def _ordinal_column(column: np.ndarray, tol: float) -> np.ndarray:
    n = column.shape[0]
    ranks = np.empty(n, dtype=np.int64)
    if n == 0:
        return ranks
    order = np.argsort(-column, kind="stable")
    rank = 1
    prev = column[order[0]]
    for pos, idx in enumerate(order):
        v = column[idx]
        if pos > 0 and not _close(prev, v, tol):
            rank += 1
        ranks[idx] = rank
        prev = v
    return ranks


def ordinalize(scores: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Dense ordinal ranks per column, 1 = highest score.

    Accepts a single column or a (node x indicator) matrix.  Values are
    grouped by chaining: after a descending sort, a value joins the current
    group when it lies within relative tolerance of the previous one, so
    exact ties always share a rank and near-tie runs collapse together.
    """
    scores = np.asarray(scores, dtype=np.float64)
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    if not np.all(np.isfinite(scores)):
        raise ValueError("scores must be finite")
    if scores.ndim == 1:
        return _ordinal_column(scores, tol)
    if scores.ndim == 2:
        return np.column_stack(
            [_ordinal_column(scores[:, k], tol) for k in range(scores.shape[1])]
        )
    raise ValueError("scores must be 1-D or 2-D")


def dominates(a: np.ndarray, b: np.ndarray) -> bool:
    """True when ordinal vector `a` dominates `b` (lower rank = better)."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError("vectors must have equal length")
    return bool(np.all(a <= b) and np.any(a < b))


@dataclass(frozen=True)
class EquivalenceClasses:
    """Nodes grouped into benchmark classes, best class first.

    classes[k] lists node indices of class k+1 in ascending index order.
    rank_of[i] is the 1-based class of node i.
    """

    classes: tuple[tuple[int, ...], ...]
    rank_of: tuple[int, ...]

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


def _classes_from_assignment(front_of: np.ndarray, n_fronts: int) -> EquivalenceClasses:
    buckets: list[list[int]] = [[] for _ in range(n_fronts)]
    for i, f in enumerate(front_of):
        buckets[f].append(i)
    return EquivalenceClasses(
        classes=tuple(tuple(b) for b in buckets),
        rank_of=tuple(int(f) + 1 for f in front_of),
    )


def _sort_naive(ordinals: np.ndarray) -> np.ndarray:
    """Reference peeling: repeatedly extract the non-dominated set."""
    n = ordinals.shape[0]
    front_of = np.full(n, -1, dtype=np.int64)
    remaining = list(range(n))
    front = 0
    while remaining:
        keep = []
        for i in remaining:
            if any(dominates(ordinals[j], ordinals[i]) for j in remaining if j != i):
                keep.append(i)
            else:
                front_of[i] = front
        if len(keep) == len(remaining):
            raise AssertionError("no non-dominated point found; dominance relation broken")
        remaining = keep
        front += 1
    return front_of


def _sort_fast(ordinals: np.ndarray) -> np.ndarray:
    """Front assignment via layered search over lex-sorted unique rows.

    Duplicate ordinal vectors always share a class, so the kernel only sees
    unique rows; any dominator of a row sorts lexicographically before it.
    """
    uniq, inverse = np.unique(ordinals, axis=0, return_inverse=True)
    front_u, _ = _kernels.assign_fronts(np.ascontiguousarray(uniq, dtype=np.int64))
    return front_u[inverse.ravel()].astype(np.int64)


def _validate_classes(result: EquivalenceClasses, ordinals: np.ndarray) -> None:
    """Check the defining properties of the layering on every run.

    Vectorized over unique vectors per class: no class is empty, members of
    one class never dominate each other, and every node of class k > 1 is
    dominated by some node of class k - 1.
    """
    uniq_per_class: list[np.ndarray] = []
    for members in result.classes:
        if not members:
            raise AssertionError("empty equivalence class")
        uniq_per_class.append(np.unique(ordinals[list(members)], axis=0))
    for k, u in enumerate(uniq_per_class):
        le = np.all(u[:, None, :] <= u[None, :, :], axis=2)
        lt = np.any(u[:, None, :] < u[None, :, :], axis=2)
        if np.any(le & lt):
            raise AssertionError(f"dominance inside class {k + 1}")
        if k > 0:
            prev = uniq_per_class[k - 1]
            le = np.all(prev[:, None, :] <= u[None, :, :], axis=2)
            lt = np.any(prev[:, None, :] < u[None, :, :], axis=2)
            if not np.all(np.any(le & lt, axis=0)):
                raise AssertionError(f"class {k + 1} member not dominated from class {k}")


def equivalence_classes(ordinals: np.ndarray, method: str = "naive") -> EquivalenceClasses:
    """Group nodes by non-dominated sorting of their ordinal vectors.

    method "naive" is the direct peeling loop; "fast" routes unique vectors
    through the compiled layered sorter.  Both produce identical classes.
    The result is validated against the defining invariants before return.
    """
    ordinals = np.asarray(ordinals)
    if ordinals.ndim != 2:
        raise ValueError("ordinal matrix must be 2-D")
    n = ordinals.shape[0]
    if n == 0:
        return EquivalenceClasses(classes=(), rank_of=())
    if method == "naive":
        front_of = _sort_naive(ordinals)
    elif method == "fast":
        front_of = _sort_fast(ordinals)
    else:
        raise ValueError(f"unknown method: {method!r}")
    result = _classes_from_assignment(front_of, int(front_of.max()) + 1)
    _validate_classes(result, ordinals)
    return result


def rank_nodes(
    values: np.ndarray, tol: float = DEFAULT_TOL, method: str = "naive"
) -> EquivalenceClasses:
    """Full benchmark pipeline: ordinalize columns, then sort into classes."""
    return equivalence_classes(ordinalize(values, tol), method=method)
