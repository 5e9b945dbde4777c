"""Compiled array kernels: per-source BFS passes and layered front assignment.

All kernels operate on CSR-style adjacency arrays and release the GIL so
callers can fan source chunks out over threads.  Accumulation order inside
a kernel is fixed (source order, then adjacency order), which keeps results
bitwise-reproducible for a given chunking.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .graphio import Graph


def csr_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Flatten adjacency into (indptr, indices) arrays."""
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    for i, nbrs in enumerate(g.adjacency):
        indptr[i + 1] = indptr[i] + len(nbrs)
    indices = np.empty(indptr[-1], dtype=np.int32)
    pos = 0
    for nbrs in g.adjacency:
        indices[pos : pos + len(nbrs)] = nbrs
        pos += len(nbrs)
    return indptr, indices


@njit(cache=True, nogil=True)
def brandes_accumulate(indptr, indices, sources, betw):
    """Add shortest-path dependency scores for the given sources onto `betw`.

    Single-source BFS counts geodesics (sigma), then back-propagates
    dependencies without storing predecessor lists: v precedes w exactly
    when d[v] == d[w] - 1 along an edge.
    """
    n = indptr.shape[0] - 1
    d = np.empty(n, np.int32)
    sigma = np.empty(n, np.float64)
    delta = np.empty(n, np.float64)
    order = np.empty(n, np.int32)
    for si in range(sources.shape[0]):
        s = sources[si]
        for i in range(n):
            d[i] = -1
            sigma[i] = 0.0
            delta[i] = 0.0
        d[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head, tail = 0, 1
        while head < tail:
            v = order[head]
            head += 1
            dv1 = d[v] + 1
            for ei in range(indptr[v], indptr[v + 1]):
                w = indices[ei]
                if d[w] < 0:
                    d[w] = dv1
                    order[tail] = w
                    tail += 1
                if d[w] == dv1:
                    sigma[w] += sigma[v]
        for i in range(tail - 1, 0, -1):
            w = order[i]
            coef = (1.0 + delta[w]) / sigma[w]
            dw1 = d[w] - 1
            for ei in range(indptr[w], indptr[w + 1]):
                v = indices[ei]
                if d[v] == dw1:
                    delta[v] += sigma[v] * coef
            betw[w] += delta[w]


@njit(cache=True, nogil=True)
def bfs_distance_stats(indptr, indices, sources, dist_sums, reach):
    """Per-source BFS: total hop distance and reached-node count (incl. source)."""
    n = indptr.shape[0] - 1
    d = np.empty(n, np.int32)
    order = np.empty(n, np.int32)
    for si in range(sources.shape[0]):
        s = sources[si]
        for i in range(n):
            d[i] = -1
        d[s] = 0
        order[0] = s
        head, tail = 0, 1
        total = 0
        while head < tail:
            v = order[head]
            head += 1
            total += d[v]
            dv1 = d[v] + 1
            for ei in range(indptr[v], indptr[v + 1]):
                w = indices[ei]
                if d[w] < 0:
                    d[w] = dv1
                    order[tail] = w
                    tail += 1
        dist_sums[s] = total
        reach[s] = tail


@njit(cache=True)
def assign_fronts(points):
    """Layer unique, lexicographically ascending ordinal vectors into fronts.

    Returns (front_of, n_fronts).  A point's front is the lowest one holding
    no dominator, found by binary search; front membership is tracked with
    intrusive linked lists.  Lex order guarantees candidate dominators were
    processed earlier.
    """
    nu, m = points.shape
    front_of = np.empty(nu, np.int32)
    head = np.full(nu + 1, -1, np.int32)
    nxt = np.empty(nu, np.int32)
    n_fronts = 0
    for i in range(nu):
        lo, hi = 0, n_fronts
        while lo < hi:
            mid = (lo + hi) // 2
            dominated = False
            j = head[mid]
            while j != -1:
                ok = True
                for k in range(m):
                    if points[j, k] > points[i, k]:
                        ok = False
                        break
                if ok:
                    # rows are unique, so "all <=" implies strict somewhere
                    dominated = True
                    break
                j = nxt[j]
            if dominated:
                lo = mid + 1
            else:
                hi = mid
        front_of[i] = lo
        if lo == n_fronts:
            n_fronts += 1
        nxt[i] = head[lo]
        head[lo] = i
    return front_of, n_fronts


def warmup() -> None:
    """Trigger JIT compilation on a tiny instance (results discarded)."""
    indptr = np.array([0, 1, 2], dtype=np.int64)
    indices = np.array([1, 0], dtype=np.int32)
    sources = np.arange(2, dtype=np.int32)
    brandes_accumulate(indptr, indices, sources, np.zeros(2))
    bfs_distance_stats(indptr, indices, sources, np.zeros(2, np.int64), np.zeros(2, np.int64))
    assign_fronts(np.array([[1, 2], [2, 1]], dtype=np.int64))
