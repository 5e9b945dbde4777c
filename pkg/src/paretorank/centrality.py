"""Centrality indicators: degree, betweenness, closeness, neighbors score.

Betweenness and closeness need one BFS per source, so both are backed by
compiled kernels and can spread sources over worker threads.  Per-source
contributions are merged in source order regardless of worker count, so
results do not depend on threading.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graphio import Graph

INDICATOR_NAMES = ("degree", "betweenness", "closeness", "neighbors")


class DisconnectedGraphError(ValueError):
    """Raised when closeness is requested on a disconnected graph."""


def _source_chunks(n: int, threads: int) -> list[np.ndarray]:
    threads = max(1, min(threads, n))
    bounds = np.linspace(0, n, threads + 1).astype(np.int64)
    return [
        np.arange(bounds[i], bounds[i + 1], dtype=np.int32)
        for i in range(threads)
        if bounds[i] < bounds[i + 1]
    ]


def degree(g: Graph) -> np.ndarray:
    return np.array([len(nbrs) for nbrs in g.adjacency], dtype=np.float64)


def betweenness(g: Graph, threads: int = 1) -> np.ndarray:
    """Shortest-path betweenness, each unordered pair counted once."""
    if g.n == 0:
        return np.zeros(0)
    indptr, indices = _kernels.csr_arrays(g)
    chunks = _source_chunks(g.n, threads)
    parts = [np.zeros(g.n) for _ in chunks]
    if len(chunks) == 1:
        _kernels.brandes_accumulate(indptr, indices, chunks[0], parts[0])
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            futs = [
                pool.submit(_kernels.brandes_accumulate, indptr, indices, c, p)
                for c, p in zip(chunks, parts)
            ]
            for f in futs:
                f.result()
    total = parts[0]
    for p in parts[1:]:
        total += p
    # undirected: every pair was accumulated from both endpoints
    return total / 2.0


def _distance_stats(g: Graph, threads: int = 1) -> tuple[np.ndarray, np.ndarray]:
    indptr, indices = _kernels.csr_arrays(g)
    dist_sums = np.zeros(g.n, dtype=np.int64)
    reach = np.zeros(g.n, dtype=np.int64)
    chunks = _source_chunks(g.n, threads)
    if len(chunks) <= 1:
        for c in chunks:
            _kernels.bfs_distance_stats(indptr, indices, c, dist_sums, reach)
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            futs = [
                pool.submit(_kernels.bfs_distance_stats, indptr, indices, c, dist_sums, reach)
                for c in chunks
            ]
            for f in futs:
                f.result()
    return dist_sums, reach


def closeness(g: Graph, threads: int = 1) -> np.ndarray:
    """Reciprocal of the total hop distance to all other nodes.

    Defined only on connected graphs with at least two nodes; otherwise some
    distance is infinite and the indicator is meaningless.
    """
    if g.n == 0:
        return np.zeros(0)
    dist_sums, reach = _distance_stats(g, threads)
    if int(reach.min()) < g.n:
        raise DisconnectedGraphError(
            "closeness requires a connected graph; restrict to one component first"
        )
    if g.n == 1:
        return np.zeros(1)
    return 1.0 / dist_sums.astype(np.float64)


def neighbors_score(g: Graph, nk: float = 1.0) -> np.ndarray:
    """Generalized-mean style aggregate of neighbor degrees.

    score(a) = (sum over neighbors b of degree(b)**nk) ** (1/nk).
    nk = 1 gives the plain sum of neighbor degrees.
    """
    if nk <= 0:
        raise ValueError("nk must be positive")
    deg = degree(g)
    out = np.zeros(g.n, dtype=np.float64)
    for i, nbrs in enumerate(g.adjacency):
        if not nbrs:
            continue
        if nk == 1.0:
            out[i] = sum(deg[j] for j in nbrs)
        else:
            out[i] = sum(deg[j] ** nk for j in nbrs) ** (1.0 / nk)
        if not math.isfinite(out[i]):
            raise ValueError(f"neighbors score overflowed for nk={nk}")
    return out


@dataclass(frozen=True)
class ScoreTable:
    """Per-node indicator values, columns in INDICATOR_NAMES order."""

    labels: tuple[str, ...]
    values: np.ndarray  # shape (n, 4), float64

    def column(self, name: str) -> np.ndarray:
        if name not in INDICATOR_NAMES:
            raise KeyError(name)
        return self.values[:, INDICATOR_NAMES.index(name)]


def score_table(g: Graph, nk: float = 1.0, threads: int = 1) -> ScoreTable:
    """Compute all four indicators; the graph must be connected."""
    values = np.column_stack(
        [
            degree(g),
            betweenness(g, threads),
            closeness(g, threads),
            neighbors_score(g, nk),
        ]
    )
    return ScoreTable(labels=g.labels, values=values)
