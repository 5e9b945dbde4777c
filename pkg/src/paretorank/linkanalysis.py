"""Rankings to score against the benchmark: PageRank, HITS, score files.

Continuous scores are turned into an ordered partition (tie groups, best
first) with a small absolute tolerance, since the coverage metrics operate
on orderings rather than raw values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from .graphio import Graph, ParseError, _as_text

DEFAULT_TIE_TOL = 1e-12
PAGERANK_JUMP = 0.15
PAGERANK_SWEEPS = 200
HITS_TOL = 1e-8
HITS_MAX_ITER = 500


@dataclass(frozen=True)
class RankedSequence:
    """Ordered partition of node indices, best tie group first.

    source_scores, when present, are the per-node values the grouping was
    derived from (index-aligned with the graph, not with the groups).
    """

    groups: tuple[tuple[int, ...], ...]
    source_scores: tuple[float, ...] | None = None

    @property
    def n(self) -> int:
        return sum(len(g) for g in self.groups)

    def flatten(self) -> list[int]:
        return [i for g in self.groups for i in g]


def to_ranked_sequence(scores: np.ndarray, tie_tol: float = DEFAULT_TIE_TOL) -> RankedSequence:
    """Sort scores descending and chain near-equal neighbors into tie groups.

    Two adjacent scores join one group when they differ by at most tie_tol,
    so exact ties always group and chains of near-ties collapse together.
    Indices inside a group are listed ascending.
    """
    n = scores.shape[0]
    if n == 0:
        return RankedSequence(groups=(), source_scores=())
    order = np.argsort(-scores, kind="stable")
    groups: list[tuple[int, ...]] = []
    current = [int(order[0])]
    prev = scores[order[0]]
    for idx in order[1:]:
        v = scores[idx]
        if prev - v <= tie_tol:
            current.append(int(idx))
        else:
            groups.append(tuple(sorted(current)))
            current = [int(idx)]
        prev = v
    groups.append(tuple(sorted(current)))
    return RankedSequence(groups=tuple(groups), source_scores=tuple(float(s) for s in scores))


def _adjacency_csr(g: Graph) -> sp.csr_matrix:
    rows = []
    cols = []
    for u, nbrs in enumerate(g.adjacency):
        rows.extend([u] * len(nbrs))
        cols.extend(nbrs)
    data = np.ones(len(rows), dtype=np.float64)
    return sp.csr_matrix((data, (rows, cols)), shape=(g.n, g.n))


def pagerank(g: Graph, jump: float = PAGERANK_JUMP, sweeps: int = PAGERANK_SWEEPS) -> np.ndarray:
    """Power iteration with uniform teleport, run for a fixed sweep count.

    p'(a) = jump/n + (1-jump) * (sum over neighbors b of p(b)/deg(b)
            + uniform share of mass parked on degree-zero nodes).
    """
    if not 0.0 < jump < 1.0:
        raise ValueError("jump must lie strictly between 0 and 1")
    if sweeps < 1:
        raise ValueError("sweeps must be positive")
    n = g.n
    if n == 0:
        raise ValueError("pagerank is undefined on an empty graph")
    adj = _adjacency_csr(g)
    deg = np.asarray(adj.sum(axis=1)).ravel()
    dangling = deg == 0.0
    inv_deg = np.where(dangling, 0.0, 1.0 / np.where(dangling, 1.0, deg))
    p = np.full(n, 1.0 / n)
    for _ in range(sweeps):
        flow = adj @ (p * inv_deg)
        lost = p[dangling].sum()
        p = jump / n + (1.0 - jump) * (flow + lost / n)
    return p


def hits(g: Graph, max_iter: int = HITS_MAX_ITER, tol: float = HITS_TOL) -> np.ndarray:
    """Authority scores by mutual hub/authority iteration.

    Each round pulls authorities from hubs (a <- A h) and hubs back from the
    fresh authorities (h <- A a), renormalizing to unit length after every
    multiply.  Stops when the L1 change of the authority vector drops below
    tol, or after max_iter rounds.  Returns the authority vector; on an
    undirected graph the hub vector converges to the same direction.
    """
    if max_iter < 1:
        raise ValueError("max_iter must be positive")
    n = g.n
    if n == 0:
        raise ValueError("hits is undefined on an empty graph")
    adj = _adjacency_csr(g)
    auth = np.full(n, 1.0 / np.sqrt(n))
    hub = auth
    for _ in range(max_iter):
        a = adj @ hub
        norm = np.linalg.norm(a)
        if norm == 0.0:
            # no edges at all: every node is an equally empty authority
            return np.zeros(n)
        a /= norm
        h = adj @ a
        h /= np.linalg.norm(h)
        done = np.abs(a - auth).sum() < tol
        auth, hub = a, h
        if done:
            break
    return auth


def parse_score_file(data) -> dict[str, float]:
    """Read "label value" lines; '#' starts a comment, blank lines skipped."""
    scores: dict[str, float] = {}
    for lineno, raw in enumerate(_as_text(data).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'label value', got {len(parts)} fields")
        label, text = parts
        if label in scores:
            raise ParseError(f"line {lineno}: duplicate label {label!r}")
        try:
            value = float(text)
        except ValueError:
            raise ParseError(f"line {lineno}: not a number: {text!r}") from None
        if not np.isfinite(value):
            raise ParseError(f"line {lineno}: score must be finite, got {text!r}")
        scores[label] = value
    return scores


def scores_for_graph(g: Graph, mapping: dict[str, float]) -> np.ndarray:
    """Align a label->score mapping to graph order; every node must be scored."""
    missing = [lab for lab in g.labels if lab not in mapping]
    if missing:
        raise ValueError(f"score file misses {len(missing)} node(s), first: {missing[0]!r}")
    known = set(g.labels)
    extra = sorted(lab for lab in mapping if lab not in known)
    if extra:
        raise ValueError(f"score file names unknown node(s), first: {extra[0]!r}")
    return np.array([mapping[lab] for lab in g.labels], dtype=np.float64)


def ranking_from_scores(
    scores: np.ndarray | Sequence[float], tie_tol: float = DEFAULT_TIE_TOL
) -> RankedSequence:
    return to_ranked_sequence(np.asarray(scores, dtype=np.float64), tie_tol)
