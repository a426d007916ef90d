"""Ranking of 2-D attribute views by how much two surrogate samples differ.

A view is an unordered pair of quantitative columns. Its score against a
pair of samples is the absolute difference of the squared Pearson
correlations of that column pair in each sample; the view with the largest
score is where the two samples disagree the most.
"""

from __future__ import annotations

import numpy as np

from .data import ColumnDomain, DataMatrix


def pearson(x, y) -> float:
    """Pearson product-moment correlation.

    Returns 0.0 when either vector has zero variance (or contains missing
    values), so degenerate columns never poison a ranking with NaN.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError(f"length mismatch: {x.shape} vs {y.shape}")
    if x.ndim != 1 or x.size < 2:
        raise ValueError("need two 1-D vectors of length >= 2")
    xc = x - x.mean()
    yc = y - y.mean()
    sx = float(np.sqrt(xc @ xc))
    sy = float(np.sqrt(yc @ yc))
    if sx == 0.0 or sy == 0.0:
        return 0.0
    r = float(xc @ yc) / (sx * sy)
    if not np.isfinite(r):
        return 0.0
    return float(np.clip(r, -1.0, 1.0))


def _column(X: DataMatrix, j: int, rows) -> np.ndarray:
    if X.domains[j] is not ColumnDomain.QUANTITATIVE:
        raise ValueError(f"column {j} ({X.names[j]!r}) is categorical; cannot score")
    col = X.numeric[:, j]
    return col if rows is None else col[rows]


def view_score(X1: DataMatrix, X2: DataMatrix, i: int, j: int, rows=None) -> float:
    """|cor^2(X1_i, X1_j) - cor^2(X2_i, X2_j)|, in [0, 1].

    Sign-blind by construction: correlations of equal magnitude and opposite
    sign cancel. Both columns must be quantitative.
    """
    if i == j:
        raise ValueError("a view needs two distinct columns")
    r1 = pearson(_column(X1, i, rows), _column(X1, j, rows))
    r2 = pearson(_column(X2, i, rows), _column(X2, j, rows))
    return abs(r1 * r1 - r2 * r2)


def rank_views(X1: DataMatrix, X2: DataMatrix, eligible, rows=None) -> list[tuple[int, int, float]]:
    """All unordered column pairs over `eligible`, best-scoring first.

    Ties break lexicographically on (i, j) so identical inputs always give an
    identical ranking. Raises if fewer than two eligible columns remain.
    """
    cols = sorted(set(int(c) for c in eligible))
    if len(cols) < 2:
        raise ValueError("need at least two eligible columns")
    scored = [(i, j, view_score(X1, X2, i, j, rows))
              for a, i in enumerate(cols) for j in cols[a + 1:]]
    scored.sort(key=lambda t: (-t[2], t[0], t[1]))
    return scored


def top_attributes(X1: DataMatrix, X2: DataMatrix, eligible, k: int, rows=None) -> list[int]:
    """Distinct columns of the best-scoring pairs, in first-appearance order."""
    if k < 2:
        raise ValueError("need k >= 2")
    seen: list[int] = []
    for i, j, _ in rank_views(X1, X2, eligible, rows):
        for c in (i, j):
            if c not in seen:
                seen.append(c)
        if len(seen) >= k:
            break
    return seen[:k]
