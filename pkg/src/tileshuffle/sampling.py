"""Uniform sampling of permutation vectors allowed by a tiling.

The rectangles of a tiling factorize the constraint set exactly: an allowed
vector is nothing more than one independent bijection per rectangle, applied
to that rectangle's rows in each of its columns. Drawing a uniform shuffle
per rectangle therefore samples uniformly over the whole allowed set.
"""

from __future__ import annotations

import numpy as np

from .data import DataMatrix, PermutationVector, apply_permutation
from .tiling import TileMap, tile_rects


def as_rng(seed) -> np.random.Generator:
    """Accept an int seed, a SeedSequence, a Generator, or None."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def sample_permutation(T: TileMap, seed) -> PermutationVector:
    """Draw one permutation vector uniformly from the set allowed by T.

    For each rectangle (R, C), a uniform random bijection of R onto R is
    assigned to every column in C. Rectangles are visited in ascending id
    order, so the draw is reproducible for a given seed.
    """
    rng = as_rng(seed)
    perms = np.empty((T.m, T.n), dtype=np.int64)
    # sort by top-left cell, not by id: tilings that carve out the same
    # rectangles draw identically no matter what merge order produced them
    rects = sorted(tile_rects(T), key=lambda r: (r.rows[0], r.cols[0]))
    for rect in rects:
        shuffled = rect.rows[rng.permutation(rect.rows.size)]
        perms[np.ix_(rect.cols, rect.rows)] = shuffled[None, :]
    return PermutationVector(perms)


def sample_dataset(X: DataMatrix, T: TileMap, seed) -> DataMatrix:
    """A surrogate dataset: X reordered by a freshly sampled allowed vector."""
    if (T.n, T.m) != (X.n, X.m):
        raise ValueError(f"tiling shape ({T.n}, {T.m}) does not match data ({X.n}, {X.m})")
    return apply_permutation(X, sample_permutation(T, seed))
