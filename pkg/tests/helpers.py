"""Shared test fixtures: toy datasets and random tile generators."""

import numpy as np

from tileshuffle import Tile, from_numeric, to_csv


def toy_matrix(seed=7, n=10, noise=0.05):
    """10x4 dataset with one strong linear factor across all columns."""
    rng = np.random.default_rng(seed)
    base = np.linspace(0.0, 1.0, n)
    cols = np.column_stack([base + rng.normal(0.0, noise, n) for _ in range(4)])
    return from_numeric(cols, names=("A", "B", "C", "D"))


def toy_csv(seed=7, n=10, noise=0.05):
    return to_csv(toy_matrix(seed=seed, n=n, noise=noise))


def random_tile(rng, n, m):
    rows = rng.choice(n, size=int(rng.integers(1, n + 1)), replace=False)
    cols = rng.choice(m, size=int(rng.integers(1, m + 1)), replace=False)
    return Tile.of(rows, cols)


def random_tiles(rng, n, m, count):
    return [random_tile(rng, n, m) for _ in range(count)]


def random_permutation_vector(rng, n, m):
    from tileshuffle import PermutationVector
    return PermutationVector.from_columns([rng.permutation(n) for _ in range(m)])


def column_multisets(X):
    return [sorted(map(str, X.raw[:, j])) for j in range(X.m)]


def row_multiset(X):
    return sorted(map(tuple, X.numeric.tolist()))
