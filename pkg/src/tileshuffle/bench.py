"""Wall-clock timing grid for tiling initialization, tile merging, and
dataset permutation at interactive scale."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .data import from_numeric
from .sampling import sample_dataset
from .tiling import Tile, merge_tile, new_tilemap

GRID_N = (5000, 10000)
GRID_M = (50, 100)
GRID_K = (25, 50, 100)


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    k: int
    t_init: float
    t_permute: float
    t_max_add: float


def random_tile(rng: np.random.Generator, n: int, m: int,
                row_frac: float = 0.1, col_frac: float = 0.1) -> Tile:
    """A tile covering `row_frac` of the rows and `col_frac` of the columns."""
    rows = rng.choice(n, size=max(1, int(n * row_frac)), replace=False)
    cols = rng.choice(m, size=max(1, int(m * col_frac)), replace=False)
    return Tile.of(rows, cols)


def bench_case(n: int, m: int, k: int, seed: int = 0) -> BenchRow:
    """Time init, k random tile merges (max), and one dataset permutation."""
    rng = np.random.default_rng(seed)
    data = from_numeric(rng.standard_normal((n, m)))

    t0 = time.perf_counter()
    tiling = new_tilemap(n, m)
    t_init = time.perf_counter() - t0

    t_max_add = 0.0
    for _ in range(k):
        tile = random_tile(rng, n, m)
        t0 = time.perf_counter()
        merge_tile(tiling, tile)
        t_max_add = max(t_max_add, time.perf_counter() - t0)

    t0 = time.perf_counter()
    sample_dataset(data, tiling, rng)
    t_permute = time.perf_counter() - t0

    return BenchRow(n, m, k, t_init, t_permute, t_max_add)


def run_grid(ns=GRID_N, ms=GRID_M, ks=GRID_K, seed: int = 0) -> list[BenchRow]:
    return [bench_case(n, m, k, seed) for n in ns for m in ms for k in ks]


def format_tsv(rows) -> str:
    lines = ["n\tm\tk\tt_init\tt_permute\tt_max_add"]
    for r in rows:
        lines.append(f"{r.n}\t{r.m}\t{r.k}\t{r.t_init:.4f}\t{r.t_permute:.4f}\t{r.t_max_add:.4f}")
    return "\n".join(lines) + "\n"
