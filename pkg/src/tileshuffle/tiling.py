"""Non-overlapping tilings of a data grid and the constraint algebra on them.

A tile (R, C) declares that the rows R must travel together across every
column in C: one shared bijection of R onto itself reorders those cells in
all columns of C at once. A *tiling* keeps the whole grid partitioned into
such combinatorial rectangles, stored densely as an n x m matrix of tile
ids. Merging a new tile into a tiling resolves any overlap in a single
O(n*m) pass, rewriting overlapped regions into wider-but-shorter rectangles
whose joint constraints are unchanged.

For small grids the module also provides a brute-force oracle
(:func:`allowed_vectors` / :func:`equivalent`) that enumerates every
permutation vector and checks the constraint definition directly; the fast
merge path is validated against it in the test suite.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .data import PermutationVector

# Upper bound on (n!)^m for exhaustive enumeration.
ENUMERATION_LIMIT = 50_000


@dataclass(frozen=True)
class Tile:
    """A (row set, column set) constraint. Indices are 0-based and sorted."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        if not self.rows or not self.cols:
            raise ValueError("tile needs nonempty rows and cols")
        if min(self.rows) < 0 or min(self.cols) < 0:
            raise ValueError("tile indices must be nonnegative")

    @classmethod
    def of(cls, rows, cols) -> "Tile":
        return cls(tuple(sorted(set(int(r) for r in rows))),
                   tuple(sorted(set(int(c) for c in cols))))

    def to_dict(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols)}

    @classmethod
    def from_dict(cls, doc: dict) -> "Tile":
        return cls.of(doc["rows"], doc["cols"])


@dataclass(frozen=True)
class TileRect:
    """One materialized rectangle of a tiling: the cells carrying `id`."""

    id: int
    rows: np.ndarray  # sorted row indices
    cols: np.ndarray  # sorted column indices


@dataclass
class TileMap:
    """Dense tiling state: ``ids[i, j]`` is the tile id of cell (i, j).

    Every id region is a combinatorial rectangle (row set x column set) and
    `next_id` stays strictly above every id in use, so freshly assigned ids
    can never collide with surviving fragments elsewhere in the grid.
    """

    ids: np.ndarray  # shape (n, m), dtype int64
    next_id: int

    @property
    def n(self) -> int:
        return self.ids.shape[0]

    @property
    def m(self) -> int:
        return self.ids.shape[1]

    def copy(self) -> "TileMap":
        return TileMap(self.ids.copy(), self.next_id)

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m,
                "ids": [int(v) for v in self.ids.ravel()],
                "next_id": self.next_id}

    @classmethod
    def from_dict(cls, doc: dict) -> "TileMap":
        ids = np.asarray(doc["ids"], dtype=np.int64).reshape(doc["n"], doc["m"])
        return cls(ids, int(doc["next_id"]))


def new_tilemap(n: int, m: int) -> TileMap:
    """Unconstrained tiling: each column is one tile over all rows.

    A full-height single-column tile allows any bijection in that column, so
    this encodes "all columns permuted independently".
    """
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    return TileMap(np.tile(np.arange(m, dtype=np.int64), (n, 1)), m)


def _check_bounds(tile: Tile, n: int, m: int):
    if tile.rows[-1] >= n or tile.cols[-1] >= m:
        raise ValueError(f"tile {tile} out of range for {n}x{m} grid")


def merge_tile(T: TileMap, tile: Tile) -> TileMap:
    """Merge a (possibly overlapping) tile into the tiling, in place.

    Rows of the new tile are grouped by the id signature they currently carry
    along the tile's columns; each group, together with the full column span
    of every tile it overlaps, becomes one fresh rectangle. The result is a
    tiling whose allowed permutation set equals that of the previous tiles
    plus `tile`. Single O(n*m) pass.
    """
    n, m = T.ids.shape
    _check_bounds(tile, n, m)
    rows = np.fromiter(tile.rows, dtype=np.int64)
    cols = np.fromiter(tile.cols, dtype=np.int64)

    signature = T.ids[np.ix_(rows, cols)]
    keys, inverse = np.unique(signature, axis=0, return_inverse=True)

    for g in range(keys.shape[0]):
        group_rows = rows[inverse == g]
        overlapped = np.unique(keys[g])
        # Ids are rectangular, so one representative row sees the full column
        # span of every overlapped tile.
        span = np.isin(T.ids[group_rows[0]], overlapped)
        T.ids[np.ix_(group_rows, np.nonzero(span)[0])] = T.next_id
        T.next_id += 1
    return T


def tile_rects(T: TileMap) -> list[TileRect]:
    """Materialize the tiling as rectangles, one per distinct id (ascending).

    Rectangles partition the grid: every cell lies in exactly one of them.
    """
    n, m = T.ids.shape
    flat = T.ids.ravel()
    order = np.argsort(flat, kind="stable")
    sorted_ids = flat[order]
    starts = np.nonzero(np.r_[True, sorted_ids[1:] != sorted_ids[:-1]])[0]
    bounds = np.r_[starts, flat.size]

    rects = []
    for s, e in zip(bounds[:-1], bounds[1:]):
        cells = order[s:e]  # ascending row-major cell indices of this id
        first_row = cells[0] // m
        width = int(np.searchsorted(cells, (first_row + 1) * m))
        rects.append(TileRect(int(sorted_ids[s]), cells[::width] // m, cells[:width] % m))
    return rects


def rebuild(n: int, m: int, tiles) -> TileMap:
    """Fresh tiling from an ordered tile list (the removal path: drop a tile
    from the list and rebuild, since merging is lossy)."""
    T = new_tilemap(n, m)
    for tile in tiles:
        merge_tile(T, tile)
    return T


def validate_tilemap(T: TileMap):
    """Check the rectangularity and coverage invariants; raise on violation."""
    n, m = T.ids.shape
    covered = 0
    for v in np.unique(T.ids):
        cells = np.argwhere(T.ids == v)
        rows = np.unique(cells[:, 0])
        cols = np.unique(cells[:, 1])
        if len(cells) != len(rows) * len(cols):
            raise ValueError(f"id {v} does not cover a full rectangle")
        if not (T.ids[np.ix_(rows, cols)] == v).all():
            raise ValueError(f"id {v} region is not a product set")
        covered += len(cells)
    if covered != n * m:
        raise ValueError("ids do not cover the grid")
    if T.next_id <= int(T.ids.max()):
        raise ValueError("next_id is not above every id in use")


def is_allowed(p: PermutationVector, tiles) -> bool:
    """Does the permutation vector satisfy every tile constraint?

    A tile (R, C) requires, for each i in R: the images pi_j(i) stay inside R
    and coincide across all j in C. The identity vector is always allowed.
    """
    perms = p.perms
    for tile in tiles:
        rows = np.fromiter(tile.rows, dtype=np.int64)
        cols = np.fromiter(tile.cols, dtype=np.int64)
        block = perms[np.ix_(cols, rows)]
        if not np.isin(block[0], rows).all():
            return False
        if not (block == block[0]).all():
            return False
    return True


def _enumeration_guard(n: int, m: int) -> int:
    total = math.factorial(n) ** m
    if total > ENUMERATION_LIMIT:
        raise ValueError(f"instance too large to enumerate: (n!)^m = {total}")
    return total


def _perm_table(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


def allowed_mask(tiles, n: int, m: int) -> np.ndarray:
    """Boolean m-dimensional array over all (n!)^m permutation vectors.

    Axis j indexes the choice of pi_j among the n! permutations in
    lexicographic order; entry True means the vector satisfies every tile.
    Exhaustive by construction - this is the small-instance oracle.
    """
    _enumeration_guard(n, m)
    table = _perm_table(n)
    count = table.shape[0]
    mask = np.ones((count,) * m, dtype=bool)
    for tile in tiles:
        rows = np.fromiter(tile.rows, dtype=np.int64)
        cols = sorted(tile.cols)
        if cols[-1] >= m or rows[-1] >= n:
            raise ValueError(f"tile {tile} out of range for {n}x{m} grid")
        restricted = table[:, rows]
        member = np.isin(restricted, rows).all(axis=1)
        anchor = cols[0]
        shape = [1] * m
        shape[anchor] = count
        mask &= member.reshape(shape)
        if len(cols) > 1:
            equal = (restricted[:, None, :] == restricted[None, :, :]).all(axis=2)
            for c in cols[1:]:
                shape = [1] * m
                shape[anchor] = count
                shape[c] = count
                mask &= equal.reshape(shape)
    return mask


def allowed_vectors(tiles, n: int, m: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every allowed permutation vector, as m-tuples of row-permutation tuples."""
    mask = allowed_mask(tiles, n, m)
    table = [tuple(int(v) for v in row) for row in _perm_table(n)]
    return [tuple(table[k] for k in idx) for idx in np.argwhere(mask)]


def count_allowed(tiles, n: int, m: int) -> int:
    return int(allowed_mask(tiles, n, m).sum())


def equivalent(A, B, n: int, m: int) -> bool:
    """Do two tile sets allow exactly the same permutation vectors?

    Exhaustive enumeration; guarded to (n!)^m <= ENUMERATION_LIMIT.
    """
    return bool(np.array_equal(allowed_mask(A, n, m), allowed_mask(B, n, m)))


def rects_as_tiles(T: TileMap) -> list[Tile]:
    """The tiling's rectangles reinterpreted as plain constraint tiles."""
    return [Tile.of(r.rows, r.cols) for r in tile_rects(T)]
