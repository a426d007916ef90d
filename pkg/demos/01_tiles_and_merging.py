"""
Tiles, tilings, and merging
===========================

A tile (rows R, columns C) pins the rows R together across every column in
C: whatever reordering hits one of those columns must hit them all, and it
must keep R inside R. A tiling keeps the whole grid partitioned into such
rectangles; merging a new tile rewrites any overlap into wider-but-shorter
rectangles without changing the joint constraints.
"""

import numpy as np

from tileshuffle import (
    Tile,
    count_allowed,
    equivalent,
    merge_tile,
    new_tilemap,
    rects_as_tiles,
    tile_rects,
)

# A fresh 3x3 tiling: one tile per column, nothing constrained beyond
# "each column is reordered by some bijection".
T = new_tilemap(3, 3)
print("fresh id matrix:")
print(T.ids)
print("allowed vectors:", count_allowed(rects_as_tiles(T), 3, 3), "of", 6**3)

# Two overlapping tiles: rows {0,1} x cols {0,1} and rows {1,2} x cols {1,2}.
# They share row 1 and column 1, so their constraints interact.
t1 = Tile.of([0, 1], [0, 1])
t2 = Tile.of([1, 2], [1, 2])
merge_tile(T, t1)
print("\nafter merging rows {0,1} x cols {0,1}:")
print(T.ids)

merge_tile(T, t2)
print("\nafter merging rows {1,2} x cols {1,2}:")
print(T.ids)

print("\nrectangles of the merged tiling:")
for rect in tile_rects(T):
    print(f"  id {rect.id}: rows {rect.rows.tolist()} x cols {rect.cols.tolist()}")

# The rewrite predicted by the merging argument: the non-overlapping parts
# keep their own column sets, the shared rows pick up the union.
rewrite = [Tile.of([0], [0, 1]), Tile.of([1], [0, 1, 2]), Tile.of([2], [1, 2])]
print("\nmerged tiling equivalent to the 3-tile rewrite:",
      equivalent(rects_as_tiles(T), rewrite, 3, 3))
print("merged tiling equivalent to the original pair:  ",
      equivalent(rects_as_tiles(T), [t1, t2], 3, 3))

# Here the interaction is so tight that only the identity survives: row 1
# must stay put in all three columns, which pins rows 0 and 2 too.
print("\nallowed vectors after both merges:",
      count_allowed(rects_as_tiles(T), 3, 3))
