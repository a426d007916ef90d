"""
Surrogate datasets from constrained shuffles
============================================

Sampling a permutation vector allowed by a tiling and applying it to the
data yields a surrogate dataset: column margins are always preserved (values
are only reordered) and relations inside each tile survive, while relations
across tiles are broken.
"""

from collections import Counter

import numpy as np

from tileshuffle import (
    Tile,
    allowed_vectors,
    from_numeric,
    rebuild,
    rects_as_tiles,
    sample_dataset,
    sample_permutation,
)

rng = np.random.default_rng(0)
X = from_numeric(np.round(rng.normal(size=(6, 3)), 2), names=("A", "B", "C"))
print("data:")
print(X.numeric)

# Tie A and B together on the top four rows, leave everything else free.
tiling = rebuild(X.n, X.m, [Tile.of(range(4), [0, 1])])

surrogate = sample_dataset(X, tiling, seed=5)
print("\nsurrogate (A-B pairs intact on rows 0-3, C fully shuffled):")
print(surrogate.numeric)

for j, name in enumerate(X.names):
    same = sorted(surrogate.numeric[:, j]) == sorted(X.numeric[:, j])
    print(f"column {name}: margin preserved = {same}")

# On a tiny instance we can enumerate the whole allowed set and watch the
# sampler cover it uniformly.
small = rebuild(3, 2, [Tile.of([0, 1, 2], [0, 1])])
universe = allowed_vectors(rects_as_tiles(small), 3, 2)
print(f"\nfull 3x2 tile: {len(universe)} allowed vectors; 12000 draws ->")
counts = Counter()
gen = np.random.default_rng(1)
for _ in range(12000):
    p = sample_permutation(small, gen)
    counts[tuple(int(v) for v in p.perms[0])] += 1
for shared_perm, hits in sorted(counts.items()):
    print(f"  pi = {shared_perm}: {hits}")
