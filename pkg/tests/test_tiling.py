import itertools

import numpy as np
import pytest

from tileshuffle import (
    PermutationVector,
    Tile,
    TileMap,
    allowed_mask,
    allowed_vectors,
    count_allowed,
    equivalent,
    is_allowed,
    merge_tile,
    new_tilemap,
    rebuild,
    rects_as_tiles,
    tile_rects,
    validate_tilemap,
)

from helpers import random_tiles

# 0-based version of the worked overlap example: t1 = rows {0,1} x cols {0,1},
# t2 = rows {1,2} x cols {1,2} on a 3x3 grid.
T1 = Tile.of([0, 1], [0, 1])
T2 = Tile.of([1, 2], [1, 2])
THEOREM_TILES = [Tile.of([0], [0, 1]), Tile.of([1], [0, 1, 2]), Tile.of([2], [1, 2])]


def test_new_tilemap_ids():
    assert new_tilemap(2, 2).ids.tolist() == [[0, 1], [0, 1]]


def test_new_tilemap_allows_every_vector():
    T = new_tilemap(2, 2)
    assert count_allowed(rects_as_tiles(T), 2, 2) == 4


def test_new_tilemap_single_column_unconstrained():
    T = new_tilemap(3, 1)
    assert count_allowed(rects_as_tiles(T), 3, 1) == 6


def test_new_tilemap_rejects_empty():
    with pytest.raises(ValueError):
        new_tilemap(0, 2)


def test_merge_matches_theorem_construction():
    T = new_tilemap(3, 3)
    merge_tile(T, T1)
    merge_tile(T, T2)
    validate_tilemap(T)
    rect_tiles = rects_as_tiles(T)
    assert len(rect_tiles) == 5
    # the three rewritten constraint tiles appear verbatim among the rects
    for expected in THEOREM_TILES:
        assert expected in rect_tiles
    assert equivalent([T1, T2], THEOREM_TILES, 3, 3)
    assert equivalent([T1, T2], rect_tiles, 3, 3)


def test_merge_is_idempotent_on_allowed_set():
    T = rebuild(3, 3, [T1])
    before = allowed_mask(rects_as_tiles(T), 3, 3)
    merge_tile(T, T1)
    validate_tilemap(T)
    after = allowed_mask(rects_as_tiles(T), 3, 3)
    assert np.array_equal(before, after)


def test_merge_full_tile_forces_shared_permutation():
    full = Tile.of([0, 1, 2], [0, 1])
    T = rebuild(3, 2, [full])
    assert len(tile_rects(T)) == 1
    assert count_allowed(rects_as_tiles(T), 3, 2) == 6
    assert count_allowed([], 3, 2) == 36
    for vec in allowed_vectors(rects_as_tiles(T), 3, 2):
        assert vec[0] == vec[1]


def test_merge_out_of_range():
    with pytest.raises(ValueError):
        merge_tile(new_tilemap(3, 3), Tile.of([0, 3], [0]))


def test_tile_rects_base_map():
    rects = tile_rects(new_tilemap(2, 2))
    assert [(r.id, r.rows.tolist(), r.cols.tolist()) for r in rects] == [
        (0, [0, 1], [0]),
        (1, [0, 1], [1]),
    ]


def test_tile_rects_full_tile_single_rect():
    T = rebuild(4, 3, [Tile.of(range(4), range(3))])
    rects = tile_rects(T)
    assert len(rects) == 1
    assert rects[0].rows.tolist() == [0, 1, 2, 3]
    assert rects[0].cols.tolist() == [0, 1, 2]


def test_rebuild_empty_is_new_tilemap():
    assert rebuild(3, 2, []).ids.tolist() == new_tilemap(3, 2).ids.tolist()


def test_rebuild_order_does_not_change_allowed_set():
    rng = np.random.default_rng(11)
    for _ in range(20):
        n, m = int(rng.integers(2, 5)), int(rng.integers(2, 4))
        tiles = random_tiles(rng, n, m, 2)
        a = rects_as_tiles(rebuild(n, m, tiles))
        b = rects_as_tiles(rebuild(n, m, tiles[::-1]))
        assert equivalent(a, b, n, m)


def test_rebuild_order_does_not_change_partition():
    # the sampler iterates rectangles by top-left cell, so incremental adds
    # only reproduce a from-scratch rebuild if the partition is canonical
    rng = np.random.default_rng(14)
    for _ in range(50):
        n, m = int(rng.integers(2, 8)), int(rng.integers(2, 6))
        tiles = random_tiles(rng, n, m, int(rng.integers(1, 6)))
        shuffled = [tiles[k] for k in rng.permutation(len(tiles))]
        a = sorted((tuple(r.rows), tuple(r.cols)) for r in
                   (Tile.of(x.rows, x.cols) for x in rects_as_tiles(rebuild(n, m, tiles))))
        b = sorted((tuple(r.rows), tuple(r.cols)) for r in
                   (Tile.of(x.rows, x.cols) for x in rects_as_tiles(rebuild(n, m, shuffled))))
        assert a == b


def test_rebuild_after_removing_only_tile_is_unconstrained():
    tiles = [T1]
    tiles.pop()
    assert rebuild(3, 3, tiles).ids.tolist() == new_tilemap(3, 3).ids.tolist()


def test_identity_is_always_allowed():
    rng = np.random.default_rng(5)
    for _ in range(20):
        n, m = int(rng.integers(2, 6)), int(rng.integers(2, 5))
        tiles = random_tiles(rng, n, m, 3)
        assert is_allowed(PermutationVector.identity(n, m), tiles)


def test_is_allowed_rejects_desynchronized_columns():
    # swap rows 0,1 in column 0 only: breaks the shared-permutation clause
    p = PermutationVector.from_columns([[1, 0, 2], [0, 1, 2]])
    assert not is_allowed(p, [T1])
    q = PermutationVector.from_columns([[1, 0, 2], [1, 0, 2]])
    assert is_allowed(q, [T1])


def test_is_allowed_width_one_membership():
    tile = Tile.of([0, 1], [0])
    inside = PermutationVector.from_columns([[1, 0, 2]])
    assert is_allowed(inside, [tile])
    escaped = PermutationVector.from_columns([[2, 1, 0]])
    assert not is_allowed(escaped, [tile])


def test_equivalent_overlap_example():
    assert equivalent([T1, T2], THEOREM_TILES, 3, 3)


def test_equivalent_width_one_full_height_is_vacuous():
    assert equivalent([], [Tile.of(range(3), [0])], 3, 2)


def test_equivalent_detects_difference():
    assert count_allowed([Tile.of([0, 1], [0, 1])], 2, 2) == 2
    assert count_allowed([], 2, 2) == 4
    assert not equivalent([Tile.of([0, 1], [0, 1])], [], 2, 2)


def test_equivalent_guard_rejects_large_instance():
    with pytest.raises(ValueError):
        equivalent([], [], 6, 3)


def test_allowed_mask_matches_pure_enumeration():
    # cross-check the vectorized oracle against a literal product loop
    rng = np.random.default_rng(3)
    for _ in range(5):
        n, m = 3, 2
        tiles = random_tiles(rng, n, m, 2)
        mask = allowed_mask(tiles, n, m)
        perms = list(itertools.permutations(range(n)))
        for idx in itertools.product(range(len(perms)), repeat=m):
            p = PermutationVector.from_columns([perms[k] for k in idx])
            assert mask[idx] == is_allowed(p, tiles)


def test_rectangularity_after_random_merges():
    rng = np.random.default_rng(23)
    for _ in range(30):
        n, m = int(rng.integers(2, 7)), int(rng.integers(2, 6))
        T = rebuild(n, m, random_tiles(rng, n, m, int(rng.integers(1, 5))))
        validate_tilemap(T)


def test_merging_never_enlarges_allowed_set():
    rng = np.random.default_rng(29)
    for _ in range(20):
        n, m = int(rng.integers(2, 5)), int(rng.integers(2, 4))
        tiles = random_tiles(rng, n, m, 3)
        masks = [allowed_mask(rects_as_tiles(rebuild(n, m, tiles[:k])), n, m)
                 for k in range(len(tiles) + 1)]
        for before, after in zip(masks, masks[1:]):
            assert not (after & ~before).any()


def test_merged_regions_widen_and_shorten():
    rng = np.random.default_rng(31)
    for _ in range(20):
        n, m = int(rng.integers(2, 7)), int(rng.integers(2, 6))
        tiles = random_tiles(rng, n, m, int(rng.integers(1, 4)))
        T = rebuild(n, m, tiles)
        for rect in tile_rects(T):
            if rect.id < m:
                continue  # untouched base fragment
            rows, cols = set(rect.rows.tolist()), set(rect.cols.tolist())
            assert any(rows <= set(t.rows) and cols >= set(t.cols) for t in tiles)


def test_fully_constrained_leaves_only_identity():
    n, m = 3, 2
    T = rebuild(n, m, [Tile.of([i], range(m)) for i in range(n)])
    vectors = allowed_vectors(rects_as_tiles(T), n, m)
    identity = tuple(tuple(range(n)) for _ in range(m))
    assert vectors == [identity]


def test_tilemap_dict_roundtrip():
    T = rebuild(3, 3, [T1, T2])
    U = TileMap.from_dict(T.to_dict())
    assert np.array_equal(U.ids, T.ids)
    assert U.next_id == T.next_id


def test_tile_normalization_and_validation():
    t = Tile.of([2, 0, 2], [1, 1])
    assert t.rows == (0, 2) and t.cols == (1,)
    with pytest.raises(ValueError):
        Tile.of([], [1])
    with pytest.raises(ValueError):
        Tile.of([-1], [1])
