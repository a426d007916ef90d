"""Tile-constrained permutation sampling and guided comparison of dataset views."""

from .data import (
    ColumnDomain,
    CsvFormatError,
    DataMatrix,
    PermutationVector,
    apply_permutation,
    from_numeric,
    load_csv,
    to_csv,
)
from .hypothesis import (
    HypothesisSpec,
    Mode,
    SessionModel,
    compose,
    explore_spec,
    focus_spec,
    hypothesis_tilings,
    ranked_views,
)
from .sampling import sample_dataset, sample_permutation
from .scoring import pearson, rank_views, top_attributes, view_score
from .tiling import (
    Tile,
    TileMap,
    TileRect,
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

__version__ = "0.1.0"

__all__ = [
    "ColumnDomain",
    "CsvFormatError",
    "DataMatrix",
    "PermutationVector",
    "apply_permutation",
    "from_numeric",
    "load_csv",
    "to_csv",
    "Tile",
    "TileMap",
    "TileRect",
    "new_tilemap",
    "merge_tile",
    "tile_rects",
    "rebuild",
    "is_allowed",
    "equivalent",
    "allowed_mask",
    "allowed_vectors",
    "count_allowed",
    "rects_as_tiles",
    "validate_tilemap",
    "sample_permutation",
    "sample_dataset",
    "HypothesisSpec",
    "Mode",
    "SessionModel",
    "explore_spec",
    "focus_spec",
    "hypothesis_tilings",
    "compose",
    "ranked_views",
    "pearson",
    "view_score",
    "rank_views",
    "top_attributes",
    "__version__",
]
