"""Hypothesis pairs over a background tiling, and the session state that
drives the exploration loop.

A hypothesis question is parametrized by focus rows R, focus columns C, and
a k-partition of C. It expands into two tile lists: one keeping every
relation inside (R, C) intact, one breaking all relations between the
partition blocks. Each list is merged with the user's background tiles and
sampled, yielding a pair of surrogate datasets whose disagreement is what
the view ranking measures.

Exploring ("show me anything I don't know yet") and focusing on a column
subset are the two special cases of the same construction, so they are
exposed as spec constructors rather than separate code paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import scoring
from .data import DataMatrix
from .sampling import sample_dataset
from .tiling import Tile, TileMap, merge_tile, rebuild


class Mode(str, Enum):
    EXPLORE = "explore"
    FOCUS = "focus"
    COMPARE = "compare"


@dataclass(frozen=True)
class HypothesisSpec:
    """Focus rows plus a partition of the focus columns into disjoint blocks."""

    rows: tuple[int, ...]
    partition: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows:
            raise ValueError("hypothesis needs a nonempty row set")
        if not self.partition or any(not block for block in self.partition):
            raise ValueError("partition blocks must be nonempty")
        seen: set[int] = set()
        for block in self.partition:
            overlap = seen.intersection(block)
            if overlap:
                raise ValueError(f"partition blocks overlap on columns {sorted(overlap)}")
            seen.update(block)

    @classmethod
    def of(cls, rows, partition) -> "HypothesisSpec":
        return cls(tuple(sorted(set(int(r) for r in rows))),
                   tuple(tuple(sorted(set(int(c) for c in block))) for block in partition))

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(sorted(c for block in self.partition for c in block))

    @property
    def k(self) -> int:
        return len(self.partition)

    def to_dict(self) -> dict:
        return {"rows": list(self.rows), "partition": [list(b) for b in self.partition]}

    @classmethod
    def from_dict(cls, doc: dict) -> "HypothesisSpec":
        return cls.of(doc["rows"], doc["partition"])


def explore_spec(n: int, m: int) -> HypothesisSpec:
    """The unguided special case: all rows, all columns, singleton blocks."""
    return HypothesisSpec.of(range(n), [[j] for j in range(m)])


def focus_spec(rows, cols) -> HypothesisSpec:
    """Focus on a row/column subset, asking about all relations inside it."""
    return HypothesisSpec.of(rows, [[c] for c in sorted(set(cols))])


def hypothesis_tilings(spec: HypothesisSpec) -> tuple[list[Tile], list[Tile]]:
    """The two tile lists of a hypothesis: keep-together vs break-apart.

    The first keeps all relations inside (R, C); the second constrains each
    partition block separately, leaving relations *between* blocks free.
    """
    keep = [Tile.of(spec.rows, spec.columns)]
    split = [Tile.of(spec.rows, block) for block in spec.partition]
    return keep, split


def compose(n: int, m: int, user_tiles, hyp_tiles) -> TileMap:
    """Background tiles plus hypothesis tiles, merged into one tiling."""
    return rebuild(n, m, list(user_tiles) + list(hyp_tiles))


def _pair_rng(seed: int, counter: int, side: int, repeat: int = 0) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(counter), repeat, side]))


class SessionModel:
    """Mutable state of one analyst's exploration loop (single writer).

    Holds the dataset, the ordered background tile list, the hypothesis spec
    and mode, plus the RNG seed and draw counter that make every sample pair
    reproducible. The two composed tilings are cached and invalidated
    whenever tiles or the hypothesis change.
    """

    def __init__(self, data: DataMatrix, seed: int = 0):
        self.data = data
        self.user_tiles: list[Tile] = []
        self.mode = Mode.EXPLORE
        self._spec: HypothesisSpec | None = None
        self.seed = int(seed)
        self.draw_counter = 0
        self._maps: tuple[TileMap, TileMap] | None = None

    @property
    def spec(self) -> HypothesisSpec:
        """Active hypothesis; in explore mode this is the forced special case."""
        if self.mode is Mode.EXPLORE or self._spec is None:
            return explore_spec(self.data.n, self.data.m)
        return self._spec

    def _invalidate(self):
        self._maps = None

    def add_tile(self, tile: Tile) -> int:
        if tile.rows[-1] >= self.data.n or tile.cols[-1] >= self.data.m:
            raise ValueError(f"tile {tile} out of range for {self.data.n}x{self.data.m} data")
        self.user_tiles.append(tile)
        if self._maps is not None:
            # incremental: the final rectangle partition is independent of
            # merge order, so updating the cached maps in place matches a
            # from-scratch rebuild (cheap adds during interactive use)
            merge_tile(self._maps[0], tile)
            merge_tile(self._maps[1], tile)
        return len(self.user_tiles) - 1

    def remove_tile(self, index: int) -> Tile:
        tile = self.user_tiles.pop(index)
        self._invalidate()
        return tile

    def set_hypothesis(self, mode: Mode, spec: HypothesisSpec | None = None):
        if mode is not Mode.EXPLORE and spec is None:
            raise ValueError(f"{mode.value} mode needs a hypothesis spec")
        if spec is not None:
            cols = spec.columns
            if spec.rows[-1] >= self.data.n or (cols and cols[-1] >= self.data.m):
                raise ValueError("hypothesis spec out of range")
        self.mode = mode
        self._spec = None if mode is Mode.EXPLORE else spec
        self._invalidate()

    def tilings(self) -> tuple[TileMap, TileMap]:
        """Composed keep/break tilings for the current state (cached)."""
        if self._maps is None:
            keep, split = hypothesis_tilings(self.spec)
            n, m = self.data.n, self.data.m
            self._maps = (compose(n, m, self.user_tiles, keep),
                          compose(n, m, self.user_tiles, split))
        return self._maps

    def sample_pair(self, counter: int | None = None, repeat: int = 0) -> tuple[DataMatrix, DataMatrix]:
        """One surrogate per hypothesis, deterministic in (seed, counter)."""
        if counter is None:
            counter = self.draw_counter
        keep_map, split_map = self.tilings()
        x1 = sample_dataset(self.data, keep_map, _pair_rng(self.seed, counter, 1, repeat))
        x2 = sample_dataset(self.data, split_map, _pair_rng(self.seed, counter, 2, repeat))
        return x1, x2

    def next_pair(self) -> tuple[DataMatrix, DataMatrix]:
        """Advance the draw counter and sample the next pair."""
        self.draw_counter += 1
        return self.sample_pair()

    def eligible_columns(self, widen: bool = False) -> list[int]:
        """Columns a view may use: quantitative, and inside the hypothesis
        column set unless widened (informative views can sit outside it)."""
        quantitative = self.data.quantitative_columns()
        if widen or self.mode is Mode.EXPLORE:
            return quantitative
        focus = set(self.spec.columns)
        return [c for c in quantitative if c in focus]

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "draw_counter": self.draw_counter,
            "mode": self.mode.value,
            "user_tiles": [t.to_dict() for t in self.user_tiles],
            "spec": self._spec.to_dict() if self._spec is not None else None,
        }

    @classmethod
    def from_dict(cls, data: DataMatrix, doc: dict) -> "SessionModel":
        model = cls(data, seed=int(doc["seed"]))
        model.draw_counter = int(doc["draw_counter"])
        model.mode = Mode(doc["mode"])
        model.user_tiles = [Tile.from_dict(t) for t in doc["user_tiles"]]
        model._spec = HypothesisSpec.from_dict(doc["spec"]) if doc.get("spec") else None
        return model


def ranked_views(model: SessionModel, *, widen: bool = False, samples: int = 1,
                 restrict_rows: bool = False):
    """Rank views for the model's current draw counter.

    Optionally averages scores over several sample pairs (stabilizes small-n
    rankings) and restricts correlations to the hypothesis rows. Returns the
    ranking and the first sample pair, which is the one a scatter of the
    same counter will show.

    Does not advance the draw counter; callers advance it per loop step.
    """
    if samples < 1:
        raise ValueError("need samples >= 1")
    eligible = model.eligible_columns(widen)
    rows = np.fromiter(model.spec.rows, dtype=np.int64) if restrict_rows else None
    first_pair = None
    totals: dict[tuple[int, int], float] = {}
    for repeat in range(samples):
        x1, x2 = model.sample_pair(repeat=repeat)
        if first_pair is None:
            first_pair = (x1, x2)
        for i, j, s in scoring.rank_views(x1, x2, eligible, rows):
            totals[(i, j)] = totals.get((i, j), 0.0) + s
    ranking = [(i, j, total / samples) for (i, j), total in totals.items()]
    ranking.sort(key=lambda t: (-t[2], t[0], t[1]))
    return ranking, first_pair
