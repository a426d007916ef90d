"""Dataset container and column-wise permutation primitives.

A :class:`DataMatrix` holds an n x m table with one domain (quantitative or
categorical) per column. Cell values are kept exactly as ingested (text for
CSV input) alongside a float cache for the quantitative columns, because
downstream scoring needs numbers while permutations only move indices.

Reordering a matrix is expressed by a :class:`PermutationVector`: one row
bijection per column. Applying it never touches values, so every output
column is a rearrangement of the corresponding input column.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum

import numpy as np


class ColumnDomain(str, Enum):
    QUANTITATIVE = "quantitative"
    CATEGORICAL = "categorical"


class CsvFormatError(ValueError):
    """Malformed delimiter-separated input (ragged, empty, or too narrow)."""


def _parse_number(text: str) -> float | None:
    try:
        return float(text)
    except ValueError:
        return None


@dataclass(frozen=True)
class DataMatrix:
    """Immutable n x m dataset.

    Attributes
    ----------
    names : tuple of str
        Column labels, length m.
    domains : tuple of ColumnDomain
        Per-column domain, length m.
    raw : ndarray, shape (n, m), dtype object
        Cell values as ingested (str for CSV input, numbers for synthetic data).
    numeric : ndarray, shape (n, m), dtype float64
        Parsed values for quantitative columns; NaN elsewhere (including
        empty cells, which are carried through without imputation).
    class_labels : tuple of str, optional
        Display-only row labels. Never permuted, never scored.
    """

    names: tuple[str, ...]
    domains: tuple[ColumnDomain, ...]
    raw: np.ndarray
    numeric: np.ndarray
    class_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n, m = self.raw.shape
        if n < 1:
            raise ValueError("data matrix needs at least one row")
        if m < 2:
            raise ValueError("data matrix needs at least two columns (one view)")
        if len(self.names) != m or len(self.domains) != m:
            raise ValueError("names/domains length does not match column count")
        if self.numeric.shape != (n, m):
            raise ValueError("numeric cache shape mismatch")
        if self.class_labels is not None and len(self.class_labels) != n:
            raise ValueError("class label count does not match row count")
        self.raw.flags.writeable = False
        self.numeric.flags.writeable = False

    @property
    def n(self) -> int:
        return self.raw.shape[0]

    @property
    def m(self) -> int:
        return self.raw.shape[1]

    def column_index(self, ref: int | str) -> int:
        """Resolve a 0-based index or a column name to an index."""
        if isinstance(ref, str) and ref not in self.names:
            raise KeyError(f"unknown column {ref!r}")
        j = self.names.index(ref) if isinstance(ref, str) else int(ref)
        if not 0 <= j < self.m:
            raise IndexError(f"column index {j} out of range for m={self.m}")
        return j

    def quantitative_columns(self) -> list[int]:
        return [j for j, d in enumerate(self.domains) if d is ColumnDomain.QUANTITATIVE]

    def to_dict(self) -> dict:
        """JSON-ready form; exact cell values are preserved for round-trips."""
        return {
            "names": list(self.names),
            "domains": [d.value for d in self.domains],
            "cells": [list(row) for row in self.raw],
            "class_labels": list(self.class_labels) if self.class_labels is not None else None,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "DataMatrix":
        names = tuple(doc["names"])
        domains = tuple(ColumnDomain(d) for d in doc["domains"])
        raw = np.empty((len(doc["cells"]), len(names)), dtype=object)
        for i, row in enumerate(doc["cells"]):
            if len(row) != len(names):
                raise ValueError(f"row {i} has {len(row)} cells, expected {len(names)}")
            raw[i, :] = row
        labels = doc.get("class_labels")
        return cls(names, domains, raw, _numeric_cache(raw, domains),
                   tuple(labels) if labels is not None else None)


def _numeric_cache(raw: np.ndarray, domains: tuple[ColumnDomain, ...]) -> np.ndarray:
    numeric = np.full(raw.shape, np.nan)
    for j, dom in enumerate(domains):
        if dom is not ColumnDomain.QUANTITATIVE:
            continue
        for i in range(raw.shape[0]):
            cell = raw[i, j]
            if isinstance(cell, str):
                if cell != "":
                    numeric[i, j] = float(cell)
            else:
                numeric[i, j] = float(cell)
    return numeric


def load_csv(source, *, header: bool = True, class_column: str | None = None) -> DataMatrix:
    """Parse RFC-4180-style UTF-8 CSV into a :class:`DataMatrix`.

    A column is quantitative iff every non-empty cell parses as a number in
    standard decimal/scientific notation; any other column is categorical.
    If `class_column` names a column, it is removed from the attributes and
    kept as display-only row labels.

    Parameters
    ----------
    source : bytes, str, or file-like
        CSV content. Byte input is decoded as UTF-8 (BOM tolerated).

    Raises
    ------
    CsvFormatError
        Empty input, ragged rows (reported with the 1-based row number), or
        fewer than one data row / two attribute columns.
    KeyError
        `class_column` not present in the header.
    """
    if isinstance(source, bytes):
        text = source.decode("utf-8-sig")
    elif isinstance(source, str):
        text = source.lstrip("﻿")
    elif hasattr(source, "read"):
        blob = source.read()
        text = blob.decode("utf-8-sig") if isinstance(blob, bytes) else blob
    else:
        raise TypeError("source must be bytes, str, or a file-like object")

    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        raise CsvFormatError("empty input")

    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise CsvFormatError(f"row {i + 1} has {len(row)} fields, expected {width}")

    if header:
        names = [name.strip() for name in rows[0]]
        body = rows[1:]
    else:
        names = [f"col{j + 1}" for j in range(width)]
        body = rows
    if not body:
        raise CsvFormatError("no data rows")

    class_labels = None
    if class_column is not None:
        if class_column not in names:
            raise KeyError(f"class column {class_column!r} not found")
        c = names.index(class_column)
        class_labels = tuple(row[c] for row in body)
        names = names[:c] + names[c + 1:]
        body = [row[:c] + row[c + 1:] for row in body]

    if len(names) < 2:
        raise CsvFormatError("need at least two attribute columns")

    raw = np.empty((len(body), len(names)), dtype=object)
    for i, row in enumerate(body):
        raw[i, :] = row

    domains = []
    for j in range(len(names)):
        cells = [raw[i, j] for i in range(len(body))]
        ok = all(cell == "" or _parse_number(cell) is not None for cell in cells)
        domains.append(ColumnDomain.QUANTITATIVE if ok else ColumnDomain.CATEGORICAL)
    domains = tuple(domains)

    return DataMatrix(tuple(names), domains, raw, _numeric_cache(raw, domains), class_labels)


def from_numeric(values, names=None, class_labels=None) -> DataMatrix:
    """Build an all-quantitative matrix from a numeric array (tests, demos, bench)."""
    values = np.asarray(values, dtype=float)
    if values.ndim != 2:
        raise ValueError("expected a 2-D array")
    n, m = values.shape
    if names is None:
        names = tuple(f"col{j + 1}" for j in range(m))
    raw = values.astype(object)
    domains = (ColumnDomain.QUANTITATIVE,) * m
    return DataMatrix(tuple(names), domains, raw, values.copy(),
                      tuple(class_labels) if class_labels is not None else None)


def to_csv(X: DataMatrix) -> str:
    """Serialize attribute columns back to CSV (header + raw cell values)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(X.names)
    for i in range(X.n):
        writer.writerow([cell if isinstance(cell, str) else repr(cell) for cell in X.raw[i]])
    return buf.getvalue()


@dataclass(frozen=True)
class PermutationVector:
    """One row bijection per column; ``perms[j, i]`` is the source row placed
    at position i in column j."""

    perms: np.ndarray  # shape (m, n), dtype int64

    def __post_init__(self):
        if self.perms.ndim != 2:
            raise ValueError("expected an (m, n) array")
        m, n = self.perms.shape
        expected = np.arange(n)
        for j in range(m):
            if not np.array_equal(np.sort(self.perms[j]), expected):
                raise ValueError(f"column {j} is not a bijection of range({n})")
        self.perms.flags.writeable = False

    @property
    def n(self) -> int:
        return self.perms.shape[1]

    @property
    def m(self) -> int:
        return self.perms.shape[0]

    @classmethod
    def identity(cls, n: int, m: int) -> "PermutationVector":
        return cls(np.tile(np.arange(n, dtype=np.int64), (m, 1)))

    @classmethod
    def from_columns(cls, columns) -> "PermutationVector":
        return cls(np.asarray([np.asarray(c, dtype=np.int64) for c in columns]))


def apply_permutation(X: DataMatrix, p: PermutationVector) -> DataMatrix:
    """Reorder each column of X by its permutation: result (i, j) = X(p_j(i), j).

    Pure function: X is untouched; names, domains and class labels are shared
    unchanged with the result.
    """
    if (p.n, p.m) != (X.n, X.m):
        raise ValueError(f"permutation shape ({p.n}, {p.m}) does not match data ({X.n}, {X.m})")
    idx = np.ascontiguousarray(p.perms.T)
    raw = np.take_along_axis(X.raw, idx, axis=0)
    numeric = np.take_along_axis(X.numeric, idx, axis=0)
    return DataMatrix(X.names, X.domains, raw, numeric, X.class_labels)
