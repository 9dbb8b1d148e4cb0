"""Datasets, metadata, and input validation helpers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MIN_SAMPLES = 4


@dataclass(frozen=True)
class MetaData:
    """Descriptive context for a dataset: a title and one name per variable."""

    title: str
    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise ValueError("metadata needs at least one variable name")
        if any(not n for n in self.names):
            raise ValueError("variable names must be non-empty")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be unique")

    @property
    def n(self) -> int:
        return len(self.names)

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(
                f"unknown variable {name!r}; known names: {', '.join(self.names)}"
            ) from None


def check_samples(X, min_rows: int = MIN_SAMPLES) -> np.ndarray:
    """Validate an observation matrix: 2-D, float, finite, enough rows.

    Returns a C-contiguous float64 copy so downstream code can rely on the
    layout without mutating the caller's array.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2:
        raise ValueError(f"expected a 2-D sample matrix, got ndim={X.ndim}")
    m, n = X.shape
    if n < 1:
        raise ValueError("sample matrix has no columns")
    if m < min_rows:
        raise ValueError(f"need at least {min_rows} observations, got {m}")
    if not np.all(np.isfinite(X)):
        bad = np.argwhere(~np.isfinite(X))[0]
        raise ValueError(f"non-finite entry at row {bad[0]}, column {bad[1]}")
    return np.ascontiguousarray(X)


@dataclass(frozen=True)
class Dataset:
    """An m-by-n observation matrix plus its metadata.

    Rows are observations, columns are variables; column order matches
    ``meta.names``.
    """

    samples: np.ndarray = field(repr=False)
    meta: MetaData

    def __post_init__(self):
        X = check_samples(self.samples)
        if X.shape[1] != self.meta.n:
            raise ValueError(
                f"sample matrix has {X.shape[1]} columns but metadata names "
                f"{self.meta.n} variables"
            )
        object.__setattr__(self, "samples", X)

    @property
    def n(self) -> int:
        return self.samples.shape[1]

    @property
    def m(self) -> int:
        return self.samples.shape[0]


def as_samples(data) -> np.ndarray:
    """Accept a Dataset or a raw matrix and return the validated matrix."""
    if isinstance(data, Dataset):
        return data.samples
    return check_samples(data)
