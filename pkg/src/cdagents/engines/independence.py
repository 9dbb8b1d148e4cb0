"""Conditional independence testing on the z-transformed partial correlation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy import stats

from ..data import as_samples

# Keeps atanh finite when columns are exactly collinear.
R_CLAMP = 1.0 - 1e-12


@dataclass(frozen=True)
class FisherZResult:
    statistic: float
    p_value: float
    independent: bool


def partial_correlation(X: np.ndarray, i: int, j: int, cond: Iterable[int]) -> float:
    """Correlation of columns i and j after regressing both on ``cond``."""
    cond = list(cond)
    xi = X[:, i]
    xj = X[:, j]
    if np.std(xi) == 0 or np.std(xj) == 0:
        raise ValueError(f"zero-variance column among ({i}, {j})")
    if cond:
        Z = np.column_stack([np.ones(X.shape[0]), X[:, cond]])
        xi = xi - Z @ np.linalg.lstsq(Z, xi, rcond=None)[0]
        xj = xj - Z @ np.linalg.lstsq(Z, xj, rcond=None)[0]
        if np.std(xi) == 0 or np.std(xj) == 0:
            # Residual collapsed: the column is a deterministic function of
            # the conditioning set, so treat the pair as perfectly explained.
            return 0.0
    r = float(np.corrcoef(xi, xj)[0, 1])
    if math.isnan(r):
        return 0.0
    return r


def fisher_z_test(
    data,
    i: int,
    j: int,
    cond: Iterable[int] = (),
    alpha: float = 0.05,
) -> FisherZResult:
    """Two-sided test of ``i`` independent of ``j`` given ``cond``.

    The statistic is sqrt(m - |cond| - 3) * |atanh(r)| for the partial
    correlation r, referred to a standard normal.
    """
    X = as_samples(data)
    cond = sorted(set(cond))
    if i == j:
        raise ValueError("i and j must differ")
    if i in cond or j in cond:
        raise ValueError("conditioning set must exclude i and j")
    m = X.shape[0]
    dof = m - len(cond) - 3
    if dof < 1:
        raise ValueError(
            f"insufficient samples: m={m} with |cond|={len(cond)} leaves dof={dof}"
        )
    r = partial_correlation(X, i, j, cond)
    r = max(-R_CLAMP, min(R_CLAMP, r))
    z = math.atanh(r)
    statistic = math.sqrt(dof) * abs(z)
    p_value = 2.0 * float(stats.norm.sf(statistic))
    return FisherZResult(statistic=statistic, p_value=p_value, independent=p_value > alpha)
