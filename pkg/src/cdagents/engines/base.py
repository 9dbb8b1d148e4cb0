"""Shared estimator plumbing for the causal discovery engines."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from ..constraints import ConstraintMatrix
from ..data import as_samples
from ..graph import CausalGraph


class InfeasibleConstraintsError(ValueError):
    """Raised when hard constraints admit no acyclic solution."""


class BaseDiscovery(BaseEstimator):
    """Base class for the discovery estimators.

    Subclasses implement ``fit(X, constraints=None)`` and set ``graph_``.
    Estimators are deterministic functions of their inputs; ``fit`` may be
    called repeatedly with different data.
    """

    def _validate_inputs(self, X, constraints) -> tuple:
        X = as_samples(X)
        n = X.shape[1]
        if constraints is None:
            constraints = ConstraintMatrix.unknown(n)
        elif constraints.n != n:
            raise ValueError(
                f"constraint matrix is {constraints.n}x{constraints.n} but data "
                f"has {n} columns"
            )
        return X, constraints

    def fit(self, X, constraints: ConstraintMatrix | None = None):
        raise NotImplementedError

    def discover(self, X, constraints: ConstraintMatrix | None = None) -> CausalGraph:
        """Fit and return the estimated graph in one call."""
        return self.fit(X, constraints=constraints).graph_


def regress_residuals(X: np.ndarray, target: int, predictors: list) -> np.ndarray:
    """Least-squares residuals of one column on others (with intercept)."""
    y = X[:, target]
    if not predictors:
        return y - y.mean()
    Z = np.column_stack([np.ones(X.shape[0]), X[:, predictors]])
    beta, *_ = np.linalg.lstsq(Z, y, rcond=None)
    return y - Z @ beta
