"""Per-ordered-pair edge directives injected into a discovery rerun."""

from __future__ import annotations

import enum
from typing import Iterator

import numpy as np


class Mark(enum.Enum):
    UNKNOWN = "unknown"
    REQUIRED = "required"
    FORBIDDEN = "forbidden"


_CODES = {Mark.UNKNOWN: 0, Mark.REQUIRED: 1, Mark.FORBIDDEN: 2}
_MARKS = {v: k for k, v in _CODES.items()}


class ConstraintMatrix:
    """n-by-n grid of edge directives with confidences in [0, 1].

    Cell ``(i, j)`` constrains the directed edge i -> j: REQUIRED forces it,
    FORBIDDEN bans it, UNKNOWN leaves the engine free. Confidence is 0 where
    the cell is UNKNOWN. The diagonal is always UNKNOWN.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("constraint matrix needs at least one variable")
        self.n = n
        self._codes = np.zeros((n, n), dtype=np.int8)
        self._conf = np.zeros((n, n), dtype=float)

    @classmethod
    def unknown(cls, n: int) -> "ConstraintMatrix":
        return cls(n)

    def copy(self) -> "ConstraintMatrix":
        out = ConstraintMatrix(self.n)
        out._codes = self._codes.copy()
        out._conf = self._conf.copy()
        return out

    def set(self, i: int, j: int, mark: Mark, confidence: float = 0.0) -> None:
        if i == j:
            raise ValueError("diagonal cells cannot be constrained")
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(f"cell ({i}, {j}) outside {self.n}x{self.n} matrix")
        if not (0.0 <= confidence <= 1.0):
            raise ValueError(f"confidence {confidence} outside [0, 1]")
        self._codes[i, j] = _CODES[mark]
        self._conf[i, j] = 0.0 if mark is Mark.UNKNOWN else confidence

    def mark(self, i: int, j: int) -> Mark:
        return _MARKS[int(self._codes[i, j])]

    def confidence(self, i: int, j: int) -> float:
        return float(self._conf[i, j])

    def required(self, i: int, j: int) -> bool:
        return self._codes[i, j] == _CODES[Mark.REQUIRED]

    def forbidden(self, i: int, j: int) -> bool:
        return self._codes[i, j] == _CODES[Mark.FORBIDDEN]

    def required_edges(self) -> list:
        return [tuple(e) for e in np.argwhere(self._codes == _CODES[Mark.REQUIRED])]

    def forbidden_edges(self) -> list:
        return [tuple(e) for e in np.argwhere(self._codes == _CODES[Mark.FORBIDDEN])]

    def is_all_unknown(self) -> bool:
        return not self._codes.any()

    def cells(self) -> Iterator:
        """Yield every constrained cell as ``(i, j, mark, confidence)``."""
        for i, j in np.argwhere(self._codes != 0):
            yield int(i), int(j), self.mark(i, j), float(self._conf[i, j])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConstraintMatrix):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self._codes, other._codes)
            and np.array_equal(self._conf, other._conf)
        )

    def __repr__(self) -> str:
        k = int((self._codes != 0).sum())
        return f"ConstraintMatrix(n={self.n}, constrained_cells={k})"

    def to_json_dict(self) -> dict:
        cells = [
            {"from": i, "to": j, "mark": mark.value, "confidence": conf}
            for i, j, mark, conf in sorted(self.cells(), key=lambda c: (c[0], c[1]))
        ]
        return {"n": self.n, "cells": cells}

    @classmethod
    def from_json_dict(cls, doc: dict) -> "ConstraintMatrix":
        out = cls(int(doc["n"]))
        for cell in doc.get("cells", []):
            out.set(
                int(cell["from"]),
                int(cell["to"]),
                Mark(cell["mark"]),
                float(cell.get("confidence", 0.0)),
            )
        return out
