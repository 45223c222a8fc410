"""
Shared data model for every optimizer: box bounds, cats, objectives and the
result of a single run.
"""

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Optional

import numpy as np


class Mode(str, Enum):
    SEEKING = "seeking"
    TRACING = "tracing"


@dataclass(frozen=True)
class Bounds:
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.atleast_1d(np.asarray(self.lower, dtype=float))
        upper = np.atleast_1d(np.asarray(self.upper, dtype=float))
        if lower.ndim != 1 or lower.shape != upper.shape or lower.size < 1:
            raise ValueError(
                f"Bounds need two vectors of equal length >= 1, got {lower.shape} and {upper.shape}"
            )
        if not np.all(lower < upper):
            bad = int(np.argmax(lower >= upper))
            raise ValueError(
                f"Lower bound must be below upper bound (dimension {bad}: {lower[bad]} >= {upper[bad]})"
            )
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def box(cls, low: float, high: float, dimension: int) -> "Bounds":
        return cls(np.full(dimension, float(low)), np.full(dimension, float(high)))

    @property
    def dimension(self) -> int:
        return int(self.lower.size)

    @property
    def span(self) -> np.ndarray:
        return self.upper - self.lower

    def contains(self, x: np.ndarray) -> bool:
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))


@dataclass(frozen=True)
class Cat:
    """A candidate solution: position, velocity, cost and the mode flag."""

    position: np.ndarray
    velocity: np.ndarray
    cost: float = math.nan
    flag: Optional[Mode] = None

    @property
    def evaluated(self) -> bool:
        return not math.isnan(self.cost)

    def with_flag(self, flag: Mode) -> "Cat":
        return replace(self, flag=flag)


@dataclass(frozen=True)
class ObjectiveSpec:
    """A minimization problem over a box."""

    name: str
    bounds: Bounds
    evaluate: Callable[[np.ndarray], float]
    stochastic: bool = False

    @property
    def dimension(self) -> int:
        return self.bounds.dimension

    def __call__(self, x: np.ndarray) -> float:
        return float(self.evaluate(x))

    def evaluate_cat(self, cat: Cat) -> Cat:
        return replace(cat, cost=self(cat.position))


@dataclass
class RunResult:
    best_position: np.ndarray
    best_cost: float
    convergence: np.ndarray
    elapsed_seconds: float
    seed: int
    diversity_trace: Optional[np.ndarray] = None
    algorithm: str = ""
    objective: str = ""
