import math
from typing import Optional

import numpy as np

from .model import Bounds, Cat, ObjectiveSpec
from .rng import RngStream

Incumbent = tuple[Optional[np.ndarray], float]


def round_half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


def velocity_limits(bounds: Bounds, fraction: float = 1.0) -> np.ndarray:
    """Vmax per dimension, a fraction of the box width."""
    return fraction * bounds.span


def clamp_position(x: np.ndarray, bounds: Bounds) -> np.ndarray:
    return np.clip(x, bounds.lower, bounds.upper)


def clamp_velocity(v: np.ndarray, vmax: np.ndarray) -> np.ndarray:
    return np.clip(v, -vmax, vmax)


def init_population(
    objective: ObjectiveSpec,
    n: int,
    rng: RngStream,
    vmax: Optional[np.ndarray] = None,
) -> list[Cat]:
    """Scatter n cats uniformly in the box, with velocities uniform in [-Vmax, Vmax]."""
    if n < 1:
        raise ValueError(f"Population size must be >= 1, got {n}")
    bounds = objective.bounds
    if vmax is None:
        vmax = velocity_limits(bounds)
    population = []
    for _ in range(n):
        position = bounds.lower + rng.random(objective.dimension) * bounds.span
        velocity = -vmax + rng.random(objective.dimension) * (2 * vmax)
        cat = Cat(position=position, velocity=velocity)
        population.append(objective.evaluate_cat(cat))
    return population


def update_global_best(population: list[Cat], incumbent: Incumbent) -> Incumbent:
    """Best-so-far pair; a cat replaces the incumbent only when strictly better."""
    if not population:
        raise ValueError("Population is empty")
    best_position, best_cost = incumbent
    for cat in population:
        if cat.cost < best_cost:
            best_position, best_cost = cat.position.copy(), cat.cost
    return best_position, best_cost


def positions_matrix(population: list[Cat]) -> np.ndarray:
    return np.vstack([cat.position for cat in population])
