"""
Dynamic Cat Swarm Optimization.

Every iteration the cats are sorted by cost; the best SCN go seeking and the
remaining TCN go tracing, where TCN grows linearly with the iteration index
(never below 2) until the whole swarm traces in the last iteration. Tracing
uses a linearly decreasing inertia weight, seeking keeps the best of SMP
mutated copies.
"""

from dataclasses import replace
from typing import Optional

import numpy as np

from src.core import (
    Algorithm,
    Bounds,
    Cat,
    DcsoParams,
    Mode,
    ObjectiveSpec,
    RngStream,
    RunConfig,
    RunResult,
    RunTracker,
    clamp_position,
    clamp_velocity,
    init_population,
    round_half_up,
    update_global_best,
    velocity_limits,
)
from src.utils.logger import get_logger

MIN_TRACING_CATS = 2


def compute_mode_counts(i: int, n: int, max_iter: int) -> tuple[int, int]:
    """(TCN, SCN) for iteration i (1-based)."""
    if not 1 <= i <= max_iter:
        raise ValueError(f"Iteration {i} outside [1, {max_iter}]")
    tcn = (i * n) // max_iter
    if tcn <= MIN_TRACING_CATS:
        tcn = min(MIN_TRACING_CATS, n)
    return tcn, n - tcn


def inertia_weight(i: int, max_iter: int, params: DcsoParams) -> float:
    if max_iter == 1:
        return params.w_max
    return params.w_max - (params.w_max - params.w_min) * (i - 1) / (max_iter - 1)


def assign_modes_sorted(population: list[Cat], tcn: int, scn: int) -> list[Cat]:
    """Stable sort by cost; the first SCN cats seek, the rest trace."""
    if tcn + scn != len(population):
        raise ValueError(f"TCN + SCN = {tcn + scn} but population has {len(population)} cats")
    ranked = sorted(population, key=lambda cat: cat.cost)
    return [
        cat.with_flag(Mode.SEEKING if rank < scn else Mode.TRACING)
        for rank, cat in enumerate(ranked)
    ]


def _draw(rng: RngStream, size: int, per_dimension: bool) -> np.ndarray:
    if per_dimension:
        return np.asarray(rng.random(size), dtype=float)
    return np.full(size, rng.random())


def tracing_step(
    cat: Cat,
    best_position: np.ndarray,
    w: float,
    params: DcsoParams,
    rng: RngStream,
    bounds: Bounds,
    vmax: Optional[np.ndarray] = None,
) -> Cat:
    """Inertia-weighted velocity update toward the global best. The returned cat is unevaluated."""
    if vmax is None:
        vmax = velocity_limits(bounds)
    r = _draw(rng, bounds.dimension, params.per_dimension_rand)
    velocity = w * cat.velocity + params.c1 * r * (best_position - cat.position)
    velocity = clamp_velocity(velocity, vmax)
    position = clamp_position(cat.position + velocity, bounds)
    return replace(cat, position=position, velocity=velocity, cost=np.nan)


def mutated_dimension_count(cdc: float, dimension: int) -> int:
    return min(dimension, max(1, round_half_up(cdc * dimension)))


def seeking_step(
    cat: Cat,
    params: DcsoParams,
    rng: RngStream,
    bounds: Bounds,
    objective: ObjectiveSpec,
) -> Cat:
    """Greedy seeking: SMP copies, CDC dimensions each scaled by (1 +/- rand), best copy wins."""
    dimension = bounds.dimension
    k = mutated_dimension_count(params.cdc, dimension)
    copies = np.tile(cat.position, (params.smp, 1))
    for j in range(params.smp):
        dims = rng.sample_without_replacement(dimension, k)
        r = _draw(rng, k, params.per_dimension_rand)
        signs = np.where(np.asarray(rng.random(k)) < 0.5, 1.0, -1.0)
        copies[j, dims] = (1.0 + signs * r) * copies[j, dims]
        copies[j] = clamp_position(copies[j], bounds)
    costs = np.array([objective(copy) for copy in copies])

    if params.elitist_seeking and cat.evaluated:
        candidates = np.vstack([cat.position, copies])
        costs = np.concatenate([[cat.cost], costs])
    else:
        candidates = copies
    # argmin keeps the first minimum, so the current position wins ties
    best = int(np.argmin(costs))
    return replace(cat, position=candidates[best].copy(), cost=float(costs[best]))


def dcso_run(objective: ObjectiveSpec, config: RunConfig) -> RunResult:
    if config.algorithm != Algorithm.DCSO:
        raise ValueError(f"dcso_run called with algorithm {config.algorithm.value}")
    logger = get_logger()
    params: DcsoParams = config.params
    bounds = objective.bounds
    vmax = velocity_limits(bounds, config.velocity_fraction)
    rng = RngStream(config.seed)

    tracker = RunTracker(config.max_iter, config.record_diversity)
    population = init_population(objective, config.population_size, rng, vmax)
    incumbent = update_global_best(population, (None, np.inf))

    for i in range(1, config.max_iter + 1):
        tcn, scn = compute_mode_counts(i, config.population_size, config.max_iter)
        population = assign_modes_sorted(population, tcn, scn)
        w = inertia_weight(i, config.max_iter, params)
        best_position = incumbent[0]
        moved = []
        for cat in population:
            if cat.flag == Mode.SEEKING:
                moved.append(seeking_step(cat, params, rng, bounds, objective))
            else:
                traced = tracing_step(cat, best_position, w, params, rng, bounds, vmax)
                moved.append(objective.evaluate_cat(traced))
        population = moved
        incumbent = update_global_best(population, incumbent)
        tracker.record(incumbent, population)

    logger.debug(
        f"DCSO on {objective.name} (seed={config.seed}) finished at best={incumbent[1]:.6g}"
    )
    return tracker.finish(incumbent, config.seed, Algorithm.DCSO.value, objective.name)
