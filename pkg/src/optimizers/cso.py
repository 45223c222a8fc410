"""
Reference Cat Swarm Optimization: a static mixture ratio picks the tracing cats
at random, seeking mutates by SRD and selects a copy by roulette wheel, tracing
has no inertia. Positions are clamped to the box like in DCSO so both run on the
same feasible region.

A cat that enters tracing from seeking starts from rest (zero velocity) and
keeps its velocity only while it stays in tracing on consecutive iterations.
"""

from dataclasses import replace
from typing import Optional

import numpy as np

from src.core import (
    Algorithm,
    Bounds,
    Cat,
    CsoParams,
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

from .dcso import mutated_dimension_count


def assign_modes_random(population: list[Cat], mr: float, rng: RngStream) -> list[Cat]:
    """Exactly round(mr * N) cats, drawn without replacement, go tracing."""
    if not population:
        raise ValueError("Population is empty")
    n = len(population)
    tracing = set(int(k) for k in rng.sample_without_replacement(n, round_half_up(mr * n)))
    return [
        cat.with_flag(Mode.TRACING if index in tracing else Mode.SEEKING)
        for index, cat in enumerate(population)
    ]


def roulette_probabilities(costs: np.ndarray) -> np.ndarray:
    """Selection weights for minimization, P_i = |FS_i - FS_max| / (FS_max - FS_min), normalized."""
    costs = np.asarray(costs, dtype=float)
    if costs.size == 0:
        raise ValueError("No candidate costs")
    fs_max, fs_min = float(np.max(costs)), float(np.min(costs))
    if fs_max == fs_min:
        raw = np.ones_like(costs)
    else:
        raw = np.abs(costs - fs_max) / (fs_max - fs_min)
    return raw / raw.sum()


def roulette_select(weights: np.ndarray, rng: RngStream) -> int:
    cumulative = np.cumsum(weights)
    index = int(np.searchsorted(cumulative, rng.random() * cumulative[-1], side="right"))
    return min(index, len(weights) - 1)


def cso_seeking_step(
    cat: Cat,
    params: CsoParams,
    rng: RngStream,
    bounds: Bounds,
    objective: ObjectiveSpec,
) -> Cat:
    dimension = bounds.dimension
    k = mutated_dimension_count(params.cdc, dimension)
    n_copies = params.smp - 1 if params.spc else params.smp
    copies = np.tile(cat.position, (n_copies, 1))
    for j in range(n_copies):
        dims = rng.sample_without_replacement(dimension, k)
        if params.per_dimension_rand:
            r = np.asarray(rng.random(k), dtype=float)
        else:
            r = np.full(k, rng.random())
        signs = np.where(np.asarray(rng.random(k)) < 0.5, 1.0, -1.0)
        copies[j, dims] = (1.0 + signs * r * params.srd) * copies[j, dims]
        copies[j] = clamp_position(copies[j], bounds)
    costs = np.array([objective(copy) for copy in copies])

    if params.spc:
        copies = np.vstack([copies, cat.position])
        current = cat.cost if cat.evaluated else objective(cat.position)
        costs = np.append(costs, current)

    chosen = roulette_select(roulette_probabilities(costs), rng)
    return replace(cat, position=copies[chosen].copy(), cost=float(costs[chosen]))


def cso_tracing_step(
    cat: Cat,
    best_position: np.ndarray,
    params: CsoParams,
    rng: RngStream,
    bounds: Bounds,
    vmax: Optional[np.ndarray] = None,
    from_rest: bool = False,
) -> Cat:
    if vmax is None:
        vmax = velocity_limits(bounds)
    velocity = np.zeros(bounds.dimension) if from_rest else cat.velocity
    if params.per_dimension_rand:
        r = np.asarray(rng.random(bounds.dimension), dtype=float)
    else:
        r = rng.random()
    velocity = clamp_velocity(velocity + params.c1 * r * (best_position - cat.position), vmax)
    position = clamp_position(cat.position + velocity, bounds)
    return replace(cat, position=position, velocity=velocity, cost=np.nan)


def cso_run(objective: ObjectiveSpec, config: RunConfig) -> RunResult:
    if config.algorithm != Algorithm.CSO:
        raise ValueError(f"cso_run called with algorithm {config.algorithm.value}")
    logger = get_logger()
    params: CsoParams = config.params
    bounds = objective.bounds
    vmax = velocity_limits(bounds, config.velocity_fraction)
    rng = RngStream(config.seed)

    tracker = RunTracker(config.max_iter, config.record_diversity)
    population = init_population(objective, config.population_size, rng, vmax)
    incumbent = update_global_best(population, (None, np.inf))

    for _ in range(config.max_iter):
        previous = [cat.flag for cat in population]
        population = assign_modes_random(population, params.mr, rng)
        best_position = incumbent[0]
        moved = []
        for cat, was in zip(population, previous):
            if cat.flag == Mode.SEEKING:
                moved.append(cso_seeking_step(cat, params, rng, bounds, objective))
            else:
                from_rest = params.rest_before_tracing and was != Mode.TRACING
                traced = cso_tracing_step(cat, best_position, params, rng, bounds, vmax, from_rest)
                moved.append(objective.evaluate_cat(traced))
        population = moved
        incumbent = update_global_best(population, incumbent)
        tracker.record(incumbent, population)

    logger.debug(
        f"CSO on {objective.name} (seed={config.seed}) finished at best={incumbent[1]:.6g}"
    )
    return tracker.finish(incumbent, config.seed, Algorithm.CSO.value, objective.name)
