"""Differential Evolution baseline: DE/rand/1/bin with a dithered scale factor and generation-synchronous selection."""

import numpy as np

from src.core import (
    Algorithm,
    Bounds,
    Cat,
    ConfigurationError,
    DeParams,
    ObjectiveSpec,
    RngStream,
    RunConfig,
    RunResult,
    RunTracker,
    clamp_position,
    init_population,
    update_global_best,
    velocity_limits,
)
from src.utils.logger import get_logger

MIN_DE_POPULATION = 4


def de_trial_vector(
    target_index: int,
    population: list[Cat],
    params: DeParams,
    rng: RngStream,
    bounds: Bounds,
) -> np.ndarray:
    n = len(population)
    if n < MIN_DE_POPULATION:
        raise ConfigurationError(f"DE needs at least {MIN_DE_POPULATION} individuals, got {n}")
    donors = [index for index in range(n) if index != target_index]
    r1, r2, r3 = (donors[int(k)] for k in rng.sample_without_replacement(n - 1, 3))

    scale = params.beta_min + (params.beta_max - params.beta_min) * rng.random()
    mutant = population[r1].position + scale * (
        population[r2].position - population[r3].position
    )

    target = population[target_index].position
    crossover = np.asarray(rng.random(bounds.dimension)) < params.crossover_rate
    crossover[rng.integers(0, bounds.dimension)] = True
    return clamp_position(np.where(crossover, mutant, target), bounds)


def de_run(objective: ObjectiveSpec, config: RunConfig) -> RunResult:
    if config.algorithm != Algorithm.DE:
        raise ValueError(f"de_run called with algorithm {config.algorithm.value}")
    if config.population_size < MIN_DE_POPULATION:
        raise ConfigurationError(
            f"DE needs population_size >= {MIN_DE_POPULATION}, got {config.population_size}"
        )
    logger = get_logger()
    params: DeParams = config.params
    bounds = objective.bounds
    rng = RngStream(config.seed)

    tracker = RunTracker(config.max_iter, config.record_diversity)
    population = init_population(
        objective, config.population_size, rng, velocity_limits(bounds, config.velocity_fraction)
    )
    incumbent = update_global_best(population, (None, np.inf))

    for _ in range(config.max_iter):
        trials = [
            de_trial_vector(index, population, params, rng, bounds)
            for index in range(len(population))
        ]
        next_population = []
        for cat, trial in zip(population, trials):
            trial_cost = objective(trial)
            # ties go to the trial
            if trial_cost <= cat.cost:
                next_population.append(Cat(position=trial, velocity=cat.velocity, cost=trial_cost))
            else:
                next_population.append(cat)
        population = next_population
        incumbent = update_global_best(population, incumbent)
        tracker.record(incumbent, population)

    logger.debug(
        f"DE on {objective.name} (seed={config.seed}) finished at best={incumbent[1]:.6g}"
    )
    return tracker.finish(incumbent, config.seed, Algorithm.DE.value, objective.name)
