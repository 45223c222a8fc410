import numpy as np
import pytest

from src.benchmarks import BenchmarkId, benchmark_objective
from src.core import Algorithm, Bounds, Cat, ConfigurationError, DeParams, RngStream, RunConfig
from src.optimizers import de_run, de_trial_vector

BOX = Bounds.box(-10.0, 10.0, 5)


def _random_population(n: int, seed: int) -> list[Cat]:
    rng = np.random.default_rng(seed)
    return [
        Cat(position=rng.uniform(-5, 5, 5), velocity=np.zeros(5), cost=0.0) for _ in range(n)
    ]


def test_zero_difference_makes_the_mutant_a_donor():
    target = Cat(position=np.full(5, -3.0), velocity=np.zeros(5), cost=0.0)
    twin = Cat(position=np.full(5, 2.0), velocity=np.zeros(5), cost=0.0)
    population = [target, twin, twin, twin]
    trial = de_trial_vector(0, population, DeParams(crossover_rate=0.5), RngStream(1), BOX)
    assert set(np.unique(trial)) <= {-3.0, 2.0}
    assert np.any(trial == 2.0)


def test_zero_crossover_rate_changes_exactly_one_dimension():
    population = _random_population(6, seed=3)
    for seed in range(20):
        trial = de_trial_vector(2, population, DeParams(crossover_rate=0.0), RngStream(seed), BOX)
        assert np.count_nonzero(trial != population[2].position) == 1


def test_full_crossover_takes_the_whole_mutant():
    population = _random_population(6, seed=4)
    trial = de_trial_vector(0, population, DeParams(crossover_rate=1.0), RngStream(9), BOX)
    assert np.all(trial != population[0].position)


def test_trial_vector_stays_in_bounds():
    population = [
        Cat(position=np.full(5, value), velocity=np.zeros(5), cost=0.0)
        for value in (9.0, 9.5, -9.5, 9.9)
    ]
    for seed in range(20):
        trial = de_trial_vector(0, population, DeParams(beta_max=0.8), RngStream(seed), BOX)
        assert BOX.contains(trial)


def test_trial_vector_needs_four_individuals():
    with pytest.raises(ConfigurationError):
        de_trial_vector(0, _random_population(3, seed=0), DeParams(), RngStream(0), BOX)


def test_de_run_rejects_small_population():
    objective = benchmark_objective(BenchmarkId.parse("F1"))
    with pytest.raises(ConfigurationError):
        de_run(objective, RunConfig(algorithm=Algorithm.DE, population_size=3))


def test_de_run_is_deterministic_and_monotone():
    objective = benchmark_objective(BenchmarkId.parse("F1"))
    config = RunConfig(algorithm=Algorithm.DE, population_size=10, max_iter=30, seed=17)
    first, second = de_run(objective, config), de_run(objective, config)
    np.testing.assert_array_equal(first.convergence, second.convergence)
    assert np.all(np.diff(first.convergence) <= 0)
    assert first.algorithm == "DE" and first.objective == "F1"


@pytest.mark.slow
def test_de_reaches_small_values_on_f1():
    objective = benchmark_objective(BenchmarkId.parse("F1"))
    finals = [
        de_run(objective, RunConfig(algorithm=Algorithm.DE, seed=seed, record_diversity=False)).best_cost
        for seed in range(5)
    ]
    assert np.mean(finals) < 1e-6
