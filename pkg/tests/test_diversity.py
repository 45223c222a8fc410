import numpy as np
import pytest

from src.benchmarks import BenchmarkId, benchmark_objective
from src.core import Algorithm, RunConfig
from src.diagnostics import (
    average_phase_balance,
    dimension_diversity,
    phase_balance,
    phase_percentages,
)
from src.optimizers import dcso_run


def test_collapsed_population_has_no_diversity():
    snapshot = dimension_diversity(np.tile([1.5, -2.0, 7.0], (10, 1)))
    assert snapshot.div == 0.0
    np.testing.assert_array_equal(snapshot.div_per_dim, [0.0, 0.0, 0.0])


def test_diversity_around_the_median():
    assert dimension_diversity(np.array([[0.0], [2.0], [4.0]])).div == pytest.approx(4 / 3)


def test_diversity_averages_dimensions():
    positions = np.array([[0.0, 10.0], [2.0, 10.0], [4.0, 10.0]])
    snapshot = dimension_diversity(positions, iteration=7)
    np.testing.assert_allclose(snapshot.div_per_dim, [4 / 3, 0.0])
    assert snapshot.div == pytest.approx(2 / 3)
    assert snapshot.iteration == 7


def test_even_population_uses_the_midpoint_median():
    assert dimension_diversity(np.array([[0.0], [1.0], [3.0], [10.0]])).div == pytest.approx(3.0)


def test_phase_percentages_example():
    xpl, xpt = phase_percentages(np.array([1.0, 2.0, 4.0]))
    np.testing.assert_allclose(xpl, [25.0, 50.0, 100.0])
    np.testing.assert_allclose(xpt, [75.0, 50.0, 0.0])


@pytest.mark.parametrize(
    "trace, xpl, xpt",
    [([3.0, 3.0, 3.0], 100.0, 0.0), ([2.0, 1.0], 75.0, 25.0), ([0.0, 0.0], 0.0, 100.0)],
)
def test_phase_balance(trace, xpl, xpt):
    balance = phase_balance(np.array(trace))
    assert balance.xpl_percent == pytest.approx(xpl)
    assert balance.xpt_percent == pytest.approx(xpt)


def test_phases_always_sum_to_one_hundred():
    trace = np.abs(np.random.default_rng(0).normal(size=200))
    xpl, xpt = phase_percentages(trace)
    np.testing.assert_allclose(xpl + xpt, 100.0, atol=1e-9)
    assert np.all((xpl >= 0) & (xpl <= 100))


def test_average_phase_balance_over_runs():
    balance = average_phase_balance([np.array([2.0, 1.0]), np.array([3.0, 3.0])])
    assert balance.xpl_percent == pytest.approx(87.5)
    assert balance.xpt_percent == pytest.approx(12.5)
    with pytest.raises(ValueError):
        average_phase_balance([])


def test_empty_trace_is_rejected():
    with pytest.raises(ValueError):
        phase_percentages(np.array([]))


def test_run_records_one_diversity_value_per_iteration():
    objective = benchmark_objective(BenchmarkId.parse("F1"))
    result = dcso_run(objective, RunConfig(algorithm=Algorithm.DCSO, population_size=10, max_iter=25))
    assert result.diversity_trace.shape == (25,)
    assert np.all(result.diversity_trace >= 0)

    silent = dcso_run(
        objective,
        RunConfig(algorithm=Algorithm.DCSO, population_size=10, max_iter=25, record_diversity=False),
    )
    assert silent.diversity_trace is None


@pytest.mark.slow
def test_converging_dcso_runs_are_mostly_exploitation():
    objective = benchmark_objective(BenchmarkId.parse("F1"))
    traces = [
        dcso_run(objective, RunConfig(algorithm=Algorithm.DCSO, seed=s)).diversity_trace
        for s in range(10)
    ]
    for trace in traces:
        xpl, xpt = phase_percentages(trace)
        np.testing.assert_allclose(xpl + xpt, 100.0, atol=1e-9)
    # the swarm contracts geometrically onto the optimum, so Div stays far below Div_max
    assert average_phase_balance(traces).xpl_percent < 35.0
