"""
One independent optimizer run: build the objective, run the algorithm with the
derived seed, persist the convergence (and optionally diversity) trace and hand
back a flat record for the summary tables.
"""

from pathlib import Path

import numpy as np
import pandas as pd
from prefect import task
from prefect.cache_policies import NO_CACHE

from src.config.experiment import AlgorithmEntry, ExperimentConfig
from src.config.problems import ProblemRef, build_objective
from src.core import RunConfig, RunFailedError, RunResult
from src.diagnostics import phase_balance, phase_percentages
from src.optimizers import run_optimizer
from src.utils.io import CONVERGENCE_DIR, DIVERSITY_DIR, trace_path, write_csv
from src.utils.logger import get_logger


def write_traces(result: RunResult, output_dir: Path, problem: str, run: int) -> None:
    iterations = np.arange(1, result.convergence.size + 1)
    write_csv(
        pd.DataFrame({"iteration": iterations, "best_so_far": result.convergence}),
        trace_path(output_dir, CONVERGENCE_DIR, problem, result.algorithm, run),
    )
    if result.diversity_trace is not None:
        xpl, xpt = phase_percentages(result.diversity_trace)
        write_csv(
            pd.DataFrame(
                {
                    "iteration": iterations,
                    "diversity": result.diversity_trace,
                    "xpl": xpl,
                    "xpt": xpt,
                }
            ),
            trace_path(output_dir, DIVERSITY_DIR, problem, result.algorithm, run),
        )


@task(name="execute_run", cache_policy=NO_CACHE, cache_result_in_memory=False)
def execute_run(
    problem: ProblemRef, entry: AlgorithmEntry, run: int, config: ExperimentConfig
) -> dict:
    logger = get_logger()
    algorithm = entry.name.value
    seed = config.seed_for(problem.name, entry.name, run)
    try:
        objective = build_objective(problem, seed, config.cec_rotation)
        run_config = RunConfig(
            population_size=config.population_size,
            max_iter=config.max_iter,
            algorithm=entry.name,
            params=entry.build_params(),
            seed=seed,
            record_diversity=config.records_diversity(problem),
        )
        result = run_optimizer(objective, run_config)
        write_traces(result, config.output_dir, problem.name, run)
    except Exception as e:
        raise RunFailedError(problem.name, algorithm, run, e) from e

    if result.diversity_trace is not None:
        balance = phase_balance(result.diversity_trace)
        xpl, xpt = balance.xpl_percent, balance.xpt_percent
    else:
        xpl = xpt = np.nan

    logger.info(
        f"{algorithm} on {problem.name} run {run} (seed={seed}): "
        f"best={result.best_cost:.6g} in {result.elapsed_seconds:.2f}s"
    )
    return {
        "problem": problem.name,
        "algorithm": algorithm,
        "run": run,
        "seed": seed,
        "best_cost": result.best_cost,
        "elapsed_s": result.elapsed_seconds,
        "xpl": xpl,
        "xpt": xpt,
    }
