from typing import Optional

import pandas as pd
from prefect import flow
from prefect.task_runners import ThreadPoolTaskRunner
from tqdm import tqdm

from src.config.experiment import ExperimentConfig
from src.config.settings import get_settings
from src.tasks import emit_reports, execute_run, runs_frame, summary_table
from src.utils.io import ensure_output_dir
from src.utils.logger import get_logger


@flow(name="experiment-runs-flow", task_runner=ThreadPoolTaskRunner(max_workers=4))
def experiment_runs_flow(config: ExperimentConfig, show_progress: bool = True) -> pd.DataFrame:
    logger = get_logger()
    problems = config.prepare_problems()
    ensure_output_dir(config.output_dir)
    logger.info(
        f"Starting experiment: {len(problems)} problems x {len(config.algorithms)} algorithms "
        f"x {config.runs} runs (base_seed={config.base_seed}, paired={config.paired_seeds})"
    )

    futures = [
        execute_run.submit(problem, entry, run, config)
        for problem in problems
        for entry in config.algorithms
        for run in range(1, config.runs + 1)
    ]
    # collected in submission order so the reports do not depend on scheduling
    records = [
        future.result()
        for future in tqdm(futures, desc="runs", unit="run", disable=not show_progress)
    ]

    runs = runs_frame(records)
    emit_reports(runs, config.reference_algorithm.value, config.output_dir)
    logger.info(f"Experiment finished, reports in {config.output_dir}")
    return summary_table(runs)


@flow(name="experiment-flow")
def experiment_flow(config: ExperimentConfig, show_progress: bool = True) -> pd.DataFrame:
    """Deployment entrypoint: the runs go through a task runner sized to config.max_workers."""
    runner = ThreadPoolTaskRunner(max_workers=config.max_workers)
    return experiment_runs_flow.with_options(task_runner=runner)(config, show_progress)


def run_experiment(config: ExperimentConfig, show_progress: Optional[bool] = None) -> pd.DataFrame:
    if show_progress is None:
        show_progress = get_settings().show_progress
    return experiment_flow(config, show_progress)
