from typing import Callable

from src.core import Algorithm, ObjectiveSpec, RunConfig, RunResult

from .cso import (
    assign_modes_random,
    cso_run,
    cso_seeking_step,
    cso_tracing_step,
    roulette_probabilities,
)
from .dcso import (
    assign_modes_sorted,
    compute_mode_counts,
    dcso_run,
    inertia_weight,
    seeking_step,
    tracing_step,
)
from .de import de_run, de_trial_vector

OPTIMIZERS: dict[Algorithm, Callable[[ObjectiveSpec, RunConfig], RunResult]] = {
    Algorithm.DCSO: dcso_run,
    Algorithm.CSO: cso_run,
    Algorithm.DE: de_run,
}


def run_optimizer(objective: ObjectiveSpec, config: RunConfig) -> RunResult:
    return OPTIMIZERS[config.algorithm](objective, config)


__all__ = [
    "OPTIMIZERS",
    "assign_modes_random",
    "assign_modes_sorted",
    "compute_mode_counts",
    "cso_run",
    "cso_seeking_step",
    "cso_tracing_step",
    "dcso_run",
    "de_run",
    "de_trial_vector",
    "inertia_weight",
    "roulette_probabilities",
    "run_optimizer",
    "seeking_step",
    "tracing_step",
]
