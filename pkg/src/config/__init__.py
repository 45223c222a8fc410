from .experiment import AlgorithmEntry, ExperimentConfig, derive_seed, load_experiment_config
from .problems import ProblemRef, build_objective, list_qaplib_instances, resolve_problem
from .settings import Settings, get_settings

__all__ = [
    "AlgorithmEntry",
    "ExperimentConfig",
    "ProblemRef",
    "Settings",
    "build_objective",
    "derive_seed",
    "get_settings",
    "list_qaplib_instances",
    "load_experiment_config",
    "resolve_problem",
]
