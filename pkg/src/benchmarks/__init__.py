from .cec2019 import CEC_FUNCTIONS, IDENTITY, CecDataError, CecTransform, evaluate_cec
from .classical import CLASSICAL_FUNCTIONS, NOISY_FUNCTIONS, penalty_u
from .registry import (
    BenchmarkId,
    BenchmarkMeta,
    Family,
    benchmark_metadata,
    benchmark_objective,
    eval_cec,
    eval_classical,
    list_benchmarks,
    problem_group,
)

__all__ = [
    "CEC_FUNCTIONS",
    "CLASSICAL_FUNCTIONS",
    "IDENTITY",
    "NOISY_FUNCTIONS",
    "BenchmarkId",
    "BenchmarkMeta",
    "CecDataError",
    "CecTransform",
    "Family",
    "benchmark_metadata",
    "benchmark_objective",
    "eval_cec",
    "eval_classical",
    "evaluate_cec",
    "list_benchmarks",
    "penalty_u",
    "problem_group",
]
