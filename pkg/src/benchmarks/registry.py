"""
Benchmark identifiers and metadata (dimension, range, reference optimum) for
the classical F1-F23 suite and CEC01-CEC10, plus the adapter that turns an id
into an ObjectiveSpec the optimizers can run.
"""

import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional

import numpy as np

from src.core import Bounds, ObjectiveSpec, RngStream

from .cec2019 import IDENTITY, CecTransform, evaluate_cec
from .classical import CLASSICAL_FUNCTIONS, NOISY_FUNCTIONS

_SCHWEFEL_MIN_PER_DIM = -418.9828872724338


class Family(str, Enum):
    CLASSICAL = "classical"
    CEC2019 = "cec2019"


_FAMILY_SIZE = {Family.CLASSICAL: 23, Family.CEC2019: 10}
# stream index of the run seed that feeds F7's noise
NOISE_STREAM = 1

_ID_PATTERN = re.compile(r"^(?:(F)(\d{1,2})|(CEC)(\d{1,2}))$", re.IGNORECASE)


@dataclass(frozen=True)
class BenchmarkId:
    family: Family
    index: int

    def __post_init__(self):
        size = _FAMILY_SIZE[self.family]
        if not 1 <= self.index <= size:
            raise ValueError(f"{self.family.value} index must be in [1, {size}], got {self.index}")

    @classmethod
    def parse(cls, name: str) -> "BenchmarkId":
        """'F1'..'F23' or 'CEC01'..'CEC10' (case-insensitive, CEC zero padding optional)."""
        match = _ID_PATTERN.match(name.strip())
        if match is None:
            raise ValueError(f"Unknown benchmark id '{name}'")
        if match.group(1):
            return cls(Family.CLASSICAL, int(match.group(2)))
        return cls(Family.CEC2019, int(match.group(4)))

    @property
    def name(self) -> str:
        if self.family == Family.CLASSICAL:
            return f"F{self.index}"
        return f"CEC{self.index:02d}"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class BenchmarkMeta:
    """
    f_min is the reference column as published (with the F8 and F16 entries
    corrected); true_min is the exact optimum value used for lower-bound checks.
    """

    id: BenchmarkId
    dimension: int
    lower: float
    upper: float
    f_min: float
    true_min: float

    @property
    def bounds(self) -> Bounds:
        return Bounds.box(self.lower, self.upper, self.dimension)


# index: (dimension, lower, upper, f_min, true_min)
_CLASSICAL_META = {
    1: (30, -100.0, 100.0, 0.0, 0.0),
    2: (30, -10.0, 10.0, 0.0, 0.0),
    3: (30, -100.0, 100.0, 0.0, 0.0),
    4: (30, -100.0, 100.0, 0.0, 0.0),
    5: (30, -30.0, 30.0, 0.0, 0.0),
    6: (30, -100.0, 100.0, 0.0, 0.0),
    7: (30, -1.28, 1.28, 0.0, 0.0),
    8: (30, -500.0, 500.0, -418.9829 * 30, _SCHWEFEL_MIN_PER_DIM * 30),
    9: (30, -5.12, 5.12, 0.0, 0.0),
    10: (30, -32.0, 32.0, 0.0, 0.0),
    11: (30, -600.0, 600.0, 0.0, 0.0),
    12: (30, -50.0, 50.0, 0.0, 0.0),
    13: (30, -50.0, 50.0, 0.0, 0.0),
    14: (2, -65.0, 65.0, 1.0, 0.998003837794449),
    15: (4, -5.0, 5.0, 0.00030, 0.000307485987805),
    16: (2, -5.0, 5.0, -1.0316, -1.0316284534898774),
    17: (2, -5.0, 5.0, 0.398, 0.39788735772973816),
    18: (2, -2.0, 2.0, 3.0, 3.0),
    # printed as [1, 3], which excludes the optimum at (0.1146, 0.5556, 0.8525)
    19: (3, 0.0, 1.0, -3.86, -3.86278214782076),
    20: (6, 0.0, 1.0, -3.32, -3.32236801141551),
    21: (4, 0.0, 10.0, -10.1532, -10.1531996790582),
    22: (4, 0.0, 10.0, -10.4028, -10.4029405668187),
    23: (4, 0.0, 10.0, -10.5363, -10.536409816692),
}

_CEC_META = {
    1: (9, -8192.0, 8192.0),
    2: (16, -16384.0, 16384.0),
    3: (18, -4.0, 4.0),
    **{index: (10, -100.0, 100.0) for index in range(4, 11)},
}


def benchmark_metadata(benchmark: BenchmarkId) -> BenchmarkMeta:
    if benchmark.family == Family.CLASSICAL:
        dimension, lower, upper, f_min, true_min = _CLASSICAL_META[benchmark.index]
        return BenchmarkMeta(benchmark, dimension, lower, upper, f_min, true_min)
    dimension, lower, upper = _CEC_META[benchmark.index]
    return BenchmarkMeta(benchmark, dimension, lower, upper, 1.0, 1.0)


def list_benchmarks() -> list[BenchmarkMeta]:
    return [
        benchmark_metadata(BenchmarkId(family, index))
        for family in (Family.CLASSICAL, Family.CEC2019)
        for index in range(1, _FAMILY_SIZE[family] + 1)
    ]


def _check_dimension(benchmark: BenchmarkId, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    expected = benchmark_metadata(benchmark).dimension
    if x.ndim != 1 or x.size != expected:
        raise ValueError(f"{benchmark} expects a vector of length {expected}, got shape {x.shape}")
    return x


def eval_classical(benchmark: BenchmarkId, x: np.ndarray, rng: Optional[RngStream] = None) -> float:
    """F7 draws its noise from `rng`, which it requires."""
    if benchmark.family != Family.CLASSICAL:
        raise ValueError(f"{benchmark} is not a classical benchmark")
    x = _check_dimension(benchmark, x)
    function = CLASSICAL_FUNCTIONS[benchmark.index]
    if benchmark.index in NOISY_FUNCTIONS:
        if rng is None:
            raise ValueError(f"{benchmark} is noisy and needs a random stream")
        return float(function(x, rng))
    return float(function(x))


def eval_cec(benchmark: BenchmarkId, x: np.ndarray, transform: CecTransform = IDENTITY) -> float:
    if benchmark.family != Family.CEC2019:
        raise ValueError(f"{benchmark} is not a CEC-2019 benchmark")
    return evaluate_cec(benchmark.index, _check_dimension(benchmark, x), transform)


def benchmark_objective(
    benchmark: BenchmarkId,
    noise_rng: Optional[RngStream] = None,
    cec_data_dir: Optional[Path] = None,
    rotate: bool = False,
    transform: Optional[CecTransform] = None,
) -> ObjectiveSpec:
    """
    CEC functions use `transform` when given, else load it from `cec_data_dir`.
    A noisy function without `noise_rng` draws from stream NOISE_STREAM of
    seed 0, so it stays noisy and reproducible.
    """
    meta = benchmark_metadata(benchmark)
    if benchmark.family == Family.CLASSICAL:
        stochastic = benchmark.index in NOISY_FUNCTIONS
        if stochastic and noise_rng is None:
            noise_rng = RngStream(0).derive(NOISE_STREAM)

        def evaluate(x: np.ndarray) -> float:
            return eval_classical(benchmark, x, noise_rng)

    else:
        stochastic = False
        if transform is None:
            transform = CecTransform.load(benchmark.index, meta.dimension, cec_data_dir, rotate)

        def evaluate(x: np.ndarray) -> float:
            return eval_cec(benchmark, x, transform)

    return ObjectiveSpec(
        name=benchmark.name, bounds=meta.bounds, evaluate=evaluate, stochastic=stochastic
    )


def problem_group(name: str) -> str:
    """Ranking group of a problem: unimodal (F1-F7), multimodal (F8-F23), cec2019 or qap."""
    try:
        benchmark = BenchmarkId.parse(name)
    except ValueError:
        return "qap"
    if benchmark.family == Family.CEC2019:
        return "cec2019"
    return "unimodal" if benchmark.index <= 7 else "multimodal"
