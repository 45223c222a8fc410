import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from src.benchmarks import BenchmarkId, CecTransform, benchmark_objective, problem_group
from src.benchmarks.registry import NOISE_STREAM, Family, benchmark_metadata
from src.core import ConfigurationError, ObjectiveSpec, RngStream
from src.qap import QapInstance, load_qaplib, qap_objective

from .settings import get_settings

QAPLIB_PREFIX = "qaplib:"
QAPLIB_SUFFIX = ".dat"


@dataclass(frozen=True)
class ProblemRef:
    """A resolved problem reference: a benchmark id or a QAPLIB file."""

    name: str
    benchmark: Optional[BenchmarkId] = None
    path: Optional[Path] = None

    @property
    def is_qap(self) -> bool:
        return self.path is not None

    @property
    def group(self) -> str:
        return problem_group(self.name)


def canonical_problem_name(reference: str) -> str:
    """The name a reference runs under (and writes its traces under), without touching the filesystem."""
    reference = reference.strip()
    if reference.lower().startswith(QAPLIB_PREFIX):
        return reference[len(QAPLIB_PREFIX):]
    if reference.lower().endswith(QAPLIB_SUFFIX):
        return Path(reference).stem
    try:
        return BenchmarkId.parse(reference).name
    except ValueError:
        return reference


def resolve_problem(reference: str, qaplib_dir: Optional[Path] = None) -> ProblemRef:
    """'F1' / 'CEC04', 'qaplib:ste36a' (looked up under QAPLIB_DIR) or a path to a .dat file."""
    reference = reference.strip()
    if reference.lower().startswith(QAPLIB_PREFIX):
        directory = Path(qaplib_dir) if qaplib_dir is not None else get_settings().qaplib_dir
        path = directory / f"{reference[len(QAPLIB_PREFIX):]}{QAPLIB_SUFFIX}"
    elif reference.lower().endswith(QAPLIB_SUFFIX):
        path = Path(reference)
    else:
        try:
            benchmark = BenchmarkId.parse(reference)
        except ValueError as e:
            raise ConfigurationError(str(e)) from None
        return ProblemRef(name=benchmark.name, benchmark=benchmark)

    if not path.is_file():
        raise ConfigurationError(f"QAPLIB file {path} not found for problem '{reference}'")
    return ProblemRef(name=path.stem, path=path)


_QAP_INSTANCES: dict[Path, QapInstance] = {}
_qap_instances_lock = threading.Lock()


def get_qap_instance(path: Path) -> QapInstance:
    key = Path(path).resolve()
    if key not in _QAP_INSTANCES:
        with _qap_instances_lock:
            if key not in _QAP_INSTANCES:
                _QAP_INSTANCES[key] = load_qaplib(key)
    return _QAP_INSTANCES[key]


_CEC_TRANSFORMS: dict[tuple, CecTransform] = {}
_cec_transforms_lock = threading.Lock()


def get_cec_transform(benchmark: BenchmarkId, data_dir: Optional[Path], rotate: bool) -> CecTransform:
    key = (benchmark.index, data_dir, rotate)
    if key not in _CEC_TRANSFORMS:
        with _cec_transforms_lock:
            if key not in _CEC_TRANSFORMS:
                dimension = benchmark_metadata(benchmark).dimension
                _CEC_TRANSFORMS[key] = CecTransform.load(benchmark.index, dimension, data_dir, rotate)
    return _CEC_TRANSFORMS[key]


def build_objective(problem: ProblemRef, seed: int, cec_rotation: bool = False) -> ObjectiveSpec:
    """
    Objective for one run. Noisy benchmarks draw from a stream derived from the
    run seed, so a run stays reproducible without sharing the optimizer's stream.
    """
    if problem.is_qap:
        return qap_objective(get_qap_instance(problem.path))

    benchmark = problem.benchmark
    if benchmark.family == Family.CEC2019:
        transform = get_cec_transform(benchmark, get_settings().cec_data_dir, cec_rotation)
        return benchmark_objective(benchmark, transform=transform)
    return benchmark_objective(benchmark, noise_rng=RngStream(seed).derive(NOISE_STREAM))


def list_qaplib_instances(qaplib_dir: Optional[Path] = None) -> list[Path]:
    directory = Path(qaplib_dir) if qaplib_dir is not None else get_settings().qaplib_dir
    if not directory.is_dir():
        return []
    return sorted(directory.glob(f"*{QAPLIB_SUFFIX}"))
