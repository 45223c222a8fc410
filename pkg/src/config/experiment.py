"""
Experiment files: a YAML document validated into ExperimentConfig.

    problems: [F1, F9, CEC04, qaplib:ste36a]
    algorithms:
      - name: DCSO
      - name: CSO
        params: {mr: 0.2}
    runs: 30
    population_size: 30
    max_iter: 500

Missing keys fall back to the model defaults, and output_dir, base_seed and
max_workers fall back to the environment settings.
"""

import hashlib
from pathlib import Path
from typing import Any, Optional

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator

from src.core import PARAMS_BY_ALGORITHM, Algorithm, AlgorithmParams, ConfigurationError
from src.optimizers.de import MIN_DE_POPULATION

from .problems import ProblemRef, build_objective, canonical_problem_name, resolve_problem
from .settings import get_settings


class AlgorithmEntry(BaseModel):
    name: Algorithm
    params: dict[str, Any] = Field(default_factory=dict)

    @field_validator("name", mode="before")
    @classmethod
    def _upper_name(cls, value):
        return value.upper() if isinstance(value, str) else value

    @model_validator(mode="after")
    def _check_params(self):
        PARAMS_BY_ALGORITHM[self.name].model_validate(self.params)
        return self

    def build_params(self) -> AlgorithmParams:
        return PARAMS_BY_ALGORITHM[self.name].model_validate(self.params)


class ExperimentConfig(BaseModel):
    problems: list[str] = Field(min_length=1)
    algorithms: list[AlgorithmEntry] = Field(min_length=1)
    runs: int = Field(default=30, ge=1)
    population_size: int = Field(default=30, ge=3)
    max_iter: int = Field(default=500, ge=1)
    base_seed: int = Field(default_factory=lambda: get_settings().base_seed, ge=0, lt=2**64)
    output_dir: Path = Field(default_factory=lambda: get_settings().output_dir)
    paired_seeds: bool = Field(default=False)
    # None: on for benchmark functions, off for QAP
    record_diversity: Optional[bool] = Field(default=None)
    reference_algorithm: Optional[Algorithm] = Field(default=None)
    max_workers: int = Field(default_factory=lambda: get_settings().max_workers, ge=1)
    cec_rotation: bool = Field(default=False)

    @model_validator(mode="after")
    def _check_algorithms(self):
        names = [entry.name for entry in self.algorithms]
        duplicates = sorted({name.value for name in names if names.count(name) > 1})
        if duplicates:
            raise ValueError(f"Algorithms listed more than once: {', '.join(duplicates)}")
        if self.reference_algorithm is None:
            self.reference_algorithm = names[0]
        elif self.reference_algorithm not in names:
            raise ValueError(
                f"reference_algorithm {self.reference_algorithm.value} is not among the algorithms"
            )
        if Algorithm.DE in names and self.population_size < MIN_DE_POPULATION:
            raise ValueError(
                f"DE needs population_size >= {MIN_DE_POPULATION}, got {self.population_size}"
            )
        canonical = [canonical_problem_name(problem) for problem in self.problems]
        repeated = sorted({name for name in canonical if canonical.count(name) > 1})
        if repeated:
            raise ValueError(f"Problems listed more than once: {', '.join(repeated)}")
        return self

    def resolve_problems(self) -> list[ProblemRef]:
        return [resolve_problem(problem) for problem in self.problems]

    def prepare_problems(self) -> list[ProblemRef]:
        """Resolves every problem and loads its data (QAPLIB file, CEC shift/rotation) once."""
        problems = self.resolve_problems()
        for problem in problems:
            build_objective(problem, self.base_seed, self.cec_rotation)
        return problems

    def records_diversity(self, problem: ProblemRef) -> bool:
        if self.record_diversity is not None:
            return self.record_diversity
        return not problem.is_qap

    def seed_for(self, problem: str, algorithm: Algorithm, run: int) -> int:
        return derive_seed(self.base_seed, problem, algorithm.value, run, self.paired_seeds)


def derive_seed(base_seed: int, problem: str, algorithm: str, run: int, paired: bool = False) -> int:
    """base_seed XOR a 64-bit digest of (problem, algorithm, run); paired mode leaves the algorithm out."""
    key = f"{problem}|{run}" if paired else f"{problem}|{algorithm}|{run}"
    digest = hashlib.blake2b(key.encode(), digest_size=8).digest()
    return base_seed ^ int.from_bytes(digest, "big")


def load_experiment_config(path: Optional[Path], overrides: Optional[dict[str, Any]] = None) -> ExperimentConfig:
    """
    Reads the YAML file at `path` (or starts empty) and applies the non-None
    overrides on top. Problem references are resolved here so a missing QAPLIB
    file fails before any run starts.
    """
    data: dict[str, Any] = {}
    if path is not None:
        path = Path(path)
        if not path.is_file():
            raise ConfigurationError(f"Config file {path} not found")
        try:
            data = yaml.safe_load(path.read_text()) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Config file {path} is not valid YAML: {e}") from None
        if not isinstance(data, dict):
            raise ConfigurationError(f"Config file {path} must hold a mapping at the top level")

    data.update({key: value for key, value in (overrides or {}).items() if value is not None})
    config = ExperimentConfig.model_validate(data)
    config.prepare_problems()
    return config
