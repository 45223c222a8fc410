"""Parameter records for the three optimizers and a single run (defaults follow the study's parameter table)."""

from enum import Enum
from typing import Optional, Union

from pydantic import BaseModel, Field, model_validator


class Algorithm(str, Enum):
    DCSO = "DCSO"
    CSO = "CSO"
    DE = "DE"


class DcsoParams(BaseModel):
    smp: int = Field(default=5, ge=1)
    cdc: float = Field(default=0.8, gt=0, le=1)
    c1: float = Field(default=2.05)
    w_max: float = Field(default=0.9)
    w_min: float = Field(default=0.4)
    elitist_seeking: bool = Field(default=False)
    # False draws one rand per cat instead of one per dimension
    per_dimension_rand: bool = Field(default=True)

    @model_validator(mode="after")
    def _check_inertia_range(self):
        if self.w_min > self.w_max:
            raise ValueError(f"w_min ({self.w_min}) must not exceed w_max ({self.w_max})")
        return self


class CsoParams(BaseModel):
    mr: float = Field(default=0.2, ge=0, le=1)
    smp: int = Field(default=5, ge=1)
    srd: float = Field(default=0.2, gt=0)
    cdc: float = Field(default=0.8, gt=0, le=1)
    spc: bool = Field(default=True)
    c1: float = Field(default=2.05)
    per_dimension_rand: bool = Field(default=True)
    # False keeps the velocity a cat had when it last traced, however long ago
    rest_before_tracing: bool = Field(default=True)

    @model_validator(mode="after")
    def _check_pool(self):
        if self.spc and self.smp < 2:
            raise ValueError("spc=True keeps one SMP slot for the current position, so smp must be >= 2")
        return self


class DeParams(BaseModel):
    beta_min: float = Field(default=0.2, ge=0)
    beta_max: float = Field(default=0.8)
    crossover_rate: float = Field(default=0.2, ge=0, le=1)

    @model_validator(mode="after")
    def _check_dither(self):
        if self.beta_min > self.beta_max:
            raise ValueError(f"beta_min ({self.beta_min}) must not exceed beta_max ({self.beta_max})")
        return self


AlgorithmParams = Union[DcsoParams, CsoParams, DeParams]

PARAMS_BY_ALGORITHM: dict[Algorithm, type[BaseModel]] = {
    Algorithm.DCSO: DcsoParams,
    Algorithm.CSO: CsoParams,
    Algorithm.DE: DeParams,
}


class RunConfig(BaseModel):
    population_size: int = Field(default=30, ge=3)
    max_iter: int = Field(default=500, ge=1)
    algorithm: Algorithm = Field(default=Algorithm.DCSO)
    params: Optional[AlgorithmParams] = Field(default=None)
    seed: int = Field(default=0, ge=0, lt=2**64)
    record_diversity: bool = Field(default=True)
    # Vmax = velocity_fraction * (upper - lower)
    velocity_fraction: float = Field(default=1.0, gt=0)

    @model_validator(mode="after")
    def _bind_params(self):
        expected = PARAMS_BY_ALGORITHM[self.algorithm]
        if self.params is None:
            self.params = expected()
        elif not isinstance(self.params, expected):
            raise ValueError(
                f"{self.algorithm.value} expects {expected.__name__}, got {type(self.params).__name__}"
            )
        return self
