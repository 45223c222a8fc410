from .errors import ConfigurationError, RunFailedError
from .model import Bounds, Cat, Mode, ObjectiveSpec, RunResult
from .params import (
    Algorithm,
    AlgorithmParams,
    CsoParams,
    DcsoParams,
    DeParams,
    PARAMS_BY_ALGORITHM,
    RunConfig,
)
from .population import (
    clamp_position,
    clamp_velocity,
    init_population,
    round_half_up,
    update_global_best,
    velocity_limits,
)
from .rng import RngStream
from .tracker import RunTracker

__all__ = [
    "Algorithm",
    "AlgorithmParams",
    "Bounds",
    "Cat",
    "ConfigurationError",
    "CsoParams",
    "DcsoParams",
    "DeParams",
    "Mode",
    "ObjectiveSpec",
    "PARAMS_BY_ALGORITHM",
    "RngStream",
    "RunConfig",
    "RunFailedError",
    "RunResult",
    "RunTracker",
    "clamp_position",
    "clamp_velocity",
    "init_population",
    "round_half_up",
    "update_global_best",
    "velocity_limits",
]
