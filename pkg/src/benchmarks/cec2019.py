"""
CEC-2019 "100-digit challenge" functions CEC01-CEC10 in their base forms.

Each function is biased by +1 so the unshifted optimum is 1. CEC04-CEC09 scale
their input by the competition's shrink rate before evaluation. Shift vectors
and rotation matrices can be supplied as plain-text files (see CecTransform).
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional

import numpy as np

BIAS = 1.0

# Chebyshev fitting: the polynomial must reach T_{D-1}(1.2) at +/-1.2 and stay in [-1, 1] inside
_CHEBYSHEV_SAMPLES_PER_DIM = 32

_LENNARD_JONES_OFFSET = 12.7120622568

_WEIERSTRASS_A = 0.5
_WEIERSTRASS_B = 3.0
_WEIERSTRASS_KMAX = 20

_SCHWEFEL_SHIFT = 420.9687462275036
_SCHWEFEL_PEAK = _SCHWEFEL_SHIFT * np.sin(np.sqrt(_SCHWEFEL_SHIFT))


class CecDataError(FileNotFoundError):
    pass


def _chebyshev_target(dimension: int) -> float:
    a, b = 1.0, 1.2
    target = b
    for _ in range(dimension - 2):
        target = 2.4 * b - a
        a, b = b, target
    return target


def storn_chebyshev(x: np.ndarray) -> float:
    dimension = x.size
    target = _chebyshev_target(dimension)

    def polynomial(z: np.ndarray) -> np.ndarray:
        value = np.full_like(z, x[0], dtype=float)
        for coefficient in x[1:]:
            value = value * z + coefficient
        return value

    samples = _CHEBYSHEV_SAMPLES_PER_DIM * dimension
    grid = -1.0 + 2.0 * np.arange(samples + 1) / samples
    inside = polynomial(grid)
    total = np.sum(np.where(np.abs(inside) > 1.0, (1.0 - np.abs(inside)) ** 2, 0.0))
    ends = polynomial(np.array([-1.2, 1.2]))
    total += np.sum(np.where(ends < target, (ends - target) ** 2, 0.0))
    return float(total)


def inverse_hilbert(x: np.ndarray) -> float:
    n = int(round(np.sqrt(x.size)))
    if n * n != x.size:
        raise ValueError(f"Inverse Hilbert needs a square dimension, got {x.size}")
    i = np.arange(n)
    hilbert = 1.0 / (i[:, None] + i[None, :] + 1.0)
    residual = hilbert @ x.reshape(n, n) - np.eye(n)
    return float(np.sum(np.abs(residual)))


def lennard_jones(x: np.ndarray) -> float:
    if x.size % 3:
        raise ValueError(f"Lennard-Jones needs 3 coordinates per atom, got {x.size}")
    atoms = x.reshape(-1, 3)
    upper = np.triu_indices(atoms.shape[0], k=1)
    r2 = np.sum((atoms[:, None, :] - atoms[None, :, :]) ** 2, axis=-1)[upper]
    r2 = np.maximum(r2, 1e-16)
    inv6 = 1.0 / r2**3
    return float(_LENNARD_JONES_OFFSET + np.sum(inv6 * inv6 - 2.0 * inv6))


def rastrigin(z: np.ndarray) -> float:
    return float(np.sum(z**2 - 10.0 * np.cos(2.0 * np.pi * z) + 10.0))


def griewank(z: np.ndarray) -> float:
    i = np.arange(1, z.size + 1)
    return float(np.sum(z**2) / 4000.0 - np.prod(np.cos(z / np.sqrt(i))) + 1.0)


def weierstrass(z: np.ndarray) -> float:
    k = np.arange(_WEIERSTRASS_KMAX + 1)
    ak = _WEIERSTRASS_A**k
    bk = _WEIERSTRASS_B**k
    terms = np.sum(ak * np.cos(2.0 * np.pi * bk * (z[:, None] + 0.5)), axis=1)
    return float(np.sum(terms) - z.size * np.sum(ak * np.cos(np.pi * bk)))


def modified_schwefel(z: np.ndarray) -> float:
    z = z + _SCHWEFEL_SHIFT
    g = np.empty_like(z)
    inside = np.abs(z) <= 500.0
    g[inside] = z[inside] * np.sin(np.sqrt(np.abs(z[inside])))
    above = z > 500.0
    wrapped = 500.0 - np.fmod(z[above], 500.0)
    g[above] = wrapped * np.sin(np.sqrt(wrapped)) - (z[above] - 500.0) ** 2 / (10000.0 * z.size)
    below = z < -500.0
    wrapped = np.fmod(np.abs(z[below]), 500.0) - 500.0
    g[below] = wrapped * np.sin(np.sqrt(np.abs(wrapped))) - (z[below] + 500.0) ** 2 / (
        10000.0 * z.size
    )
    return float(z.size * _SCHWEFEL_PEAK - np.sum(g))


def expanded_schaffer_f6(z: np.ndarray) -> float:
    pairs = np.stack([z, np.roll(z, -1)])
    s = np.sum(pairs**2, axis=0)
    return float(np.sum(0.5 + (np.sin(np.sqrt(s)) ** 2 - 0.5) / (1.0 + 0.001 * s) ** 2))


def happy_cat(z: np.ndarray) -> float:
    z = z - 1.0
    r2 = np.sum(z**2)
    n = z.size
    return float(np.abs(r2 - n) ** 0.25 + (0.5 * r2 + np.sum(z)) / n + 0.5)


def ackley(z: np.ndarray) -> float:
    n = z.size
    return float(
        -20.0 * np.exp(-0.2 * np.sqrt(np.sum(z**2) / n))
        - np.exp(np.sum(np.cos(2.0 * np.pi * z)) / n)
        + 20.0
        + np.e
    )


@dataclass(frozen=True)
class CecFunction:
    base: Callable[[np.ndarray], float]
    shrink: float = 1.0


CEC_FUNCTIONS: dict[int, CecFunction] = {
    1: CecFunction(storn_chebyshev),
    2: CecFunction(inverse_hilbert),
    3: CecFunction(lennard_jones),
    4: CecFunction(rastrigin, shrink=5.12 / 100.0),
    5: CecFunction(griewank, shrink=600.0 / 100.0),
    6: CecFunction(weierstrass, shrink=0.5 / 100.0),
    7: CecFunction(modified_schwefel, shrink=1000.0 / 100.0),
    8: CecFunction(expanded_schaffer_f6),
    9: CecFunction(happy_cat, shrink=5.0 / 100.0),
    10: CecFunction(ackley),
}


@dataclass(frozen=True)
class CecTransform:
    """Optional shift o and rotation M, applied as z = M((x - o) * shrink)."""

    shift: Optional[np.ndarray] = None
    rotation: Optional[np.ndarray] = None

    @classmethod
    def load(cls, index: int, dimension: int, data_dir: Optional[Path], rotate: bool) -> "CecTransform":
        """
        Reads shift_data_<index>.txt (first `dimension` values) and, when rotate is
        set, M_<index>_D<dimension>.txt (row-major, whitespace separated).
        """
        if data_dir is None:
            if rotate:
                raise CecDataError(f"Rotation requested for CEC{index:02d} but no CEC data directory is set")
            return cls()
        data_dir = Path(data_dir)
        shift_path = data_dir / f"shift_data_{index}.txt"
        shift = None
        if shift_path.exists():
            shift = np.loadtxt(shift_path).ravel()[:dimension]
        rotation = None
        if rotate:
            rotation_path = data_dir / f"M_{index}_D{dimension}.txt"
            if not rotation_path.exists():
                raise CecDataError(f"Rotation file {rotation_path} not found")
            rotation = np.loadtxt(rotation_path).ravel()[: dimension * dimension]
            rotation = rotation.reshape(dimension, dimension)
        return cls(shift=shift, rotation=rotation)

    def apply(self, x: np.ndarray, shrink: float) -> np.ndarray:
        z = x - self.shift if self.shift is not None else x
        z = z * shrink
        if self.rotation is not None:
            z = self.rotation @ z
        return z


IDENTITY = CecTransform()


def evaluate_cec(index: int, x: np.ndarray, transform: CecTransform = IDENTITY) -> float:
    function = CEC_FUNCTIONS[index]
    return function.base(transform.apply(x, function.shrink)) + BIAS
