"""
QAP cost, random-key decoding and the continuous adapter.

Permutations are 1-based: p[i] is the location assigned to element i + 1.
"""

import numpy as np
from scipy.stats import rankdata

from src.core import Bounds, ObjectiveSpec

from .qaplib import QapInstance


def validate_permutation(p, n: int) -> np.ndarray:
    p = np.asarray(p)
    if p.shape != (n,) or not np.array_equal(np.sort(p), np.arange(1, n + 1)):
        raise ValueError(f"Not a permutation of 1..{n}: {p.tolist()}")
    return p.astype(int)


def qap_cost(instance: QapInstance, p) -> float:
    """sum_i sum_k flow[i, k] * dist[p(i), p(k)]"""
    index = validate_permutation(p, instance.n) - 1
    return float(np.sum(instance.flow * instance.dist[np.ix_(index, index)]))


def assignment_matrix(p) -> np.ndarray:
    """x[i, j] = 1 when element i sits at location j."""
    p = np.asarray(p, dtype=int)
    x = np.zeros((p.size, p.size))
    x[np.arange(p.size), p - 1] = 1.0
    return x


def qap_cost_indicator(instance: QapInstance, p) -> float:
    """The four-index form sum a_ik d_jl x_ij x_kl, evaluated through the assignment matrix."""
    x = assignment_matrix(validate_permutation(p, instance.n))
    return float(np.einsum("ik,jl,ij,kl->", instance.flow, instance.dist, x, x))


def decode_random_keys(position: np.ndarray) -> np.ndarray:
    """Ascending rank of each component; equal values are ranked by index."""
    return rankdata(np.asarray(position, dtype=float), method="ordinal").astype(int)


def qap_objective(instance: QapInstance) -> ObjectiveSpec:
    def evaluate(x: np.ndarray) -> float:
        return qap_cost(instance, decode_random_keys(x))

    return ObjectiveSpec(
        name=instance.name,
        bounds=Bounds.box(0.0, 1.0, instance.n),
        evaluate=evaluate,
    )
