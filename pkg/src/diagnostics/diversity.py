"""
Dimension-wise population diversity and the exploration/exploitation split.

Div_j is the mean absolute distance of every agent to the median of dimension j,
Div the mean over dimensions. XPL% = 100 * Div / Div_max and
XPT% = 100 * |Div - Div_max| / Div_max, with Div_max the largest Div of the run.
"""

from dataclasses import dataclass
from typing import Iterable

import numpy as np


@dataclass(frozen=True)
class DiversitySnapshot:
    div_per_dim: np.ndarray
    div: float
    iteration: int


@dataclass(frozen=True)
class PhaseBalance:
    xpl_percent: float
    xpt_percent: float


def dimension_diversity(positions: np.ndarray, iteration: int = 0) -> DiversitySnapshot:
    positions = np.atleast_2d(np.asarray(positions, dtype=float))
    if positions.shape[0] < 1:
        raise ValueError("Diversity needs at least one agent")
    # np.median averages the two central values for even counts
    median = np.median(positions, axis=0)
    div_per_dim = np.mean(np.abs(median - positions), axis=0)
    return DiversitySnapshot(
        div_per_dim=div_per_dim, div=float(np.mean(div_per_dim)), iteration=iteration
    )


def phase_percentages(div_trace: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    trace = np.asarray(div_trace, dtype=float)
    if trace.size == 0:
        raise ValueError("Diversity trace is empty")
    div_max = float(np.max(trace))
    if div_max <= 0:
        # collapsed from the start: no exploration at all
        return np.zeros_like(trace), np.full_like(trace, 100.0)
    xpl = 100.0 * trace / div_max
    xpt = 100.0 * np.abs(trace - div_max) / div_max
    return xpl, xpt


def phase_balance(div_trace: np.ndarray) -> PhaseBalance:
    xpl, xpt = phase_percentages(div_trace)
    return PhaseBalance(xpl_percent=float(np.mean(xpl)), xpt_percent=float(np.mean(xpt)))


def average_phase_balance(div_traces: Iterable[np.ndarray]) -> PhaseBalance:
    balances = [phase_balance(trace) for trace in div_traces]
    if not balances:
        raise ValueError("No diversity traces to average")
    return PhaseBalance(
        xpl_percent=float(np.mean([b.xpl_percent for b in balances])),
        xpt_percent=float(np.mean([b.xpt_percent for b in balances])),
    )
