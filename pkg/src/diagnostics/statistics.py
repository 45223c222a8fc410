"""
Nonparametric comparison of algorithms: two-sided Wilcoxon rank-sum p-values
and Friedman-style average ranks (rank 1 = smallest mean, ties share the mean
of the covered ranks).
"""

from itertools import combinations
from typing import Mapping, Sequence

import numpy as np
import pandas as pd
from scipy.stats import norm, rankdata, tiecorrect

# Pooled sizes up to this value are enumerated exactly
EXACT_MAX_POOLED = 12


def _exact_rank_sum_p(ranks: np.ndarray, n: int, observed: float) -> float:
    pooled = ranks.size
    expected = n * (pooled + 1) / 2.0
    combos = np.array(list(combinations(range(pooled), n)), dtype=int)
    sums = ranks[combos].sum(axis=1)
    deviation = abs(observed - expected)
    extreme = np.abs(sums - expected) >= deviation - 1e-9
    return float(np.count_nonzero(extreme) / len(sums))


def _normal_rank_sum_p(ranks: np.ndarray, n: int, m: int, observed: float) -> float:
    tie_factor = tiecorrect(ranks)
    if tie_factor == 0:
        # every value identical
        return 1.0
    u = observed - n * (n + 1) / 2.0
    mean_u = n * m / 2.0
    sd = np.sqrt(tie_factor * n * m * (n + m + 1) / 12.0)
    z = max(abs(u - mean_u) - 0.5, 0.0) / sd
    return float(min(1.0, 2.0 * norm.sf(z)))


def wilcoxon_rank_sum(a: Sequence[float], b: Sequence[float]) -> float:
    """Two-sided rank-sum p-value; exact below EXACT_MAX_POOLED, else tie- and continuity-corrected normal."""
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    if a.size == 0 or b.size == 0:
        raise ValueError("Both samples must be non-empty")
    ranks = rankdata(np.concatenate([a, b]), method="average")
    observed = float(ranks[: a.size].sum())
    if a.size + b.size <= EXACT_MAX_POOLED:
        return _exact_rank_sum_p(ranks, a.size, observed)
    return _normal_rank_sum_p(ranks, a.size, b.size, observed)


def friedman_ranks(means: pd.DataFrame | np.ndarray) -> tuple[pd.DataFrame, pd.Series]:
    """Per-problem ranks (rows = problems, columns = algorithms) and their column means."""
    if not isinstance(means, pd.DataFrame):
        means = pd.DataFrame(np.atleast_2d(means))
    if means.shape[0] < 1 or means.shape[1] < 1:
        raise ValueError(f"Need at least one problem and one algorithm, got shape {means.shape}")
    ranks = means.rank(axis=1, method="average", ascending=True)
    return ranks, ranks.mean(axis=0)


def group_rankings(
    ranks: pd.DataFrame, groups: Mapping[str, str]
) -> tuple[pd.DataFrame, pd.DataFrame]:
    """Rank subtotals and averages per problem group, plus a 'total' row."""
    labels = ranks.index.map(lambda problem: groups.get(problem, "other"))
    grouped = ranks.groupby(labels, sort=False)
    subtotals = grouped.sum()
    averages = grouped.mean()
    subtotals.loc["total"] = ranks.sum(axis=0)
    averages.loc["total"] = ranks.mean(axis=0)
    return subtotals, averages
