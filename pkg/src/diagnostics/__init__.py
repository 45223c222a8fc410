from .diversity import (
    DiversitySnapshot,
    PhaseBalance,
    average_phase_balance,
    dimension_diversity,
    phase_balance,
    phase_percentages,
)
from .statistics import friedman_ranks, group_rankings, wilcoxon_rank_sum

__all__ = [
    "DiversitySnapshot",
    "PhaseBalance",
    "average_phase_balance",
    "dimension_diversity",
    "friedman_ranks",
    "group_rankings",
    "phase_balance",
    "phase_percentages",
    "wilcoxon_rank_sum",
]
