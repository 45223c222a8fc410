"""
Report files written after every run has finished:

    summary.csv         problem, algorithm, mean, std, elapsed_s
    pvalues.csv         rank-sum p-value of the reference algorithm against each other algorithm, per problem
    ranks.csv           per-problem ranks of the mean final cost, last row 'average'
    ranks_by_group.csv  rank subtotals and averages per problem group
    balance.csv         mean exploration/exploitation percentages per problem and algorithm
    runs.csv            one row per run, enough to re-emit everything above
"""

from pathlib import Path

import pandas as pd
from prefect import task
from prefect.cache_policies import NO_CACHE

from src.benchmarks import problem_group
from src.diagnostics import friedman_ranks, group_rankings, wilcoxon_rank_sum
from src.utils.io import ensure_output_dir, write_csv
from src.utils.logger import get_logger

from .summarize_runs import RUN_COLUMNS, summary_table

AVERAGE_ROW = "average"


def _mean_table(summary: pd.DataFrame) -> pd.DataFrame:
    table = summary.pivot(index="problem", columns="algorithm", values="mean")
    table = table.reindex(index=summary["problem"].unique(), columns=summary["algorithm"].unique())
    table.columns.name = None
    return table


def pvalue_table(runs: pd.DataFrame, reference: str) -> pd.DataFrame:
    algorithms = [name for name in runs["algorithm"].unique() if name != reference]
    rows = []
    for problem, group in runs.groupby("problem", sort=False):
        reference_costs = group.loc[group["algorithm"] == reference, "best_cost"]
        row = {"problem": problem}
        for algorithm in algorithms:
            costs = group.loc[group["algorithm"] == algorithm, "best_cost"]
            if reference_costs.empty or costs.empty:
                row[algorithm] = float("nan")
            else:
                row[algorithm] = wilcoxon_rank_sum(reference_costs, costs)
        rows.append(row)
    return pd.DataFrame(rows, columns=["problem", *algorithms])


def rank_table(summary: pd.DataFrame) -> tuple[pd.DataFrame, pd.DataFrame]:
    """Per-problem ranks with the 'average' row appended, and the per-group subtotals/averages."""
    ranks, average = friedman_ranks(_mean_table(summary))
    groups = {problem: problem_group(problem) for problem in ranks.index}
    subtotals, averages = group_rankings(ranks, groups)
    by_group = pd.concat(
        [subtotals.assign(statistic="subtotal"), averages.assign(statistic="average")]
    )
    by_group.index.name = "group"
    by_group = by_group.reset_index()
    by_group = by_group[["group", "statistic", *ranks.columns]]

    ranks = pd.concat([ranks, average.to_frame(AVERAGE_ROW).T])
    ranks.index.name = "problem"
    return ranks.reset_index(), by_group


def balance_table(runs: pd.DataFrame) -> pd.DataFrame:
    recorded = runs.dropna(subset=["xpl", "xpt"])
    return (
        recorded.groupby(["problem", "algorithm"], sort=False)[["xpl", "xpt"]]
        .mean()
        .reset_index()
    )


@task(name="emit_reports", cache_policy=NO_CACHE)
def emit_reports(runs: pd.DataFrame, reference: str, output_dir: Path) -> dict[str, Path]:
    logger = get_logger()
    if runs.empty:
        raise ValueError("No runs to report")
    output_dir = ensure_output_dir(output_dir)
    runs = runs[RUN_COLUMNS]

    summary = summary_table(runs)
    ranks, by_group = rank_table(summary)
    paths = {
        "summary": write_csv(summary, output_dir / "summary.csv"),
        "pvalues": write_csv(pvalue_table(runs, reference), output_dir / "pvalues.csv"),
        "ranks": write_csv(ranks, output_dir / "ranks.csv"),
        "ranks_by_group": write_csv(by_group, output_dir / "ranks_by_group.csv"),
        "balance": write_csv(balance_table(runs), output_dir / "balance.csv"),
        "runs": write_csv(runs, output_dir / "runs.csv"),
    }
    logger.info(f"Wrote {len(paths)} reports to {output_dir}")
    return paths
