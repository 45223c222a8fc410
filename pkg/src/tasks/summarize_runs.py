import pandas as pd

RUN_COLUMNS = ["problem", "algorithm", "run", "seed", "best_cost", "elapsed_s", "xpl", "xpt"]
SUMMARY_COLUMNS = ["problem", "algorithm", "mean", "std", "elapsed_s"]


def runs_frame(records: list[dict]) -> pd.DataFrame:
    return pd.DataFrame.from_records(records, columns=RUN_COLUMNS)


def summary_table(runs: pd.DataFrame) -> pd.DataFrame:
    """Mean and sample std (n - 1) of the final best cost and mean wall-clock per (problem, algorithm)."""
    if runs.empty:
        raise ValueError("No runs to summarize")
    grouped = runs.groupby(["problem", "algorithm"], sort=False)
    summary = grouped.agg(
        mean=("best_cost", "mean"),
        std=("best_cost", lambda costs: costs.std(ddof=1) if len(costs) > 1 else 0.0),
        elapsed_s=("elapsed_s", "mean"),
    ).reset_index()
    return summary[SUMMARY_COLUMNS]
