from .emit_reports import emit_reports
from .execute_run import execute_run
from .summarize_runs import RUN_COLUMNS, SUMMARY_COLUMNS, runs_frame, summary_table

__all__ = [
    "RUN_COLUMNS",
    "SUMMARY_COLUMNS",
    "emit_reports",
    "execute_run",
    "runs_frame",
    "summary_table",
]
