from pathlib import Path
from typing import Optional

from prefect import flow

from src.tasks import emit_reports
from src.utils.io import read_csv
from src.utils.logger import get_logger


@flow(name="report-flow")
def report_flow(output_dir: Path, reference: Optional[str] = None) -> dict[str, Path]:
    """Re-emits every report from a previous experiment's runs.csv."""
    logger = get_logger()
    runs = read_csv(Path(output_dir) / "runs.csv")
    if reference is None:
        reference = str(runs["algorithm"].iloc[0])
    logger.info(f"Re-emitting reports for {len(runs)} runs in {output_dir} (reference={reference})")
    return emit_reports(runs, reference, output_dir)
