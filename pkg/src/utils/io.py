"""CSV helpers for run artifacts. Floats are written in their shortest round-trip form."""

from pathlib import Path

import pandas as pd

from src.core import ConfigurationError

CONVERGENCE_DIR = "convergence"
DIVERSITY_DIR = "diversity"


def ensure_output_dir(output_dir: Path) -> Path:
    output_dir = Path(output_dir)
    try:
        output_dir.mkdir(parents=True, exist_ok=True)
        marker = output_dir / ".write-check"
        marker.touch()
        marker.unlink()
    except OSError as e:
        raise ConfigurationError(f"Output directory {output_dir} is not writable: {e}") from None
    return output_dir


def write_csv(frame: pd.DataFrame, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, lineterminator="\n")
    return path


def read_csv(path: Path) -> pd.DataFrame:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"Expected artifact {path} is missing")
    return pd.read_csv(path, float_precision="round_trip")


def trace_path(output_dir: Path, kind: str, problem: str, algorithm: str, run: int) -> Path:
    return Path(output_dir) / kind / problem / algorithm / f"run{run}.csv"
