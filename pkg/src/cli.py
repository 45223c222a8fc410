"""
Command line entry point.

    python -m src.cli run --config configs/smoke.yaml
    python -m src.cli report --output-dir results/smoke
    python -m src.cli list-problems
"""

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

import pandas as pd
from pydantic import ValidationError

from src.benchmarks import CecDataError, list_benchmarks
from src.config import get_settings, list_qaplib_instances, load_experiment_config
from src.core import ConfigurationError, RunFailedError
from src.qap import QaplibFormatError
from src.utils.logger import set_quiet

EXIT_OK = 0
EXIT_RUN_FAILED = 1
EXIT_CONFIG = 2


def _validation_message(error: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(part) for part in item['loc']) or 'config'}: {item['msg']}"
        for item in error.errors()
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cat-swarm-lab",
        description="Run and report DCSO / CSO / DE experiments on benchmark functions and QAPLIB instances.",
    )
    parser.add_argument("--quiet", action="store_true", help="Only warnings and errors, no progress bars")
    # also accepted after the subcommand; SUPPRESS keeps it from resetting the top-level flag
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", parents=[common], help="Execute an experiment and write every report")
    run.add_argument("--config", type=Path, help="Experiment YAML file")
    run.add_argument("--output-dir", type=Path, help="Overrides output_dir")
    run.add_argument("--seed", type=int, help="Overrides base_seed")
    run.add_argument("--runs", type=int, help="Overrides runs")
    run.add_argument("--problems", nargs="+", help="Overrides problems (e.g. F1 CEC04 qaplib:ste36a)")
    run.add_argument("--algorithms", nargs="+", help="Overrides algorithms, default parameters")
    run.add_argument(
        "--paired-seeds",
        action=argparse.BooleanOptionalAction,
        help="Give every algorithm the same seed for a given (problem, run)",
    )

    report = commands.add_parser("report", parents=[common], help="Re-emit the reports from a previous run's runs.csv")
    report.add_argument("--output-dir", type=Path, help="Experiment output directory")
    report.add_argument("--config", type=Path, help="Experiment YAML file, for its output_dir and reference_algorithm")
    report.add_argument("--reference", help="Algorithm the p-values are computed against")

    commands.add_parser("list-problems", parents=[common], help="List benchmark ids and the QAPLIB instances found")
    return parser


def _run(args: argparse.Namespace) -> int:
    from src.flows.experiment import run_experiment

    overrides = {
        "output_dir": args.output_dir,
        "base_seed": args.seed,
        "runs": args.runs,
        "problems": args.problems,
        "algorithms": [{"name": name} for name in args.algorithms] if args.algorithms else None,
        "paired_seeds": args.paired_seeds,
    }
    config = load_experiment_config(args.config, overrides)
    summary = run_experiment(config, show_progress=not args.quiet)
    if not args.quiet:
        print(summary.to_string(index=False))
    return EXIT_OK


def _report(args: argparse.Namespace) -> int:
    from src.flows.report import report_flow

    output_dir, reference = args.output_dir, args.reference
    if args.config is not None:
        config = load_experiment_config(args.config, {"output_dir": output_dir})
        output_dir = config.output_dir
        reference = reference or config.reference_algorithm.value
    if output_dir is None:
        output_dir = get_settings().output_dir
    paths = report_flow(Path(output_dir), reference)
    if not args.quiet:
        for name, path in paths.items():
            print(f"{name}: {path}")
    return EXIT_OK


def _list_problems(args: argparse.Namespace) -> int:
    table = pd.DataFrame(
        [
            {
                "problem": meta.id.name,
                "dimension": meta.dimension,
                "range": f"[{meta.lower:g}, {meta.upper:g}]",
                "f_min": meta.f_min,
            }
            for meta in list_benchmarks()
        ]
    )
    print(table.to_string(index=False))
    instances = list_qaplib_instances()
    if instances:
        print()
        print("QAPLIB instances:")
        for path in instances:
            print(f"  qaplib:{path.stem}  ({path})")
    else:
        print(f"\nNo QAPLIB instances under {get_settings().qaplib_dir}")
    return EXIT_OK


COMMANDS = {"run": _run, "report": _report, "list-problems": _list_problems}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    set_quiet(args.quiet)
    try:
        return COMMANDS[args.command](args)
    except ValidationError as e:
        print(f"error: invalid configuration: {_validation_message(e)}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConfigurationError, QaplibFormatError, CecDataError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except (RunFailedError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RUN_FAILED


if __name__ == "__main__":
    sys.exit(main())
