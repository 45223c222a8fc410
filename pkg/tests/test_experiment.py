import pickle
from pathlib import Path

import pandas as pd
import pytest
from prefect.task_runners import ThreadPoolTaskRunner
from pydantic import ValidationError

from src.cli import EXIT_CONFIG, EXIT_OK, EXIT_RUN_FAILED, build_parser, main
from src.config import ExperimentConfig, ProblemRef, derive_seed, load_experiment_config, resolve_problem
from src.core import Algorithm, ConfigurationError, RunFailedError
from src.flows.experiment import experiment_flow, run_experiment
from src.flows.report import report_flow
from src.utils.io import read_csv

QAP5 = "5\n" + "\n".join(
    [
        "0 3 0 2 1", "3 0 1 0 4", "0 1 0 5 2", "2 0 5 0 1", "1 4 2 1 0",
        "0 1 2 3 4", "1 0 1 2 3", "2 1 0 1 2", "3 2 1 0 1", "4 3 2 1 0",
    ]
)  # fmt: skip


@pytest.fixture
def tiny_qap(tmp_path) -> Path:
    path = tmp_path / "tiny5.dat"
    path.write_text(QAP5)
    return path


def _config(output_dir: Path, **overrides) -> ExperimentConfig:
    data = {
        "problems": ["F16"],
        "algorithms": [{"name": "DCSO"}],
        "runs": 3,
        "population_size": 6,
        "max_iter": 12,
        "base_seed": 42,
        "output_dir": output_dir,
        "max_workers": 2,
    }
    data.update(overrides)
    return ExperimentConfig.model_validate(data)


def test_paired_seeds_ignore_the_algorithm():
    assert derive_seed(0, "F1", "DCSO", 1, paired=True) == derive_seed(0, "F1", "CSO", 1, paired=True)
    assert derive_seed(0, "F1", "DCSO", 1) != derive_seed(0, "F1", "CSO", 1)


def test_derived_seeds_are_distinct_and_keyed_by_base_seed():
    seeds = {
        derive_seed(7, problem, algorithm, run)
        for problem in ("F1", "F9", "CEC04", "ste36a")
        for algorithm in ("DCSO", "CSO", "DE")
        for run in range(1, 31)
    }
    assert len(seeds) == 4 * 3 * 30
    assert all(0 <= seed < 2**64 for seed in seeds)
    assert derive_seed(7, "F1", "DE", 3) ^ derive_seed(0, "F1", "DE", 3) == 7


def test_config_defaults(clean_settings):
    config = ExperimentConfig.model_validate({"problems": ["F1"], "algorithms": [{"name": "dcso"}]})
    assert (config.runs, config.population_size, config.max_iter) == (30, 30, 500)
    assert config.reference_algorithm == Algorithm.DCSO
    assert config.output_dir == clean_settings.output_dir


@pytest.mark.parametrize(
    "overrides",
    [
        {"algorithms": [{"name": "DCSO"}, {"name": "dcso"}]},
        {"problems": ["F1", "F1"]},
        {"problems": ["F1", "f1"]},
        {"problems": ["qaplib:ste36a", "data/other/ste36a.dat"]},
        {"algorithms": [{"name": "DCSO"}, {"name": "DE"}], "population_size": 3},
        {"algorithms": [{"name": "DCSO"}], "reference_algorithm": "DE"},
        {"algorithms": [{"name": "CSO", "params": {"mr": 2.0}}]},
        {"algorithms": [{"name": "PSO"}]},
        {"runs": 0},
        {"problems": []},
    ],
)
def test_config_validation_errors(tmp_path, overrides):
    with pytest.raises(ValidationError):
        _config(tmp_path, **overrides)


def test_small_populations_are_fine_without_de(tmp_path):
    assert _config(tmp_path, algorithms=[{"name": "DCSO"}, {"name": "CSO"}], population_size=3)
    assert _config(tmp_path, algorithms=[{"name": "DE"}], population_size=4)


def test_small_de_population_fails_before_any_run(tmp_path):
    path = tmp_path / "experiment.yaml"
    path.write_text("problems: [F1]\nalgorithms: [{name: DCSO}, {name: DE}]\npopulation_size: 3\n")
    with pytest.raises(ValidationError, match="DE needs population_size"):
        load_experiment_config(path, {"output_dir": tmp_path})
    assert not (tmp_path / "runs.csv").exists()


def test_diversity_defaults_to_benchmarks_only(tmp_path):
    config = _config(tmp_path)
    assert config.records_diversity(ProblemRef(name="F1"))
    assert not config.records_diversity(ProblemRef(name="tiny5", path=Path("tiny5.dat")))
    assert _config(tmp_path, record_diversity=True).records_diversity(
        ProblemRef(name="tiny5", path=Path("tiny5.dat"))
    )


def test_resolve_problem_references(tmp_path, tiny_qap):
    assert resolve_problem("f1").name == "F1"
    by_prefix = resolve_problem("qaplib:tiny5", qaplib_dir=tmp_path)
    assert by_prefix.is_qap and by_prefix.name == "tiny5"
    assert resolve_problem(str(tiny_qap)).path == tiny_qap
    with pytest.raises(ConfigurationError):
        resolve_problem("qaplib:missing", qaplib_dir=tmp_path)
    with pytest.raises(ConfigurationError):
        resolve_problem("F99")


def test_load_applies_overrides(tmp_path):
    path = tmp_path / "experiment.yaml"
    path.write_text("problems: [F1, F9]\nalgorithms:\n  - name: DCSO\n  - name: DE\nruns: 5\n")
    config = load_experiment_config(path, {"runs": 2, "base_seed": None, "output_dir": tmp_path})
    assert config.runs == 2
    assert config.problems == ["F1", "F9"]
    assert [entry.name for entry in config.algorithms] == [Algorithm.DCSO, Algorithm.DE]


@pytest.mark.parametrize("content", ["problems: [F1\n", "- F1\n- F9\n"])
def test_load_rejects_malformed_files(tmp_path, content):
    path = tmp_path / "broken.yaml"
    path.write_text(content)
    with pytest.raises(ConfigurationError):
        load_experiment_config(path)
    with pytest.raises(ConfigurationError):
        load_experiment_config(tmp_path / "absent.yaml")


def test_unknown_problem_fails_before_any_run(tmp_path):
    path = tmp_path / "experiment.yaml"
    path.write_text("problems: [qaplib:ste99]\nalgorithms: [{name: DCSO}]\n")
    with pytest.raises(ConfigurationError):
        load_experiment_config(path, {"output_dir": tmp_path})


def test_run_failure_survives_pickling():
    error = pickle.loads(pickle.dumps(RunFailedError("F1", "DE", 3, ValueError("boom"))))
    assert (error.problem, error.algorithm, error.run) == ("F1", "DE", 3)
    assert "ValueError: boom" in str(error)


def test_smoke_experiment_writes_traces_and_reports(prefect_harness, tmp_path):
    output_dir = tmp_path / "out"
    summary = run_experiment(_config(output_dir), show_progress=False)

    assert summary[["problem", "algorithm"]].values.tolist() == [["F16", "DCSO"]]
    for run in (1, 2, 3):
        convergence = read_csv(output_dir / "convergence" / "F16" / "DCSO" / f"run{run}.csv")
        assert convergence.columns.tolist() == ["iteration", "best_so_far"]
        assert convergence["iteration"].tolist() == list(range(1, 13))
        diversity = read_csv(output_dir / "diversity" / "F16" / "DCSO" / f"run{run}.csv")
        assert diversity.columns.tolist() == ["iteration", "diversity", "xpl", "xpt"]

    assert read_csv(output_dir / "summary.csv").columns.tolist() == [
        "problem", "algorithm", "mean", "std", "elapsed_s",
    ]  # fmt: skip
    runs = read_csv(output_dir / "runs.csv")
    assert runs["run"].tolist() == [1, 2, 3]
    ranks = read_csv(output_dir / "ranks.csv")
    assert ranks["problem"].tolist() == ["F16", "average"]


def test_experiments_are_reproducible(prefect_harness, tmp_path):
    first = tmp_path / "first"
    second = tmp_path / "second"
    run_experiment(_config(first, algorithms=[{"name": "DCSO"}, {"name": "CSO"}]), show_progress=False)
    run_experiment(_config(second, algorithms=[{"name": "DCSO"}, {"name": "CSO"}]), show_progress=False)

    columns = ["problem", "algorithm", "run", "seed", "best_cost", "xpl", "xpt"]
    pd.testing.assert_frame_equal(
        read_csv(first / "runs.csv")[columns], read_csv(second / "runs.csv")[columns]
    )
    trace = Path("convergence") / "F16" / "CSO" / "run2.csv"
    assert (first / trace).read_text() == (second / trace).read_text()


def test_qap_experiment_with_two_algorithms(prefect_harness, tmp_path, tiny_qap):
    output_dir = tmp_path / "qap"
    config = _config(
        output_dir, problems=[str(tiny_qap)], algorithms=[{"name": "DCSO"}, {"name": "DE"}]
    )
    summary = run_experiment(config, show_progress=False)

    assert summary["algorithm"].tolist() == ["DCSO", "DE"]
    assert not (output_dir / "diversity").exists()
    pvalues = read_csv(output_dir / "pvalues.csv")
    assert pvalues.columns.tolist() == ["problem", "DE"]
    assert 0.0 < pvalues.loc[0, "DE"] <= 1.0
    assert read_csv(output_dir / "runs.csv")["xpl"].isna().all()


def test_experiment_flow_sizes_its_runner_from_the_config(prefect_harness, tmp_path, monkeypatch):
    sizes = []
    runner_class = ThreadPoolTaskRunner

    def recording_runner(max_workers=None, **kwargs):
        sizes.append(max_workers)
        return runner_class(max_workers=max_workers, **kwargs)

    monkeypatch.setattr("src.flows.experiment.ThreadPoolTaskRunner", recording_runner)
    experiment_flow(_config(tmp_path / "out", max_workers=3), show_progress=False)
    assert sizes == [3]
    assert (tmp_path / "out" / "summary.csv").is_file()


def test_report_is_idempotent(prefect_harness, tmp_path):
    output_dir = tmp_path / "out"
    run_experiment(_config(output_dir, algorithms=[{"name": "DCSO"}, {"name": "DE"}]), show_progress=False)
    names = ["summary.csv", "pvalues.csv", "ranks.csv", "ranks_by_group.csv", "balance.csv"]
    before = {name: (output_dir / name).read_text() for name in names}

    report_flow(output_dir, "DCSO")
    assert {name: (output_dir / name).read_text() for name in names} == before


def test_cli_lists_problems(capsys):
    assert main(["list-problems"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "F23" in out and "CEC10" in out


def test_cli_config_errors_exit_with_config_code(tmp_path, capsys):
    assert main(["--quiet", "run", "--config", str(tmp_path / "absent.yaml")]) == EXIT_CONFIG
    path = tmp_path / "bad.yaml"
    path.write_text("problems: [F1]\nalgorithms: [{name: PSO}]\n")
    assert main(["--quiet", "run", "--config", str(path)]) == EXIT_CONFIG
    assert "error" in capsys.readouterr().err


def test_cli_report_without_runs_fails(prefect_harness, tmp_path):
    assert main(["--quiet", "report", "--output-dir", str(tmp_path / "empty")]) == EXIT_RUN_FAILED


def test_cli_run_end_to_end(prefect_harness, tmp_path):
    path = tmp_path / "experiment.yaml"
    path.write_text(
        "problems: [F16]\nalgorithms: [{name: DCSO}]\nruns: 2\npopulation_size: 5\nmax_iter: 5\n"
    )
    output_dir = tmp_path / "cli"
    assert main(["--quiet", "run", "--config", str(path), "--output-dir", str(output_dir), "--seed", "3"]) == EXIT_OK
    assert (output_dir / "summary.csv").is_file()


def test_cli_accepts_quiet_after_the_subcommand(tmp_path):
    assert main(["run", "--quiet", "--config", str(tmp_path / "absent.yaml")]) == EXIT_CONFIG
    args = build_parser().parse_args(["report", "--quiet"])
    assert args.quiet
    assert not build_parser().parse_args(["list-problems"]).quiet


def test_cli_paired_seeds_share_seeds_across_algorithms(prefect_harness, tmp_path):
    path = tmp_path / "experiment.yaml"
    path.write_text(
        "problems: [F16]\nalgorithms: [{name: DCSO}, {name: CSO}]\nruns: 2\npopulation_size: 5\nmax_iter: 5\n"
    )
    output_dir = tmp_path / "paired"
    argv = ["run", "--quiet", "--config", str(path), "--output-dir", str(output_dir), "--paired-seeds"]
    assert main(argv) == EXIT_OK

    runs = read_csv(output_dir / "runs.csv")
    seeds = runs.pivot(index="run", columns="algorithm", values="seed")
    assert seeds["DCSO"].tolist() == seeds["CSO"].tolist()
