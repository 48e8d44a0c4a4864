# -*- coding: utf-8 -*-

import json
from unittest.mock import MagicMock, patch
import pandas as pd
import pytest
from nodegames.cli.command_line import main
from nodegames.experiments.ensemble_result import EnsembleResult, TrialRecord

TRIANGLE = "3 3\n0 1\n0 2\n1 2\n"
CYCLE_4 = "4 4\n0 1\n1 2\n2 3\n0 3\n"
PATH_4 = "4 3\n0 1\n1 2\n2 3\n"
COMPLETE_4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
SMALL_ENSEMBLE = "n = 50\nd = 4\nmatrix = 1,0;0,1\ntrials = 1\nbase_seed = 7\n"


@pytest.fixture(autouse=True)
def quiet_logging():
    with patch("nodegames.cli.command_line.configure_logging") as configure:
        yield configure


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_classify_hawk_dove(capsys):
    assert main(["classify", "--", "-2,2;0,1"]) == 0
    assert capsys.readouterr().out == "Minority λ=1/2 i*=0 ℓ=2 ℓ'=2 c=1/3\n"


def test_classify_majority_and_degenerate(capsys):
    assert main(["classify", "1,0;0,1"]) == 0
    assert main(["classify", "--", "-2,0;-3,-1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("Majority λ=1 ")
    assert lines[1] == "Degenerate dominant_row=0"


def test_classify_bad_literal(capsys):
    assert main(["classify", "1,0;0"]) == 1
    assert capsys.readouterr().err.startswith("nodegames: error:")


def test_help_and_usage_errors():
    with patch("sys.stdout"):
        assert main(["--help"]) == 0
    with patch("sys.stderr"):
        assert main([]) == 1
        assert main(["simulate", "--matrix", "1,0;0,1"]) == 1


def test_verbosity_is_passed_on(quiet_logging):
    with patch("sys.stdout"):
        main(["-vv", "classify", "1,0;0,1"])
    quiet_logging.assert_called_once_with(2)


def test_simulate_triangle(tmp_path, capsys):
    edges = write(tmp_path, "triangle.txt", TRIANGLE)
    assert main(["simulate", "--edges", edges, "--matrix", "1,0;0,1", "--state", "3:6"]) == 0
    lines = capsys.readouterr().out.splitlines()
    header = json.loads(lines[0][2:])
    assert header["state"] == "3:6"
    assert header["seed"] is None
    assert lines[1:5] == ["t,ones,zeros,eta", "0,2,1,1", "1,3,0,3", "2,3,0,3"]
    assert lines[-1] == "unanimous fixed(1) from t=1, period 1"


def test_simulate_four_cycle_alternates(tmp_path, capsys):
    edges = write(tmp_path, "c4.txt", CYCLE_4)
    assert main(["simulate", "--edges", edges, "--matrix", "1,0;0,1", "--state", "4:a"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "not unanimous, period 2"


def test_simulate_json_trace(tmp_path, capsys):
    edges = write(tmp_path, "triangle.txt", TRIANGLE)
    out = tmp_path / "trace.json"
    assert main(["simulate", "--edges", edges, "--matrix", "1,0;0,1", "--state", "3:6",
                 "--out", str(out), "--format", "json"]) == 0
    document = json.loads(out.read_text())
    assert document["trace"]["cycle"] == {"entry": 1, "period": 1}
    assert document["trace"]["states"]["0"] == "3:6"
    assert document["verdict"] == "unanimous fixed(1) from t=1, period 1"


def test_simulate_reads_json_graph(tmp_path, capsys):
    graph = write(tmp_path, "triangle.json", json.dumps({"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}))
    assert main(["simulate", "--json", graph, "--matrix", "1,0;0,1", "--state", "3:6"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "unanimous fixed(1) from t=1, period 1"


def test_simulate_needs_seed_when_random(tmp_path, capsys):
    edges = write(tmp_path, "triangle.txt", TRIANGLE)
    assert main(["simulate", "--edges", edges, "--matrix", "1,0;0,1"]) == 1
    assert main(["simulate", "--gnp", "10", "0.5", "--matrix", "1,0;0,1", "--state", "a:0"]) == 1
    assert "--seed" in capsys.readouterr().err


def test_simulate_is_reproducible(capsys):
    arguments = ["simulate", "--gnp", "60", "0.1", "--matrix", "1,0;0,1", "--seed", "9"]
    assert main(arguments) == 0
    first = capsys.readouterr().out
    assert main(arguments) == 0
    assert capsys.readouterr().out == first
    assert json.loads(first.splitlines()[0][2:])["seed"] == 9


def test_simulate_complete_graph(capsys):
    assert main(["simulate", "--gnp", "101", "1.0", "--matrix", "1,0;0,1", "--seed", "0x2a"]) == 0
    lines = capsys.readouterr().out.splitlines()
    # n is odd so eta_0 >= 1; on K_n a gap of at least 2 is unanimous at once
    eta_0 = int(lines[2].split(",")[3])
    if eta_0 >= 2:
        assert lines[-1].startswith("unanimous fixed(") and lines[-1].endswith("from t=1, period 1")


def test_simulate_runtime_errors(tmp_path, capsys):
    edges = write(tmp_path, "triangle.txt", TRIANGLE)
    assert main(["simulate", "--edges", str(tmp_path / "missing.txt"), "--matrix", "1,0;0,1",
                 "--state", "3:6"]) == 2
    assert main(["simulate", "--edges", edges, "--matrix", "1,0;0,1", "--state", "4:6"]) == 2
    assert main(["simulate", "--edges", edges, "--matrix", "1,0;0,1", "--state", "3:zz"]) == 1
    assert capsys.readouterr().err.count("nodegames: error:") == 3


def test_census_stars_on_path(tmp_path, capsys):
    edges = write(tmp_path, "path.txt", PATH_4)
    assert main(["census", "--edges", edges, "--kind", "stars", "1", "1", "--format", "json"]) == 0
    output = capsys.readouterr().out
    document = json.loads(output[output.index("\n") + 1:])
    assert document["census"]["count"] == 2
    assert sorted(star["center"] for star in document["census"]["stars"]) == [1, 2]


def test_census_stars_csv(tmp_path):
    edges = write(tmp_path, "path.txt", PATH_4)
    out = tmp_path / "stars.csv"
    with patch("sys.stdout"):
        assert main(["census", "--edges", edges, "--kind", "stars", "1", "1", "--out", str(out)]) == 0
    table = pd.read_csv(out)
    assert list(table.columns) == ["center", "leaves", "connectors"]
    assert len(table) == 2


def test_census_lowdeg_on_complete_graph(tmp_path, capsys):
    edges = write(tmp_path, "k4.txt", COMPLETE_4)
    assert main(["census", "--edges", edges, "--kind", "lowdeg", "2", "1", "--format", "json"]) == 0
    output = capsys.readouterr().out
    report = json.loads(output[output.index("\n") + 1:])["census"]
    assert report["low_count"] == 0
    assert report["within_bounds"] is True


def test_census_enc_with_unanimous_state(tmp_path, capsys):
    edges = write(tmp_path, "edge.txt", "3 1\n0 1\n")
    assert main(["census", "--edges", edges, "--kind", "enc", "--state", "3:7", "--format", "json"]) == 0
    output = capsys.readouterr().out
    report = json.loads(output[output.index("\n") + 1:])["census"]
    assert report == {"enc": [2], "eq": [0, 0, 0]}


def test_census_balanced_uses_mean_degree(tmp_path, capsys):
    edges = write(tmp_path, "k4.txt", COMPLETE_4)
    with patch("nodegames.cli.command_line.balanced_census") as balanced:
        balanced.return_value = pd.Series([], dtype="int64").to_numpy()
        assert main(["census", "--edges", edges, "--kind", "balanced", "0.5", "--state", "4:f"]) == 0
    assert balanced.call_args[0][2:] == (0.5, 3.0)


def test_census_kind_arguments(tmp_path, capsys):
    edges = write(tmp_path, "path.txt", PATH_4)
    assert main(["census", "--edges", edges, "--kind", "stars", "1"]) == 1
    assert main(["census", "--edges", edges, "--kind", "stars", "one", "1"]) == 1
    assert main(["census", "--edges", edges, "--kind", "triangles"]) == 1
    assert main(["census", "--edges", edges, "--kind", "good", "0.1"]) == 1


def test_ensemble_single_trial(tmp_path, capsys):
    config = write(tmp_path, "one.cfg", SMALL_ENSEMBLE)
    out = tmp_path / "run.csv"
    assert main(["ensemble", config, "--out", str(out)]) == 0
    rows = out.read_text().splitlines()
    assert len(rows) == 2
    aggregate = json.loads((tmp_path / "run.aggregate.json").read_text())
    assert aggregate["aggregate"]["trials"] == 1
    assert aggregate["config"]["base_seed"] == 7
    assert json.loads(capsys.readouterr().out.splitlines()[0][2:]) == aggregate["config"]


def test_ensemble_is_reproducible_from_its_header(tmp_path, capsys):
    config = write(tmp_path, "one.cfg", SMALL_ENSEMBLE)
    assert main(["ensemble", config, "--seed", "123"]) == 0
    first = capsys.readouterr().out
    assert json.loads(first.splitlines()[0][2:])["base_seed"] == 123
    assert main(["ensemble", config, "--seed", "123", "--workers", "1"]) == 0
    assert capsys.readouterr().out == first


@patch("nodegames.cli.command_line.run_ensemble")
def test_ensemble_overrides(run_ensemble, tmp_path, capsys):
    run_ensemble.return_value = EnsembleResult(
        {"n": 50}, [TrialRecord(0, 5, 1, "fixed", 1, (2, 50), 1, strategy=1)])
    config = write(tmp_path, "one.cfg", SMALL_ENSEMBLE)
    assert main(["ensemble", config, "--seed", "99", "--workers", "3", "--progress", "--format", "json"]) == 0
    used = run_ensemble.call_args[0][0]
    assert used.get_base_seed() == 99
    assert used.get_workers() == 3
    assert run_ensemble.call_args[1] == {"progress": True}
    output = capsys.readouterr().out
    document = json.loads(output[output.index("\n") + 1:])
    assert document["trials"][0]["rounds_to_unanimity"] == 1
    assert document["aggregate"]["u_hat"] == 1.0


def test_ensemble_config_errors(tmp_path, capsys):
    config = write(tmp_path, "bad.cfg", "n = 0\nd = 4\nmatrix = 1,0;0,1\ntrials = 1\nbase_seed = 7\n")
    assert main(["ensemble", config]) == 2
    assert "line 1" in capsys.readouterr().err
    assert main(["ensemble", str(tmp_path / "missing.cfg")]) == 2


@patch("nodegames.cli.command_line.threshold_sweep")
def test_sweep_writes_table(threshold_sweep, tmp_path, capsys):
    threshold_sweep.return_value = pd.DataFrame({
        "omega": [0.0, 4.0], "d": [5.0, 9.0], "p": [0.05, 0.09], "u_hat": [0.4, 0.9],
        "stderr": [0.1, 0.05], "conclusive": [10, 10], "unanimous": [4, 9]})
    config = write(tmp_path, "sweep.cfg", "n = 100\nmatrix = 1,0;0,2\ntrials = 10\nbase_seed = 1\n"
                                          "omega_grid = -4, 0\n")
    assert main(["sweep", config, "--omega", "0", "4"]) == 0
    assert threshold_sweep.call_args[0][0].get_omega_grid() == (0.0, 4.0)
    lines = capsys.readouterr().out.splitlines()
    assert json.loads(lines[0][2:])["omega_grid"] == [0.0, 4.0]
    assert lines[1] == "omega,d,p,u_hat,stderr,conclusive,unanimous"
    assert len(lines) == 4


def test_sweep_grid_from_command_line_only(tmp_path, capsys):
    config = write(tmp_path, "sweep.cfg", "n = 1000\nmatrix = 1,0;0,2\ntrials = 2\nbase_seed = 1\n")
    assert main(["sweep", config, "--omega", "0"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert json.loads(lines[0][2:])["omega_grid"] == [0.0]
    assert lines[1] == "omega,d,p,u_hat,stderr,conclusive,unanimous"
    assert len(lines) == 3
    assert float(lines[2].split(",")[0]) == 0.0


def test_sweep_without_any_grid(tmp_path, capsys):
    config = write(tmp_path, "sweep.cfg", "n = 1000\nmatrix = 1,0;0,2\ntrials = 2\nbase_seed = 1\n")
    assert main(["sweep", config]) == 2
    assert "one of p, d or threshold_base is required" in capsys.readouterr().err


def test_sweep_rejects_unit_skew(tmp_path, capsys):
    config = write(tmp_path, "sweep.cfg", "n = 100\nmatrix = 1,0;0,1\ntrials = 10\nbase_seed = 1\n"
                                          "omega_grid = 0\n")
    assert main(["sweep", config]) == 2
    assert "payoff skew" in capsys.readouterr().err


def test_dispatch_by_command():
    with patch("nodegames.cli.command_line.COMMANDS", {"classify": MagicMock(return_value=0)}):
        assert main(["classify", "1,0;0,1"]) == 0
