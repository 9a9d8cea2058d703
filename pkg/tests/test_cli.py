import csv
import json

import pytest

from qdm.cli import (
    EXIT_OK,
    EXIT_SCHEMA,
    EXIT_UNKNOWN_SCENARIO,
    EXIT_UNWRITABLE,
    main,
)

EXPECTED_TRAJECTORY_HEADER = [
    "t_ns",
    "concurrence",
    "leak",
    "p_00",
    "p_S01",
    "p_A01",
    "p_11",
    "p_S0s",
    "p_S1s",
]


def test_run_writes_trajectory_and_manifest(tmp_path):
    out = tmp_path / "o"
    assert main(["run", "--scenario", "fig3a", "--out", str(out)]) == EXIT_OK
    with (out / "trajectory.csv").open() as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == EXPECTED_TRAJECTORY_HEADER
    assert len(rows) == 202  # header + 201 grid points
    assert float(rows[1][0]) == 0.0
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["summary"]["steady_concurrence"] > 0.99
    assert manifest["output_files"] == ["trajectory.csv"]
    assert manifest["config"]["name"] == "fig3a"
    assert (out / "trajectory.csv").stat().st_size > 0


def test_unknown_scenario_exit_code(tmp_path, capsys):
    code = main(["run", "--scenario", "not-a-thing", "--out", str(tmp_path)])
    assert code == EXIT_UNKNOWN_SCENARIO
    assert "unknown scenario" in capsys.readouterr().err


def test_unwritable_output_dir(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code = main(["run", "--scenario", "fig3a", "--out", str(blocker / "sub")])
    assert code == EXIT_UNWRITABLE


def test_config_file_roundtrip(tmp_path):
    cfg = {
        "name": "tiny",
        "model": "effective6",
        "drive": {"omega": 20.0, "omega_m": 9.0, "gamma0": 1.2, "gamma1": 1.2},
        "t_grid": [0.0, 10.0, 11],
        "epsilon_T0": 0.1,
    }
    path = tmp_path / "tiny.json"
    path.write_text(json.dumps(cfg))
    out = tmp_path / "o"
    assert main(["run", "--scenario", str(path), "--out", str(out)]) == EXIT_OK
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["config"]["name"] == "tiny"


def test_config_schema_violation(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"model": "effective6", "not_a_field": 1}))
    code = main(["run", "--scenario", str(path), "--out", str(tmp_path / "o")])
    assert code == EXIT_SCHEMA
    assert "not_a_field" in capsys.readouterr().err


def test_invalid_nested_block(tmp_path):
    path = tmp_path / "bad2.json"
    path.write_text(json.dumps({"drive": {"omega": -5.0}}))
    code = main(["run", "--scenario", str(path), "--out", str(tmp_path / "o")])
    assert code == EXIT_SCHEMA


def test_calc_zeeman_output(capsys):
    assert main(["calc", "zeeman", "--B", "1", "--ge", "-0.46", "--gh", "-0.29"]) == EXIT_OK
    text = capsys.readouterr().out
    assert "E_B_e" in text and "E_B_h" in text and "|Delta_H|" in text


def test_calc_forster_and_wkb(capsys):
    assert main(["calc", "forster"]) == EXIT_OK
    assert "-0.2000 meV" in capsys.readouterr().out
    assert main(["calc", "wkb"]) == EXIT_OK
    assert "2.8689 meV" in capsys.readouterr().out


def test_calc_spectral_density(capsys):
    assert main(["calc", "spectral-density", "--omega", "30", "--parity", "plus"]) == EXIT_OK
    assert "J_plus" in capsys.readouterr().out


def test_validate_passes(capsys):
    assert main(["validate"]) == EXIT_OK
    assert "all invariants hold" in capsys.readouterr().out


def test_sweep_fig3b(tmp_path):
    out = tmp_path / "s"
    assert main(["sweep", "--preset", "fig3b", "--out", str(out), "--jobs", "4"]) == EXIT_OK
    with (out / "sweep.csv").open() as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == [
        "omega_ueV",
        "omega_m_ueV",
        "gamma_ueV",
        "concurrence_ss",
        "t0_ns",
        "leak",
        "error",
    ]
    assert len(rows) == 16  # header + 15 grid points
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["summary"]["rows"] == 15


def test_seed_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("QDM_SEED", "1234")
    cfg = {"model": "effective6", "initial_state": "random", "t_grid": [0.0, 5.0, 3], "epsilon_T0": 0.1}
    path = tmp_path / "seeded.json"
    path.write_text(json.dumps(cfg))
    out = tmp_path / "o"
    assert main(["run", "--scenario", str(path), "--out", str(out)]) == EXIT_OK
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["config"]["seed"] == 1234
