import csv
import json

import numpy as np
import pytest

from compas_fdcrack.app import Controller
from compas_fdcrack.app import WorkerPool
from compas_fdcrack.app import load_config
from compas_fdcrack.app import main
from compas_fdcrack.app.cli import EXIT_CONFIG
from compas_fdcrack.app.cli import EXIT_NUMERIC
from compas_fdcrack.app.cli import EXIT_OK
from compas_fdcrack.app.config import parse_subdivisions
from compas_fdcrack.app.controller import CONVERGENCE_COLUMNS
from compas_fdcrack.app.controller import ROBUSTNESS_COLUMNS
from compas_fdcrack.app.worker import Worker
from compas_fdcrack.exceptions import ConfigurationError
from compas_fdcrack.exceptions import ElementError
from compas_fdcrack.exceptions import SolverError


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as f:
        return list(csv.DictReader(f))


def write_triangle(path):
    path.write_text("v 0 0 0\nv 1 0 0\nv 0 1 0\nv 1 1 0.2\nt 0 1 2\nt 2 1 3\n")
    return str(path)


# ==============================================================================
# Configuration
# ==============================================================================


def test_default_settings():
    settings = load_config("convergence")
    assert settings["elements"] == ["P1/P0", "P2/P0", "P2/P1", "P3/P1"]
    assert settings["h_list"] == [10, 20, 40, 80, 160]
    assert settings["gamma0"] == [0.0]
    assert settings["jump"] == [0.1, 0.05]
    assert settings["solver"] == "monolithic"
    assert load_config("robustness")["xa_step"] == 0.005
    assert load_config("demo")["subdivisions"] == "25x12"


def test_overrides_and_user_sections(tmp_path):
    path = tmp_path / "runs.json"
    path.write_text(json.dumps({"common": {"workers": 2}, "convergence": {"h_list": [4, 8]}, "demo": {"pressure": 1.0}}))
    settings = load_config("convergence", str(path), ["gamma0=0.03", "solver=uzawa", "h_list=[5, 10]"])
    assert settings["workers"] == 2
    assert settings["h_list"] == [5, 10]
    assert settings["gamma0"] == [0.03]
    assert settings["solver"] == "uzawa"
    assert load_config("convergence", {"convergence": {"elements": "P2/P1"}})["elements"] == ["P2/P1"]


@pytest.mark.parametrize(
    "command, config, overrides",
    [
        ("bogus", None, []),
        ("convergence", None, ["bogus=1"]),
        ("convergence", None, ["h_list"]),
        ("convergence", {"bogus": {}}, []),
        ("convergence", {"convergence": {"young": 1.0}}, []),
        ("convergence", None, ["solver=cholesky"]),
        ("convergence", None, ["workers=0"]),
        ("convergence", None, ["jump=[1]"]),
        ("convergence", None, ["gamma0=-1"]),
        ("convergence", None, ["h_list=[0]"]),
        ("robustness", None, ["mode=angle"]),
        ("robustness", None, ["subdivisions=0"]),
        ("extend3d", None, []),
        ("convergence", "missing.json", []),
    ],
)
def test_configuration_errors(command, config, overrides):
    with pytest.raises(ConfigurationError):
        load_config(command, config, overrides)


@pytest.mark.parametrize("elements", ['["P1/P2"]', '["Q1/Q0"]', "[3]"])
def test_element_errors(elements):
    with pytest.raises(ElementError):
        load_config("convergence", overrides=["elements={}".format(elements)])


def test_subdivisions():
    assert parse_subdivisions("25x12") == (25, 12)
    assert parse_subdivisions("10") == (10, 10)
    assert parse_subdivisions(40) == (40, 40)
    for value in ("axb", "1x2x3", "0x4", None):
        with pytest.raises(ConfigurationError):
            parse_subdivisions(value)


# ==============================================================================
# Workers
# ==============================================================================


def test_worker_records_errors():
    worker = Worker(int, "x").run()
    assert worker.result is None
    assert worker.error[0] is ValueError
    assert Worker(int, "12").run().result == 12


@pytest.mark.parametrize("workers", [1, 2])
def test_worker_pool_keeps_the_task_order(workers):
    assert WorkerPool(workers).map(abs, [-3, 2, -1]) == [3, 2, 1]


def test_worker_pool_raises_the_first_error():
    with pytest.raises(ValueError):
        WorkerPool(1).map(int, ["1", "x", "y"])


# ==============================================================================
# Commands
# ==============================================================================


def test_convergence_command(tmp_path):
    path = tmp_path / "convergence.csv"
    code = main(["-q", "convergence", "--set", 'elements=["P1/P0"]', "--set", "h_list=[5, 10]", "--output", str(path)])
    assert code == EXIT_OK
    rows = read_csv(path)
    assert list(rows[0].keys()) == CONVERGENCE_COLUMNS
    assert rows[-1]["h"] == "rate"
    np.testing.assert_allclose([float(row["h"]) for row in rows[:-1]], [np.sqrt(2) / 5, np.sqrt(2) / 10])
    assert all(row["elem_u"] == "P1" and row["elem_lambda"] == "P0" for row in rows)
    assert float(rows[1]["rel_l2_pct"]) < float(rows[0]["rel_l2_pct"])
    assert float(rows[2]["rel_l2_pct"]) > 0
    assert int(rows[0]["n_dofs"]) > 0


def test_convergence_with_uzawa_and_stabilization():
    settings = load_config("convergence", overrides=['elements=["P1/P0"]', "h_list=[10]", "gamma0=[0, 0.03]", "solver=uzawa"])
    rows = Controller(settings).convergence()
    solved = [row for row in rows if row["h"] != "rate"]
    assert [(row["gamma0"], row["solver"]) for row in solved] == [(0.0, "uzawa"), (0.03, "monolithic")]
    assert solved[0]["iters"] > 0


def test_robustness_positions(tmp_path):
    path = tmp_path / "robustness.csv"
    overrides = [
        'elements=["P1/P0"]',
        "subdivisions=10",
        "gamma0=[0, 0.03]",
        "xa_min=0.3",
        "xa_max=0.32",
        "xa_step=0.01",
        "output={}".format(path),
    ]
    controller = Controller(load_config("robustness", overrides=overrides))
    rows = controller.robustness()
    assert len(rows) == 6
    assert [row["x_a"] for row in rows[:3]] == pytest.approx([0.3, 0.31, 0.32])
    assert all(row["x_b"] == pytest.approx(row["x_a"] + 0.05) for row in rows)
    assert set(controller.failures(rows)) == {0.0, 0.03}
    written = read_csv(path)
    assert list(written[0].keys()) == ROBUSTNESS_COLUMNS
    assert {row["failed"] for row in written} <= {"true", "false"}


def test_robustness_lengths():
    overrides = ['elements=["P1/P0"]', "subdivisions=10", "gamma0=0", "mode=length", "length_min=0.05", "length_max=0.1", "length_step=0.05"]
    rows = Controller(load_config("robustness", overrides=overrides)).robustness()
    assert [row["x_b"] for row in rows] == pytest.approx([0.52, 0.57])
    assert all(row["x0"] == 0.317 and row["mode"] == "length" for row in rows)


def test_failures_count_rows_above_the_threshold():
    controller = Controller(load_config("robustness"))
    rows = [
        {"gamma0": 0.0, "rel_lambda_pct": 150.0, "failed": False},
        {"gamma0": 0.0, "rel_lambda_pct": float("inf"), "failed": True},
        {"gamma0": 0.0005, "rel_lambda_pct": 5.0, "failed": False},
    ]
    assert controller.failures(rows) == {0.0: 2, 0.0005: 0}


def test_gamma_sweep():
    overrides = ['elements=["P1/P0"]', "subdivisions=10", "gamma_min=0.01", "gamma_max=0.1", "gamma_count=3"]
    controller = Controller(load_config("gamma-sweep", overrides=overrides))
    rows = controller.gamma_sweep()
    gammas = [row["gamma0"] for row in rows]
    assert gammas == sorted(gammas)
    assert len(rows) == 8
    assert all(row["x_a"] == 0.47 for row in rows)
    report = controller._calibration(rows)
    assert list(report) == [0.47]


@pytest.mark.slow
def test_gamma_sweep_calibration_at_h_1_40():
    overrides = ['elements=["P2/P0"]', "subdivisions=40", "gamma_min=0.1", "gamma_max=1.0", "gamma_count=2"]
    controller = Controller(load_config("gamma-sweep", overrides=overrides))
    rows = controller.gamma_sweep()
    errors = {row["gamma0"]: row["rel_lambda_pct"] for row in rows}
    assert len(errors) == 7
    assert {0.0, 0.0005, 0.001, 0.03, 0.04} <= set(errors)
    ratio = errors[0.03] / errors[0.001]
    assert 0.5 <= ratio <= 2.0

    reported, spikes = controller._calibration(rows)[0.47]
    assert reported == pytest.approx(ratio)
    assert spikes
    assert all(g > 0.04 and errors[g] > 3.0 * errors[0.001] for g in spikes)


@pytest.mark.slow
def test_small_stabilization_does_not_add_position_failures():
    overrides = ['elements=["P2/P0"]', "subdivisions=40", "gamma0=[0, 0.0005]", "xa_min=0.0", "xa_max=0.9", "xa_step=0.1"]
    controller = Controller(load_config("robustness", overrides=overrides))
    rows = controller.robustness()
    assert len(rows) == 20
    counts = controller.failures(rows)
    assert counts[0.0005] <= counts[0.0]


def test_demo_is_linear_in_the_pressure():
    def run(pressure):
        return Controller(load_config("demo", overrides=["pressure={}".format(pressure), "output=null"])).demo()

    rows = run(5.0)
    assert rows.shape == (26 * 13, 4)
    assert np.abs(rows[:, 2:]).max() > 0
    np.testing.assert_allclose(run(0.0)[:, 2:], 0.0, atol=1e-14)
    np.testing.assert_allclose(run(-5.0)[:, 2:], -rows[:, 2:], rtol=1e-8, atol=1e-14)
    bottom = rows[:, 1] == 0.0
    np.testing.assert_allclose(rows[bottom, 2:], 0.0)


def test_demo_command_writes_vertices(tmp_path):
    path = tmp_path / "demo.txt"
    assert main(["-q", "demo", "--output", str(path)]) == EXIT_OK
    assert len(path.read_text().splitlines()) == 338


def test_extend3d_command(tmp_path):
    surface = write_triangle(tmp_path / "crack.txt")
    path = tmp_path / "extension.txt"
    assert main(["-q", "extend3d", "--set", "surface={}".format(surface), "--output", str(path)]) == EXIT_OK
    lines = path.read_text().splitlines()
    assert "# apex" in lines
    assert lines[-1].startswith("t ")


@pytest.mark.parametrize(
    "argv",
    [
        ["convergence", "--set", "bogus=1"],
        ["convergence", "--set", 'elements=["P0/P0"]'],
        ["extend3d"],
        ["extend3d", "--set", "surface=does-not-exist.txt"],
    ],
)
def test_configuration_failures_exit_with_one(argv):
    assert main(["-q"] + argv) == EXIT_CONFIG


def test_invalid_surface_exits_with_one(tmp_path):
    path = tmp_path / "crack.txt"
    path.write_text("v 0 0 0\nv 1 0 0\nv 2 0 0\nt 0 1 2\n")
    assert main(["-q", "extend3d", "--set", "surface={}".format(path)]) == EXIT_CONFIG


def test_numerical_failures_exit_with_two(monkeypatch):
    def broken(self):
        raise SolverError("The A+ block is singular.", block="A+")

    monkeypatch.setattr(Controller, "convergence", broken)
    assert main(["-q", "convergence"]) == EXIT_NUMERIC


def test_unknown_command_is_rejected_by_the_parser():
    with pytest.raises(SystemExit):
        main(["refine"])
