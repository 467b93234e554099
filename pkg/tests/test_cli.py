"""
* Software Name : DrawdownDividends
* Software description: DrawdownDividends computes optimal dividend payments for a surplus process that is penalised while its drawdown exceeds a critical level: 1) Model: characteristic exponents, critical dividend weight and regime classification. 2) Solver: exact piecewise value function and payment thresholds, with HJB residual and structural checks. 3) Simulator: Monte Carlo estimates of strategy values for cross-validation against the solver.
* Version: <1.0.0>
* SPDX-License-Identifier: GPL-3.0-or-later
* Licensed under the GNU-GPL v3 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * https://www.gnu.org/licenses/gpl-3.0.html#license-text
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
"""
import importlib
import json

import numpy as np
import pandas as pd
import pytest

import cli.drawdown_cli
import cli.settings
from cli import main
from cli.cli_scripts.config_loader import float_list, float_range, read_config_file
from cli.drawdown_cli import OPTION_TYPES, parse_strategy
from conftest import steep_parameter_sets
from model import InvalidParameterError, NonConvergenceError
from simulator import StrategyKind
from solver import load_solution, read_table, value_table

BASE_FLAGS = ["--mu", "3", "--sigma", "2", "--r", "0.2", "--d", "5", "--u0", "3"]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def summary_values(out):
    return dict(line.split("=", 1) for line in out.splitlines() if "=" in line)


## ---------------------------------------------------------------------------------------------
## solve
def test_solve_dividend_dominated(capsys, tmp_path):
    code, out, _ = run(capsys, "solve", *BASE_FLAGS, "--beta", "1", "--out", str(tmp_path))
    assert code == 0
    assert "regime=DividendDominated" in out
    assert "zeta=0.757105" in out
    assert (tmp_path / "solution.json").exists()
    table = pd.read_csv(tmp_path / "value_function.csv")
    assert list(table.columns) == ["z", "v", "v_prime", "v_second", "u_star"]
    assert len(table) == 2001


def test_solve_drawdown_sensitive(capsys, tmp_path):
    code, out, _ = run(capsys, "solve", *BASE_FLAGS, "--beta", "0.5", "--out", str(tmp_path), "--format", "json")
    assert code == 0
    values = summary_values(out)
    assert values["regime"] == "DrawdownSensitive"
    assert float(values["z_f"]) < 5.0 < float(values["z_g"])
    assert not (tmp_path / "value_function.csv").exists()


def test_solve_output_round_trips(capsys, tmp_path):
    code, _, _ = run(capsys, "solve", *BASE_FLAGS, "--beta", "0.5", "--out", str(tmp_path), "--n", "301")
    assert code == 0
    written = read_table(tmp_path / "value_function.csv")
    recomputed = value_table(load_solution(tmp_path / "solution.json"), n=301)
    assert np.array_equal(written.to_numpy(dtype=float), recomputed.to_numpy(dtype=float))


def test_invalid_parameter_names_flag(capsys, tmp_path):
    code, _, err = run(capsys, "solve", *BASE_FLAGS, "--beta", "1", "--sigma", "0", "--out", str(tmp_path))
    assert code == 2
    assert "--sigma" in err


def test_missing_parameter_is_a_validation_error(capsys, tmp_path):
    code, _, err = run(capsys, "solve", "--mu", "3", "--out", str(tmp_path))
    assert code == 2
    assert "--sigma" in err


def test_unknown_choice_exits_with_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["solve", *BASE_FLAGS, "--beta", "1", "--format", "xml"])
    assert info.value.code == 2


def test_preset_and_command_line_override(capsys, tmp_path):
    code, out, _ = run(capsys, "solve", "--preset", "value-base", "--beta", "0.5", "--out", str(tmp_path))
    assert code == 0
    assert summary_values(out)["regime"] == "DrawdownSensitive"


def test_config_file(capsys, tmp_path):
    config = tmp_path / "model.cfg"
    config.write_text("# base parameters\nmu = 3\nsigma=2\nr=0.2\nd=5\nu0=3\nbeta=1\ngrid-n = 2000\n")
    code, out, _ = run(capsys, "residual", "--config", str(config), "--beta", "0.5")
    assert code == 0
    assert float(summary_values(out)["max_abs_residual"]) <= 1e-8


def test_manifest_records_runs(capsys, tmp_path):
    run(capsys, "solve", *BASE_FLAGS, "--beta", "1", "--out", str(tmp_path))
    run(capsys, "solve", *BASE_FLAGS, "--beta", "0.5", "--out", str(tmp_path), "--format", "csv")
    entries = json.loads((tmp_path / "manifest.json").read_text())
    assert [entry["command"] for entry in entries] == ["solve", "solve"]
    assert entries[1]["parameters"]["beta"] == 0.5
    assert entries[1]["outputs"] == [str(tmp_path / "value_function.csv")]
    assert entries[0]["version"] == "1.0.0"


def test_output_directory_from_environment(capsys, tmp_path, monkeypatch):
    target = tmp_path / "from_env"
    monkeypatch.setenv("DRAWDOWN_OUTPUT_DIR", str(target))
    importlib.reload(cli.settings)
    try:
        code, _, _ = run(capsys, "solve", *BASE_FLAGS, "--beta", "1", "--format", "json")
    finally:
        monkeypatch.delenv("DRAWDOWN_OUTPUT_DIR")
        importlib.reload(cli.settings)
    assert code == 0
    assert (target / "solution.json").exists()
    assert json.loads((target / "manifest.json").read_text())[0]["parameters"]["out"] == str(target)


## ---------------------------------------------------------------------------------------------
## residual
def test_residual_passes(capsys):
    for beta, bound in (("1", 1e-9), ("0.5", 1e-8)):
        code, out, _ = run(capsys, "residual", *BASE_FLAGS, "--beta", beta)
        values = summary_values(out)
        assert code == 0
        assert float(values["max_abs_residual"]) <= bound
        assert values["structure_ok"] == "True"


def test_residual_detects_perturbation(capsys):
    code, out, _ = run(capsys, "residual", *BASE_FLAGS, "--beta", "0.5", "--perturb", "0.01")
    assert code == 1
    assert float(summary_values(out)["max_abs_residual"]) > 1e-4


def test_residual_with_large_exponents(capsys):
    for p in steep_parameter_sets():
        flags = [f"--{name}={value!r}" for name, value in p.model_dump().items()]
        code, out, err = run(capsys, "residual", *flags)
        assert code == 0, err
        assert float(summary_values(out)["max_abs_residual"]) <= 1e-8


def test_numerical_error_exits_as_solver_failure(capsys, tmp_path, monkeypatch):
    def overflowing_solve(p):
        raise OverflowError("math range error")

    monkeypatch.setattr(cli.drawdown_cli, "solve", overflowing_solve)
    code, _, err = run(capsys, "solve", *BASE_FLAGS, "--beta", "0.5", "--out", str(tmp_path))
    assert code == 3
    assert "solver failed" in err


## ---------------------------------------------------------------------------------------------
## sweep
def test_beta_sweep_thresholds_close_in(capsys, tmp_path):
    code, _, _ = run(capsys, "sweep", *BASE_FLAGS, "--param", "beta", "--values", "0.5,0.7,0.75,0.757",
                     "--out", str(tmp_path), "--n", "101")
    assert code == 0
    summary = pd.read_csv(tmp_path / "sweep_beta_summary.csv")
    assert list(summary.columns) == ["value", "zeta", "regime", "C", "z_f", "z_g"]
    assert (summary["regime"] == "DrawdownSensitive").all()
    assert np.all(np.diff(summary["z_f"]) > 0) and np.all(summary["z_f"] < 5.0)
    assert np.all(np.diff(summary["z_g"]) < 0) and np.all(summary["z_g"] > 5.0)
    assert (tmp_path / "sweep_beta_0.757.csv").exists()


def test_sigma_sweep(capsys, tmp_path):
    code, _, _ = run(capsys, "sweep", *BASE_FLAGS, "--beta", "0.5", "--param", "sigma", "--values", "1,2,4,8",
                     "--out", str(tmp_path), "--n", "51")
    assert code == 0
    summary = pd.read_csv(tmp_path / "sweep_sigma_summary.csv")
    assert np.all(np.diff(summary["zeta"]) < 0)
    assert summary["regime"].iloc[-1] == "DividendDominated"


def test_zeta_curve(capsys, tmp_path):
    code, _, _ = run(capsys, "sweep", "--mu", "3", "--sigma", "2", "--r", "0.2", "--d", "5", "--param", "zeta-curve",
                     "--u0-range", "0.1,6,60", "--out", str(tmp_path))
    assert code == 0
    curve = pd.read_csv(tmp_path / "zeta_curve.csv")
    assert list(curve.columns) == ["u0", "zeta"]
    step = curve["u0"].iloc[1] - curve["u0"].iloc[0]
    assert abs(curve["u0"].iloc[int(curve["zeta"].idxmax())] - 3.0) <= step


def test_u0_sweep(capsys, tmp_path):
    code, _, _ = run(capsys, "sweep", *BASE_FLAGS, "--beta", "0.5", "--param", "u0", "--values", "1,2,3,4,5",
                     "--out", str(tmp_path), "--n", "51")
    assert code == 0
    summary = pd.read_csv(tmp_path / "sweep_u0_summary.csv")
    assert summary["value"].tolist() == [1.0, 2.0, 3.0, 4.0, 5.0]
    assert summary["value"].iloc[int(summary["zeta"].idxmax())] == 3.0
    assert summary["regime"].iloc[2] == "DrawdownSensitive"
    assert np.all(summary["z_f"] <= 5.0) and np.all(summary["z_g"] >= 5.0)
    assert (tmp_path / "sweep_u0_3.0.csv").exists()


def test_sweep_rejects_unknown_parameter():
    with pytest.raises(SystemExit):
        main(["sweep", *BASE_FLAGS, "--beta", "1", "--param", "mu", "--values", "1"])


## ---------------------------------------------------------------------------------------------
## simulate and compare
SMALL_RUN = ["--dt", "0.01", "--horizon", "10", "--paths", "200", "--seed", "7"]


def test_simulate_zero_strategy(capsys, tmp_path):
    code, _, _ = run(capsys, "simulate", *BASE_FLAGS, "--beta", "1", "--strategy", "zero", "--z0", "6",
                     *SMALL_RUN, "--out", str(tmp_path))
    assert code == 0
    estimate = json.loads((tmp_path / "estimate.json").read_text())
    assert -1.0 / 0.2 <= estimate["mean"] <= 0.0
    assert estimate["n_paths"] == 200
    assert estimate["seed"] == 7


def test_simulate_is_reproducible(capsys, tmp_path):
    first, second = tmp_path / "first", tmp_path / "second"
    for out in (first, second):
        code, _, _ = run(capsys, "simulate", *BASE_FLAGS, "--beta", "0.5", *SMALL_RUN, "--record-paths", "2",
                         "--out", str(out))
        assert code == 0
    assert (first / "estimate.json").read_bytes() == (second / "estimate.json").read_bytes()
    assert (first / "path_1.csv").read_bytes() == (second / "path_1.csv").read_bytes()
    assert not (first / "path_2.csv").exists()
    header = (first / "path_0.csv").read_text().splitlines()[0]
    assert header == "t,X,M,Delta,U,D,discounted_payoff_so_far"
    assert json.loads((first / "manifest.json").read_text())[0]["seed"] == 7


def test_simulate_rejects_bad_strategy(capsys, tmp_path):
    code, _, err = run(capsys, "simulate", *BASE_FLAGS, "--beta", "1", "--strategy", "const:9", *SMALL_RUN,
                       "--out", str(tmp_path))
    assert code == 2
    code, _, err = run(capsys, "simulate", *BASE_FLAGS, "--beta", "1", "--strategy", "sometimes", *SMALL_RUN,
                       "--out", str(tmp_path))
    assert code == 2
    assert "--strategy" in err


def test_simulate_optimal_needs_solver(capsys, tmp_path, monkeypatch):
    def failing_solve(p):
        raise NonConvergenceError("no convergence")

    monkeypatch.setattr(cli.drawdown_cli, "solve", failing_solve)
    code, _, _ = run(capsys, "simulate", *BASE_FLAGS, "--beta", "0.5", *SMALL_RUN, "--out", str(tmp_path))
    assert code == 4


def test_compare_columns_and_regime_identity(capsys, tmp_path):
    code, _, _ = run(capsys, "compare", *BASE_FLAGS, "--beta", "1", "--z-grid", "0,5", *SMALL_RUN,
                     "--out", str(tmp_path))
    assert code == 0
    table = pd.read_csv(tmp_path / "compare.csv", float_precision="round_trip")
    assert list(table.columns) == ["z", "v_analytic", "mc_optimal", "se_optimal", "mc_zero", "se_zero", "mc_max",
                                   "se_max"]
    assert np.array_equal(table["mc_optimal"].to_numpy(), table["mc_max"].to_numpy())


## ---------------------------------------------------------------------------------------------
## helpers
def test_parse_strategy():
    assert parse_strategy("optimal") is None
    assert parse_strategy("Zero").kind is StrategyKind.ZERO
    assert parse_strategy("max").kind is StrategyKind.MAX
    assert parse_strategy("const:1.5").rate == 1.5
    with pytest.raises(InvalidParameterError):
        parse_strategy("const:fast")


def test_value_lists():
    assert float_list("0.5, 0.7,0.75") == [0.5, 0.7, 0.75]
    assert float_range("0,1,5") == [0.0, 0.25, 0.5, 0.75, 1.0]
    with pytest.raises(InvalidParameterError):
        float_range("0,1")


def test_config_file_errors(tmp_path):
    unknown = tmp_path / "unknown.cfg"
    unknown.write_text("gamma = 1\n")
    with pytest.raises(InvalidParameterError, match="--gamma"):
        read_config_file(unknown, OPTION_TYPES)
    malformed = tmp_path / "malformed.cfg"
    malformed.write_text("beta 1\n")
    with pytest.raises(InvalidParameterError):
        read_config_file(malformed, OPTION_TYPES)
    bad_value = tmp_path / "bad.cfg"
    bad_value.write_text("paths = many\n")
    with pytest.raises(InvalidParameterError, match="--paths"):
        read_config_file(bad_value, OPTION_TYPES)
