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
import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Optional

import pandas as pd
from pydantic import ValidationError
from tqdm import tqdm

from model import ModelParams, DrawdownModelError, InvalidParameterError, zeta_curve
from solver import (solve, hjb_residual, structural_report, perturb_coefficient, value_table, write_table,
                    dump_solution, GridSpec)
from solver import settings as solver_settings
from simulator import SimConfig, StrategySpec, estimate_value, simulate_path, compare_strategies, optimal_strategy
from simulator import settings as simulator_settings
from simulator.sim_scripts.file_writer import write_path, write_estimate
from . import settings
from .cli_scripts.config_loader import MODEL_FIELDS, PRESETS, float_list, float_range, read_config_file
from .cli_scripts.manifest import RunManifest, append_manifest

logger = logging.getLogger(__name__)

## every option a command or config file can set, with its type
OPTION_TYPES = {**{name: float for name in MODEL_FIELDS},
                "out": str, "format": str, "zmax": float, "n": int,
                "grid_n": int, "perturb": float,
                "param": str, "values": float_list, "u0_range": str,
                "strategy": str, "z0": float, "x0": float, "dt": float, "horizon": float, "paths": int,
                "seed": int, "record_paths": int, "record_stride": int, "z_grid": float_list}

SIMULATION_DEFAULTS = {"z0": 0.0, "x0": 0.0, "dt": simulator_settings.DEFAULT_DT,
                       "horizon": simulator_settings.DEFAULT_HORIZON, "paths": simulator_settings.DEFAULT_N_PATHS,
                       "seed": simulator_settings.DEFAULT_SEED, "record_stride": 1}

COMMAND_DEFAULTS = {
    "solve": {"format": "both", "zmax": None, "n": settings.SOLVE_GRID_N},
    "residual": {"grid_n": solver_settings.RESIDUAL_GRID_N, "perturb": 0.0},
    "sweep": {"zmax": None, "n": settings.SOLVE_GRID_N, "values": [], "u0_range": "0.1,6,60"},
    "simulate": {**SIMULATION_DEFAULTS, "strategy": "optimal", "record_paths": 0},
    "compare": {**SIMULATION_DEFAULTS, "z_grid": [0.0]},
}

## validation error locations that are not named like their flag
FLAG_NAMES = {"n_paths": "paths"}


def _summary(key: str, value) -> str:
    if isinstance(value, float):
        return f"{key}={value:.{settings.SUMMARY_DIGITS}g}"
    return f"{key}={value}"


def describe_validation_error(err: ValidationError) -> str:
    messages = []
    for error in err.errors():
        if error["loc"]:
            flag = FLAG_NAMES.get(str(error["loc"][0]), str(error["loc"][0])).replace("_", "-")
            messages.append(f"invalid value for --{flag}: {error['msg']}")
        else:
            messages.append(error["msg"])
    return "; ".join(messages)


def resolve_options(command: str, given: dict) -> dict:
    """ Defaults, then the preset, then the config file, then the command line. """
    options = dict(COMMAND_DEFAULTS[command])
    options["out"] = settings.OUTPUT_DIR
    if "preset" in given:
        options.update(PRESETS[given["preset"]])
    if "config" in given:
        options.update(read_config_file(given["config"], OPTION_TYPES))
    options.update({key: value for key, value in given.items() if key not in ("preset", "config", "command",
                                                                                 "verbose")})
    return options


def model_params(options: dict) -> ModelParams:
    return ModelParams(**{name: options[name] for name in MODEL_FIELDS if name in options})


def sim_config(options: dict) -> SimConfig:
    return SimConfig(z0=options["z0"], x0=options["x0"], dt=options["dt"], horizon=options["horizon"],
                     n_paths=options["paths"], seed=options["seed"],
                     record_paths=options.get("record_paths", 0) > 0, record_stride=options["record_stride"])


def parse_strategy(text: str) -> Optional[StrategySpec]:
    """ 'zero', 'max' or 'const:<u>'; 'optimal' gives None, resolved later through the solver. """
    text = text.strip().lower()
    if text == "optimal":
        return None
    if text == "zero":
        return StrategySpec.zero()
    if text == "max":
        return StrategySpec.maximal()
    if text.startswith("const:"):
        try:
            return StrategySpec.constant(float(text[len("const:"):]))
        except ValueError:
            pass
    raise InvalidParameterError(f"invalid value for --strategy: {text!r} "
                                f"(expected optimal, zero, max or const:<u>)")


def output_dir(options: dict) -> Path:
    out = Path(options["out"])
    out.mkdir(parents=True, exist_ok=True)
    return out


def record_run(command: str, options: dict, outputs, started: float, seed=None) -> None:
    manifest = RunManifest(command=command, parameters={key: value for key, value in options.items()},
                           version=settings.VERSION, seed=seed, outputs=outputs,
                           wall_seconds=time.perf_counter() - started)
    append_manifest(output_dir(options), manifest)


## ---------------------------------------------------------------------------------------------
## commands
def cmd_solve(options: dict) -> int:
    started = time.perf_counter()
    p = model_params(options)
    svf = solve(p)
    for key, value in (("regime", svf.regime.tag.value), ("boundary", svf.regime.boundary), ("zeta", svf.zeta),
                       ("xi1", svf.xi1), ("xi2", svf.xi2), ("C", svf.C), ("z_f", svf.z_f), ("z_g", svf.z_g)):
        print(_summary(key, value))

    out = output_dir(options)
    outputs = []
    if options["format"] in ("json", "both"):
        outputs.append(dump_solution(svf, out / "solution.json"))
    if options["format"] in ("csv", "both"):
        outputs.append(write_table(value_table(svf, options["zmax"], options["n"]), out / "value_function.csv"))
    record_run("solve", options, outputs, started)
    return settings.EXIT_OK


def cmd_residual(options: dict) -> int:
    p = model_params(options)
    svf = solve(p)
    if options["perturb"]:
        svf = perturb_coefficient(svf, 1.0 + options["perturb"])
    report = hjb_residual(svf, GridSpec(n=options["grid_n"]))
    max_gap = max((max(gap.value_gap, gap.derivative_gap) for gap in report.pasting_gaps), default=0.0)
    for key, value in (("max_abs_residual", report.max_abs_residual), ("argmax_z", report.argmax_z),
                       ("max_grid_residual", report.max_grid_residual), ("max_pasting_gap", max_gap),
                       ("boundary_defect", report.boundary_defect)):
        print(_summary(key, value))
    structure = structural_report(svf)
    print(_summary("structure_ok", structure.ok))
    if report.passed(solver_settings.RESIDUAL_THRESHOLD):
        return settings.EXIT_OK
    logger.warning(f"residual {report.max_abs_residual!r} above {solver_settings.RESIDUAL_THRESHOLD!r}")
    return settings.EXIT_CHECK_FAILED


def cmd_sweep(options: dict) -> int:
    started = time.perf_counter()
    param = options.get("param")
    out = output_dir(options)
    outputs = []

    if param == "zeta-curve":
        base = {name: options[name] for name in MODEL_FIELDS if name in options}
        base.setdefault("beta", 1.0)
        u0_values = float_range(options["u0_range"])
        base.setdefault("u0", u0_values[0])
        p = ModelParams(**base)
        curve = pd.DataFrame({"u0": u0_values, "zeta": zeta_curve(p, u0_values)}, columns=["u0", "zeta"])
        outputs.append(write_table(curve, out / "zeta_curve.csv"))
        record_run("sweep", options, outputs, started)
        return settings.EXIT_OK

    if param not in ("beta", "sigma", "u0"):
        raise InvalidParameterError(f"invalid value for --param: {param!r} (expected beta, sigma, u0 or zeta-curve)")
    p = model_params(options)
    rows = []
    for value in tqdm(options["values"], desc=f"sweep {param}", disable=not simulator_settings.SHOW_PROGRESS):
        svf = solve(p.replace(**{param: value}))
        rows.append({"value": value, "zeta": svf.zeta, "regime": svf.regime.tag.value, "C": svf.C,
                     "z_f": svf.z_f, "z_g": svf.z_g})
        outputs.append(write_table(value_table(svf, options["zmax"], options["n"]),
                                   out / f"sweep_{param}_{value!r}.csv"))
    summary = pd.DataFrame(rows, columns=["value", "zeta", "regime", "C", "z_f", "z_g"])
    outputs.append(write_table(summary, out / f"sweep_{param}_summary.csv"))
    record_run("sweep", options, outputs, started)
    return settings.EXIT_OK


def _resolve_strategy(p: ModelParams, text: str) -> Optional[StrategySpec]:
    strategy = parse_strategy(text)
    if strategy is not None:
        return strategy
    try:
        return optimal_strategy(solve(p))
    except DrawdownModelError as err:
        logger.error(f"optimal strategy unavailable: {err}")
        return None


def cmd_simulate(options: dict) -> int:
    started = time.perf_counter()
    p = model_params(options)
    cfg = sim_config(options)
    strategy = _resolve_strategy(p, options["strategy"])
    if strategy is None:
        return settings.EXIT_STRATEGY_SOLVER

    estimate = estimate_value(p, strategy, cfg)
    out = output_dir(options)
    outputs = [write_estimate(estimate, out / "estimate.json")]
    for index in range(min(options["record_paths"], cfg.n_paths)):
        outputs.append(write_path(simulate_path(p, strategy, cfg, index), out / f"path_{index}.csv"))
    for key, value in (("strategy", strategy.label), ("mean", estimate.mean), ("std_error", estimate.std_error),
                       ("n_paths", estimate.n_paths), ("truncation_bias_bound", estimate.truncation_bias_bound)):
        print(_summary(key, value))
    record_run("simulate", options, outputs, started, seed=cfg.seed)
    return settings.EXIT_OK


def cmd_compare(options: dict) -> int:
    started = time.perf_counter()
    p = model_params(options)
    cfg = sim_config(options)
    try:
        svf = solve(p)
    except DrawdownModelError as err:
        logger.error(f"optimal strategy unavailable: {err}")
        return settings.EXIT_STRATEGY_SOLVER

    table = compare_strategies(p, cfg, options["z_grid"], svf=svf)
    columns = ["z", "v_analytic", "mc_optimal", "se_optimal", "mc_zero", "se_zero", "mc_max", "se_max"]
    outputs = [write_table(table[columns], output_dir(options) / "compare.csv")]
    record_run("compare", options, outputs, started, seed=cfg.seed)
    return settings.EXIT_OK


COMMANDS = {"solve": cmd_solve, "residual": cmd_residual, "sweep": cmd_sweep, "simulate": cmd_simulate,
            "compare": cmd_compare}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="drawdown-dividends",
                                     description="Optimal dividends under a drawdown penalty: exact value "
                                                 "function and Monte Carlo validation.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")

    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--mu", type=float, help="drift of the surplus")
    common.add_argument("--sigma", type=float, help="volatility of the surplus")
    common.add_argument("--r", type=float, help="discount rate")
    common.add_argument("--d", type=float, help="critical drawdown level")
    common.add_argument("--u0", type=float, help="maximal dividend rate")
    common.add_argument("--beta", type=float, help="dividend weight")
    common.add_argument("--preset", choices=sorted(PRESETS), help="named parameter set")
    common.add_argument("--config", help="file of key=value lines, overridden by the command line")
    common.add_argument("--out", help=f"output directory (default ${{DRAWDOWN_OUTPUT_DIR}} or {settings.OUTPUT_DIR})")
    common.add_argument("--verbose", action="store_true", help="log progress at INFO level")

    simulation = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    simulation.add_argument("--z0", type=float, help="initial drawdown")
    simulation.add_argument("--x0", type=float, help="initial surplus")
    simulation.add_argument("--dt", type=float, help="Euler time step")
    simulation.add_argument("--horizon", type=float, help="truncation time")
    simulation.add_argument("--paths", type=int, help="number of simulated paths")
    simulation.add_argument("--seed", type=int, help="root seed of the path substreams")
    simulation.add_argument("--record-stride", type=int, help="keep every n-th step of recorded paths")

    subparsers = parser.add_subparsers(dest="command", required=True)

    solve_parser = subparsers.add_parser("solve", parents=[common], argument_default=argparse.SUPPRESS,
                                         help="solve for the value function and thresholds")
    solve_parser.add_argument("--format", choices=["json", "csv", "both"])
    solve_parser.add_argument("--zmax", type=float, help="right end of the CSV grid")
    solve_parser.add_argument("--n", type=int, help="number of CSV grid points")

    residual_parser = subparsers.add_parser("residual", parents=[common], argument_default=argparse.SUPPRESS,
                                            help="check the HJB equation on a grid")
    residual_parser.add_argument("--grid-n", type=int, help="number of grid points")
    residual_parser.add_argument("--perturb", type=float, help="relative change of one coefficient before checking")

    sweep_parser = subparsers.add_parser("sweep", parents=[common], argument_default=argparse.SUPPRESS,
                                         help="solve along one parameter")
    sweep_parser.add_argument("--param", required=True, choices=["beta", "sigma", "u0", "zeta-curve"])
    sweep_parser.add_argument("--values", type=float_list, help="comma separated parameter values")
    sweep_parser.add_argument("--u0-range", help="start,stop,count of the zeta curve")
    sweep_parser.add_argument("--zmax", type=float)
    sweep_parser.add_argument("--n", type=int)

    simulate_parser = subparsers.add_parser("simulate", parents=[common, simulation],
                                            argument_default=argparse.SUPPRESS,
                                            help="Monte Carlo estimate of a strategy value")
    simulate_parser.add_argument("--strategy", help="optimal, zero, max or const:<u>")
    simulate_parser.add_argument("--record-paths", type=int, help="number of paths written as CSV")

    compare_parser = subparsers.add_parser("compare", parents=[common, simulation],
                                           argument_default=argparse.SUPPRESS,
                                           help="analytic value against optimal, zero and maximal strategies")
    compare_parser.add_argument("--z-grid", type=float_list, help="comma separated initial drawdowns")
    return parser


def main(argv=None) -> int:
    namespace = build_parser().parse_args(argv)
    given = vars(namespace)
    level = logging.INFO if given.get("verbose") else getattr(logging, settings.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(format='%(asctime)s [%(module)s] %(levelname)s: %(message)s', level=level)

    try:
        options = resolve_options(namespace.command, given)
        return COMMANDS[namespace.command](options)
    except ValidationError as err:
        print(describe_validation_error(err), file=sys.stderr)
        return settings.EXIT_VALIDATION
    except InvalidParameterError as err:
        print(str(err), file=sys.stderr)
        return settings.EXIT_VALIDATION
    except DrawdownModelError as err:
        print(f"solver failed: {err}", file=sys.stderr)
        return settings.EXIT_SOLVER
    except ArithmeticError as err:
        print(f"solver failed: numerical error: {err}", file=sys.stderr)
        return settings.EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
