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
import logging
import math
from typing import Iterable, Optional

import numpy as np
import pandas as pd
from tqdm import tqdm

from model import ModelParams
from solver import SolvedValueFunction, solve, evaluate
from . import settings
from .sim_scripts.abstract_classes import SimConfig, StrategySpec, PathRecord, McEstimate, PayoffSample
from .sim_scripts.path_engine import simulate_batch, SimulationThread

logger = logging.getLogger(__name__)

COMPARE_COLUMNS = ["z", "v_analytic", "mc_optimal", "se_optimal", "mc_zero", "se_zero", "mc_max", "se_max",
                   "se_diff_zero", "se_diff_max"]


def optimal_strategy(svf: SolvedValueFunction) -> StrategySpec:
    """ Strategy attaining svf: maximal rate when dividends dominate, thresholds otherwise. """
    if svf.constant_rate is not None:
        return StrategySpec.constant(svf.constant_rate)
    if svf.regime.is_dividend_dominated:
        return StrategySpec.maximal()
    return StrategySpec.feedback(svf.z_f, svf.z_g)


def simulate_path(p: ModelParams, strategy: StrategySpec, cfg: SimConfig, path_index: int) -> PathRecord:
    """ Full trajectory of one path; identical to the same path inside estimate_value. """
    strategy.validate_for(p)
    _, records = simulate_batch(p, strategy, cfg, [path_index], record=True)
    return records[0]


def simulate_payoffs(p: ModelParams, strategy: StrategySpec, cfg: SimConfig) -> PayoffSample:
    """
        Discounted payoff of every path, stored by path index.
        Batches run serially or on worker threads; both give the same array.
    """
    strategy.validate_for(p)
    batches = [range(start, min(start + settings.BATCH_SIZE, cfg.n_paths))
               for start in range(0, cfg.n_paths, settings.BATCH_SIZE)]
    payoffs = np.empty(cfg.n_paths)
    boundary_hits = 0
    steps = 0

    if settings.PARALLEL_MODE and len(batches) >= settings.PARALLEL_MIN:
        n_workers = min(settings.N_WORKERS, len(batches))
        threads = [SimulationThread(p, strategy, cfg, batches[worker::n_workers]) for worker in range(n_workers)]
        # Start all threads
        for t in threads:
            t.start()
        # Wait for all threads to complete
        for t in threads:
            t.join()
        results = [item for t in threads for item in t.get_result()]
    else:
        results = []
        for batch in tqdm(batches, desc=strategy.label, disable=not settings.SHOW_PROGRESS):
            sample, _ = simulate_batch(p, strategy, cfg, batch)
            results.append((batch, sample))

    reported = sum(len(batch) for batch, _ in results)
    if reported != cfg.n_paths:
        raise RuntimeError(f"{reported} of {cfg.n_paths} paths reported a payoff")
    for batch, sample in results:
        payoffs[batch.start:batch.stop] = sample.payoffs
        boundary_hits += sample.boundary_hits
        steps += sample.steps
    return PayoffSample(payoffs=payoffs, boundary_hits=boundary_hits, steps=steps)


def summarize(payoffs: np.ndarray):
    """ Mean by exact summation and the standard error of the mean. """
    n = len(payoffs)
    mean = math.fsum(payoffs) / n
    std_error = float(np.std(payoffs, ddof=1) / math.sqrt(n)) if n > 1 else 0.0
    return mean, std_error


def estimate_value(p: ModelParams, strategy: StrategySpec, cfg: SimConfig) -> McEstimate:
    sample = simulate_payoffs(p, strategy, cfg)
    mean, std_error = summarize(sample.payoffs)
    logger.info(f"{strategy.label} at z0={cfg.z0!r}: {mean!r} +/- {std_error!r} over {cfg.n_paths} paths")
    return McEstimate(mean=mean, std_error=std_error, n_paths=cfg.n_paths,
                      truncation_bias_bound=cfg.truncation_bias_bound(p), dt=cfg.dt, horizon=cfg.horizon,
                      seed=cfg.seed, z0=cfg.z0, strategy=strategy.label,
                      boundary_hit_fraction=sample.boundary_hits / sample.steps)


def compare_strategies(p: ModelParams, cfg: SimConfig, z_grid: Iterable[float],
                       svf: Optional[SolvedValueFunction] = None) -> pd.DataFrame:
    """
        Analytic value next to Monte Carlo estimates of the optimal, zero and maximal strategies
        for each initial drawdown. All strategies reuse the same noise (common random numbers), the
        se_diff columns are standard errors of the per-path differences optimal - other.
    """
    svf = solve(p) if svf is None else svf
    optimal = optimal_strategy(svf)
    rows = []
    for z in z_grid:
        cfg_z = cfg.replace(z0=float(z))
        optimal_payoffs = simulate_payoffs(p, optimal, cfg_z).payoffs
        zero_payoffs = simulate_payoffs(p, StrategySpec.zero(), cfg_z).payoffs
        max_payoffs = simulate_payoffs(p, StrategySpec.maximal(), cfg_z).payoffs

        mc_optimal, se_optimal = summarize(optimal_payoffs)
        mc_zero, se_zero = summarize(zero_payoffs)
        mc_max, se_max = summarize(max_payoffs)
        rows.append({"z": float(z), "v_analytic": evaluate(svf, float(z)),
                     "mc_optimal": mc_optimal, "se_optimal": se_optimal,
                     "mc_zero": mc_zero, "se_zero": se_zero,
                     "mc_max": mc_max, "se_max": se_max,
                     "se_diff_zero": summarize(optimal_payoffs - zero_payoffs)[1],
                     "se_diff_max": summarize(optimal_payoffs - max_payoffs)[1]})
    return pd.DataFrame(rows, columns=COMPARE_COLUMNS)
