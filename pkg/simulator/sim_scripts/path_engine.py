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
import math
import threading
from typing import List, Sequence

import numpy as np

from model import ModelParams
from .. import settings
from .abstract_classes import SimConfig, StrategySpec, PathRecord, PayoffSample


def path_generator(seed: int, path_index: int) -> np.random.Generator:
    """ Independent substream of path path_index, fixed by (seed, path_index) alone. """
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(path_index,)))


def simulate_batch(p: ModelParams, strategy: StrategySpec, cfg: SimConfig, path_indices: Sequence[int],
                   record: bool = False):
    """
        Euler-Maruyama for the surplus X and its running maximum M of every path in path_indices,
        advanced together in time. The rate is chosen from the drawdown at the start of each step
        and the discounted payoff uses the left endpoint of the step.
        Returns a PayoffSample and, when record is set, one PathRecord per path.
    """
    n = len(path_indices)
    n_steps = cfg.n_steps
    dt = cfg.dt
    volatility = p.sigma * cfg.noise_scale * math.sqrt(dt)
    generators = [path_generator(cfg.seed, index) for index in path_indices]

    X = np.full(n, cfg.x0, dtype=float)
    M = np.full(n, cfg.x0 + cfg.z0, dtype=float)
    delta = np.full(n, cfg.z0, dtype=float)
    D = np.zeros(n)
    payoff = np.zeros(n)
    boundary_hits = 0
    snapshots = []

    noise = np.empty((n, settings.NOISE_CHUNK))
    for chunk_start in range(0, n_steps, settings.NOISE_CHUNK):
        width = min(settings.NOISE_CHUNK, n_steps - chunk_start)
        for row, generator in zip(noise[:, :width], generators):
            generator.standard_normal(out=row)

        for k in range(width):
            step = chunk_start + k
            U = strategy.rates(p, delta)
            if record and step % cfg.record_stride == 0:
                snapshots.append((step * dt, X.copy(), M.copy(), delta.copy(), np.broadcast_to(U, (n,)).copy(),
                                  D.copy(), payoff.copy()))

            boundary_hits += int(np.count_nonzero(delta == p.d))
            penalty = delta > p.d
            payoff += math.exp(-p.r * step * dt) * (p.beta * U - penalty) * dt
            D += U * dt
            X += (p.mu - U) * dt + volatility * noise[:, k]
            np.maximum(M, X, out=M)
            delta = M - X

    sample = PayoffSample(payoffs=payoff, boundary_hits=boundary_hits, steps=n * n_steps)
    if not record:
        return sample, []

    U = strategy.rates(p, delta)
    snapshots.append((n_steps * dt, X, M, delta, np.broadcast_to(U, (n,)).copy(), D, payoff))
    columns = [np.array(column) for column in zip(*snapshots)]
    times = columns[0]
    records = [PathRecord(times=times, X=columns[1][:, i], M=columns[2][:, i], Delta=columns[3][:, i],
                          U=columns[4][:, i], D=columns[5][:, i], discounted_payoff=columns[6][:, i])
               for i in range(n)]
    return sample, records


class SimulationThread(threading.Thread):
    """ Runs its batches one after the other; an exception stops the thread and is raised again by get_result. """

    def __init__(self, p: ModelParams, strategy: StrategySpec, cfg: SimConfig, batches: List[range]):
        threading.Thread.__init__(self)
        self.p = p
        self.strategy = strategy
        self.cfg = cfg
        self.batches = batches
        self.result = []
        self.error = None

    def run(self):
        try:
            for batch in self.batches:
                sample, _ = simulate_batch(self.p, self.strategy, self.cfg, batch)
                self.result.append((batch, sample))
        except Exception as err:
            self.error = err

    def get_result(self):
        if self.error is not None:
            raise self.error
        return self.result
