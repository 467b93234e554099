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
import numpy as np
import pytest

from model import ModelParams, zeta


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow Monte Carlo tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


BASE = {"mu": 3.0, "sigma": 2.0, "r": 0.2, "d": 5.0, "u0": 3.0}


@pytest.fixture
def base_params():
    """ beta = 1 > zeta = 0.757105: dividends dominate. """
    return ModelParams(**BASE, beta=1.0)


@pytest.fixture
def sensitive_params():
    """ beta = 0.5 < zeta: threshold strategy. """
    return ModelParams(**BASE, beta=0.5)


def random_parameter_sets(n, dividend_dominated, seed=7):
    """ Parameter sets with beta a random multiple of zeta on the requested side of it. """
    rng = np.random.default_rng(seed)
    sets = []
    for _ in range(n):
        p = ModelParams(mu=rng.uniform(-1.0, 4.0), sigma=rng.uniform(0.8, 3.0), r=rng.uniform(0.1, 0.5),
                        d=rng.uniform(1.0, 6.0), u0=rng.uniform(0.5, 5.0), beta=1.0)
        factor = rng.uniform(1.1, 3.0) if dividend_dominated else rng.uniform(0.2, 0.9)
        sets.append(p.replace(beta=zeta(p) * factor))
    return sets


## exponent times d beyond the double range of exp: a*d on the dividend side (mu > 0), b*d on the
## penalty side (mu < 0); each base set comes with the multiple of zeta used as beta
STEEP = [({"mu": 3.0, "sigma": 0.5, "r": 0.2, "d": 30.0, "u0": 3.0}, 0.01),
         ({"mu": 3.0, "sigma": 0.5, "r": 0.2, "d": 80.0, "u0": 3.0}, 0.01),
         ({"mu": -3.0, "sigma": 0.5, "r": 0.2, "d": 40.0, "u0": 3.0}, 0.5),
         ({"mu": -3.0, "sigma": 0.5, "r": 0.2, "d": 40.0, "u0": 3.0}, 0.1),
         ({"mu": -2.0, "sigma": 0.5, "r": 0.2, "d": 60.0, "u0": 3.0}, 0.5)]


def steep_parameter_sets():
    """ Drawdown-sensitive sets whose exponents overflow exp when multiplied by d. """
    sets = []
    for base, factor in STEEP:
        p = ModelParams(**base, beta=1.0)
        sets.append(p.replace(beta=zeta(p) * factor))
    return sets
