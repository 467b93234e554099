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
from typing import Iterable

import numpy as np

from . import settings
from .md_scripts.abstract_classes import ModelParams, Exponents, RegimeThresholds, RegimeTag, Regime
from .md_scripts.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


def exponents(p: ModelParams, u: float) -> Exponents:
    """
        Positive roots theta1, theta2 of -r - (mu-u)k + sigma^2/2 k^2 = 0 (theta1) and of
        -r + (mu-u)k + sigma^2/2 k^2 = 0 (theta2).
        The root without cancellation is taken from the discriminant, the other one from the
        product theta1*theta2 = 2r/sigma^2.
    """
    if not math.isfinite(u) or u < 0.0 or u > p.u0:
        raise InvalidParameterError(f"dividend rate u={u} is outside [0, u0={p.u0}]")
    drift = p.mu - u
    variance = p.sigma * p.sigma
    root = math.hypot(drift, math.sqrt(2.0 * p.r) * p.sigma)
    if drift >= 0:
        theta1 = (root + drift) / variance
        theta2 = 2.0 * p.r / (root + drift)
    else:
        theta2 = (root - drift) / variance
        theta1 = 2.0 * p.r / (root - drift)
    return Exponents(u=u, theta1=theta1, theta2=theta2)


def zeta(p: ModelParams) -> float:
    """ Critical dividend weight separating constant maximal payment from threshold payment. """
    ex = exponents(p, p.u0)
    total = ex.theta1 + ex.theta2
    return ex.theta1 * ex.theta2 * -math.expm1(-total * p.d) / (p.r * total)


def xi_thresholds(p: ModelParams) -> RegimeThresholds:
    """ zeta together with the bracket endpoints xi1 (upper) and xi2 (lower) of the pasting value. """
    ex = exponents(p, p.u0)
    t1, t2 = ex.theta1, ex.theta2
    total = t1 + t2
    decay = math.exp(-total * p.d)
    one_minus_decay = -math.expm1(-total * p.d)

    zeta_value = t1 * t2 * one_minus_decay / (p.r * total)
    xi1 = p.upper_bound - p.beta * (1.0 + (t1 / t2) * decay) / (t1 * one_minus_decay)
    xi2 = p.lower_bound + p.beta / t2
    return RegimeThresholds(zeta=zeta_value, xi1=xi1, xi2=xi2)


def classify(p: ModelParams) -> Regime:
    zeta_value = zeta(p)
    tol = settings.TOL_CLASSIFY * zeta_value
    boundary = abs(p.beta - zeta_value) <= tol
    if p.beta >= zeta_value - tol:
        tag = RegimeTag.DIVIDEND_DOMINATED
    else:
        tag = RegimeTag.DRAWDOWN_SENSITIVE
    if boundary:
        logger.info(f"beta={p.beta!r} lies on the regime boundary zeta={zeta_value!r}")
    return Regime(tag=tag, boundary=boundary)


def zeta_curve(p: ModelParams, u0_values: Iterable[float]) -> np.ndarray:
    """ zeta as a function of the maximal dividend rate, all other parameters fixed. """
    return np.array([zeta(p.replace(u0=float(u0))) for u0 in u0_values], dtype=float)
