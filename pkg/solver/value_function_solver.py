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
from typing import Optional

from model import (ModelParams, InvalidParameterError, NonConvergenceError, RegimeMismatchError,
                   RootNotBracketedError, RegimeTag, classify, xi_thresholds)
from model import settings as model_settings
from . import settings
from .slv_scripts.abstract_classes import SolvedValueFunction
from .slv_scripts.closed_forms import (rate_exponents, constant_rate_segments, fbar_segment, funder_segment,
                                       gunder_segment, gbar_segment, zf_pasting_rhs, zg_pasting_rhs,
                                       f_lower_derivative, g_lower_derivative)
from .slv_scripts.root_finding import bracketed_bisection, halve_until, expand_until

logger = logging.getLogger(__name__)


def _threshold_tol(value: float) -> float:
    return model_settings.TOL_CLASSIFY * max(1.0, abs(value))


def zf_of_C(p: ModelParams, C: float, rtol: Optional[float] = None) -> float:
    """
        Lower threshold z_f in (0, d]: the point where the rate-0 piece with value C at d touches
        the rate-u0 piece with second-order contact. C equal to xi1 gives z_f = d.
    """
    ex = rate_exponents(p)
    xi1 = xi_thresholds(p).xi1
    if C > xi1 + _threshold_tol(xi1):
        raise RootNotBracketedError(f"C={C!r} exceeds xi1={xi1!r}, no lower threshold exists")
    objective = lambda z: zf_pasting_rhs(p, ex, z) - C
    if objective(p.d) <= 0.0:
        return p.d
    lo = halve_until(objective, p.d / 2.0, "z_f lower bracket")
    return bracketed_bisection(objective, lo, p.d, "z_f", rtol)


def zg_of_C(p: ModelParams, C: float, rtol: Optional[float] = None) -> float:
    """
        Upper threshold z_g in [d, inf), mirror image of zf_of_C on the penalised side.
        C equal to xi2 gives z_g = d. The bracket search starts one decay length 1/b above d.
    """
    ex = rate_exponents(p)
    xi2 = xi_thresholds(p).xi2
    if C < xi2 - _threshold_tol(xi2):
        raise RootNotBracketedError(f"C={C!r} is below xi2={xi2!r}, no upper threshold exists")
    objective = lambda z: zg_pasting_rhs(p, ex, z) - C
    if objective(p.d) >= 0.0:
        return p.d
    hi = expand_until(objective, p.d, min(p.d, 1.0 / ex.b), "z_g upper bracket")
    return bracketed_bisection(objective, p.d, hi, "z_g", rtol)


def f_derivative_at_d(p: ModelParams, C: float, rtol: Optional[float] = None) -> float:
    """ Left slope at d of the value function candidate with v(d) = C. """
    return f_lower_derivative(p, rate_exponents(p), zf_of_C(p, C, rtol))


def g_derivative_at_d(p: ModelParams, C: float, rtol: Optional[float] = None) -> float:
    """ Right slope at d of the value function candidate with v(d) = C. """
    return g_lower_derivative(p, rate_exponents(p), zg_of_C(p, C, rtol))


def constant_strategy_value(p: ModelParams, u: float) -> SolvedValueFunction:
    """
        Value of paying dividends at the constant rate u forever (u = u0 is the optimum when
        beta >= zeta). The result is a strategy value, not necessarily the optimal one.
    """
    if not 0.0 <= u <= p.u0:
        raise InvalidParameterError(f"constant rate u={u} is outside [0, u0={p.u0}]")
    segments, C = constant_rate_segments(p, u)
    return SolvedValueFunction(params=p, regime=classify(p), thresholds=xi_thresholds(p), C=C, z_f=p.d, z_g=p.d,
                               segments=segments, constant_rate=u)


def dividend_dominated_solution(p: ModelParams) -> SolvedValueFunction:
    """ Closed-form value function for beta >= zeta: dividends at rate u0 at every drawdown. """
    regime = classify(p)
    if not regime.is_dividend_dominated:
        raise RegimeMismatchError(f"beta={p.beta!r} is below zeta={xi_thresholds(p).zeta!r}, "
                                  f"the maximal rate is not optimal everywhere")
    segments, C = constant_rate_segments(p, p.u0)
    if regime.boundary:
        logger.warning(f"beta={p.beta!r} on the regime boundary, using the constant-rate closed form")
    logger.info(f"dividend-dominated solution, C={C!r}")
    return SolvedValueFunction(params=p, regime=regime, thresholds=xi_thresholds(p), C=C, z_f=p.d, z_g=p.d,
                               segments=segments, constant_rate=None)


def _pasting_value(p: ModelParams, thresholds, rtol: float):
    """ C, z_f, z_g and the remaining smooth-pasting gap at d, every bisection run to rtol. """
    objective = lambda C: f_derivative_at_d(p, C, rtol) - g_derivative_at_d(p, C, rtol)
    C = bracketed_bisection(objective, thresholds.xi2, thresholds.xi1, "pasting value C", rtol)
    z_f, z_g = zf_of_C(p, C, rtol), zg_of_C(p, C, rtol)
    ex = rate_exponents(p)
    return C, z_f, z_g, abs(f_lower_derivative(p, ex, z_f) - g_lower_derivative(p, ex, z_g))


def drawdown_sensitive_solution(p: ModelParams) -> SolvedValueFunction:
    """
        Threshold solution for beta < zeta. The pasting value C = v(d) is the unique root in
        (xi2, xi1) of the strictly increasing map C -> f'_C(d) - g'_C(d); the thresholds follow
        from C and the four pieces are assembled around them.
        Bisection continues to machine precision while the slopes at d still differ by more than
        the pasting tolerance, and NonConvergenceError is raised if that does not close the gap.
    """
    regime = classify(p)
    if regime.tag is not RegimeTag.DRAWDOWN_SENSITIVE:
        raise RegimeMismatchError(f"beta={p.beta!r} is not below zeta, use the dividend-dominated closed form")
    thresholds = xi_thresholds(p)
    ex = rate_exponents(p)
    tolerance = settings.PASTING_TOL * max(1.0, p.beta)

    C, z_f, z_g, gap = _pasting_value(p, thresholds, settings.BISECTION_RTOL)
    if gap > tolerance:
        logger.info(f"smooth pasting gap {gap!r} at d after the first bisection, refining")
        C, z_f, z_g, gap = _pasting_value(p, thresholds, settings.BISECTION_FINE_RTOL)
    if gap > tolerance:
        raise NonConvergenceError(f"smooth pasting gap {gap!r} at d exceeds {tolerance!r} "
                                  f"at machine precision of C={C!r}")

    segments = (fbar_segment(p, ex, z_f),
                funder_segment(p, ex, C, z_f),
                gunder_segment(p, ex, C, z_g),
                gbar_segment(p, ex, z_g))
    logger.info(f"drawdown-sensitive solution, C={C!r}, z_f={z_f!r}, z_g={z_g!r}")
    return SolvedValueFunction(params=p, regime=regime, thresholds=thresholds, C=C, z_f=z_f, z_g=z_g,
                               segments=segments, constant_rate=None)


def solve(p: ModelParams) -> SolvedValueFunction:
    if classify(p).is_dividend_dominated:
        return dividend_dominated_solution(p)
    return drawdown_sensitive_solution(p)
