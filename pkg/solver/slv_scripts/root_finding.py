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
from typing import Callable, Optional

from scipy.optimize import bisect

from model import RootNotBracketedError, NonConvergenceError
from .. import settings

logger = logging.getLogger(__name__)


def bracketed_bisection(func: Callable[[float], float], lo: float, hi: float, label: str,
                        rtol: Optional[float] = None) -> float:
    """
        Root of a monotone func on [lo, hi] by bisection, to the relative interval tolerance rtol
        (settings.BISECTION_RTOL by default). An endpoint that is an exact root is returned as is.
        Infinite endpoint values are fine as long as their sign is right.
    """
    f_lo, f_hi = func(lo), func(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo < 0.0) == (f_hi < 0.0):
        raise RootNotBracketedError(f"{label}: no sign change on [{lo!r}, {hi!r}] "
                                    f"(f(lo)={f_lo!r}, f(hi)={f_hi!r})")
    rtol = settings.BISECTION_RTOL if rtol is None else rtol
    root, info = bisect(func, lo, hi, xtol=settings.BISECTION_XTOL, rtol=rtol,
                        maxiter=settings.BISECTION_MAX_ITER, full_output=True, disp=False)
    if not info.converged:
        raise NonConvergenceError(f"{label}: bisection stopped after {info.iterations} iterations "
                                  f"({info.flag})")
    logger.debug(f"{label}: root {root!r} after {info.iterations} iterations")
    return root


def halve_until(func: Callable[[float], float], start: float, label: str) -> float:
    """ Halve start toward 0 until func turns negative. """
    z = start
    for _ in range(settings.BRACKET_MAX_STEPS):
        if func(z) < 0.0:
            return z
        z /= 2.0
    raise RootNotBracketedError(f"{label}: no lower bracket after {settings.BRACKET_MAX_STEPS} halvings")


def expand_until(func: Callable[[float], float], origin: float, width: float, label: str) -> float:
    """ Double the distance from origin, starting at width, until func turns positive. """
    for _ in range(settings.BRACKET_MAX_STEPS):
        if func(origin + width) > 0.0:
            return origin + width
        width *= 2.0
    raise RootNotBracketedError(f"{label}: no upper bracket after {settings.BRACKET_MAX_STEPS} doublings")
