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
from typing import List, Optional

import numpy as np

from model import EvaluationDomainError, InvalidParameterError
from .. import settings
from .abstract_classes import GridSpec, HjbResidualReport, PastingGap, SolvedValueFunction, StructuralReport

logger = logging.getLogger(__name__)


def evaluate(svf: SolvedValueFunction, z, order: int = 0):
    """
        v(z), v'(z) or v''(z) from the owning segment; z may be a scalar or an array.
        Segment k owns (hi_{k-1}, hi_k] so that d belongs to the piece on its left and v''(d) is
        the left limit.
    """
    if order not in (0, 1, 2):
        raise InvalidParameterError(f"derivative order must be 0, 1 or 2, got {order!r}")
    z_array = np.asarray(z, dtype=float)
    if np.any(np.isnan(z_array)) or np.any(z_array < 0.0):
        raise EvaluationDomainError("the value function is defined for drawdowns z >= 0 only")

    flat = np.atleast_1d(z_array).ravel()
    owner = np.searchsorted(svf.upper_edges, flat, side='left')
    result = np.empty_like(flat)
    for index, segment in enumerate(svf.segments):
        mask = owner == index
        if np.any(mask):
            result[mask] = segment.value(flat[mask], order)

    if z_array.ndim == 0:
        return float(result[0])
    return result.reshape(z_array.shape)


def optimal_rate(svf: SolvedValueFunction, z):
    """ Feedback rate u0 on [0, z_f] and [z_g, inf), 0 in between. """
    z_array = np.asarray(z, dtype=float)
    if np.any(z_array < 0.0):
        raise EvaluationDomainError("the feedback rate is defined for drawdowns z >= 0 only")
    if svf.constant_rate is not None:
        rates = np.full(z_array.shape, float(svf.constant_rate))
    else:
        pays = (z_array <= svf.z_f) | (z_array >= svf.z_g)
        rates = np.where(pays, svf.params.u0, 0.0)
    if rates.ndim == 0:
        return float(rates)
    return rates


def pasting_gaps(svf: SolvedValueFunction) -> List[PastingGap]:
    """ Jumps of v and v' at every junction, each piece evaluated by its own closed form. """
    gaps = []
    for left, right in zip(svf.segments[:-1], svf.segments[1:]):
        z = left.hi
        value_gap = abs(float(left.value(z, 0)) - float(right.value(z, 0)))
        derivative_gap = abs(float(left.value(z, 1)) - float(right.value(z, 1)))
        gaps.append(PastingGap(z=z, value_gap=value_gap, derivative_gap=derivative_gap))
    return gaps


def hjb_residual(svf: SolvedValueFunction, grid_spec: Optional[GridSpec] = None) -> HjbResidualReport:
    """
        Pointwise HJB residual
            max over u in {0, u0} of [-r v - mu v' + sigma^2/2 v'' + (beta + v') u] - 1{z > d}
        on a uniform grid, plus the junction gaps and the boundary condition v'(0) = 0.
        The supremum over [0, u0] sits at an endpoint since the bracket is affine in u.
    """
    p = svf.params
    grid_spec = grid_spec or GridSpec()
    z_max = grid_spec.z_max if grid_spec.z_max is not None else svf.z_g + settings.RESIDUAL_TAIL
    n = grid_spec.n if grid_spec.n is not None else settings.RESIDUAL_GRID_N
    exclude = grid_spec.exclude if grid_spec.exclude is not None else settings.RESIDUAL_EXCLUDE

    grid = np.linspace(0.0, z_max, n)
    grid = grid[np.abs(grid - p.d) >= exclude]
    v = evaluate(svf, grid, 0)
    v_prime = evaluate(svf, grid, 1)
    v_second = evaluate(svf, grid, 2)

    no_dividend = -p.r * v - p.mu * v_prime + 0.5 * p.sigma ** 2 * v_second
    full_dividend = no_dividend + (p.beta + v_prime) * p.u0
    residuals = np.maximum(no_dividend, full_dividend) - (grid > p.d)

    abs_residuals = np.abs(residuals)
    worst = int(np.argmax(abs_residuals))
    max_grid_residual = float(abs_residuals[worst])
    gaps = pasting_gaps(svf)
    boundary_defect = abs(evaluate(svf, 0.0, 1))
    max_abs_residual = max([max_grid_residual, boundary_defect]
                           + [max(gap.value_gap, gap.derivative_gap) for gap in gaps])
    logger.debug(f"HJB residual {max_grid_residual!r} at z={float(grid[worst])!r}, overall {max_abs_residual!r}")
    return HjbResidualReport(grid=grid, residuals=residuals, max_abs_residual=max_abs_residual, excluded=exclude,
                             max_grid_residual=max_grid_residual, argmax_z=float(grid[worst]),
                             pasting_gaps=gaps, boundary_defect=boundary_defect)


def structural_report(svf: SolvedValueFunction, grid=None) -> StructuralReport:
    """
        Monotonicity, bounds, boundary slope and the slope sign structure relative to -beta.
        The default grid stops where the tail is within exp(-10) of its limit.
    """
    p = svf.params
    if grid is None:
        tail_rate = svf.segments[-1].theta2
        grid = np.linspace(0.0, svf.z_g + 10.0 / tail_rate, settings.STRUCTURE_GRID_N)
    grid = np.unique(np.asarray(grid, dtype=float))
    v = evaluate(svf, grid, 0)
    v_prime = evaluate(svf, grid, 1)

    rate = svf.constant_rate if svf.constant_rate is not None else p.u0
    lower, upper = (p.beta * rate - 1.0) / p.r, p.beta * rate / p.r
    scale = max(1.0, abs(lower), abs(upper))
    worst_bound_violation = float(max(0.0, np.max(lower - v), np.max(v - upper)))

    if svf.constant_rate is None:
        pays = (grid <= svf.z_f) | (grid >= svf.z_g)
        withholds = (grid > svf.z_f) & (grid < svf.z_g)
        sign_violation = max(0.0,
                             float(np.max(-p.beta - v_prime[pays], initial=0.0)),
                             float(np.max(v_prime[withholds] + p.beta, initial=0.0)))
    else:
        sign_violation = 0.0

    gaps = pasting_gaps(svf)
    ## v can be flat below double resolution near 0, so strictness is read off v' < 0 for z > 0
    rounding = 4.0 * np.finfo(float).eps * np.maximum(1.0, np.abs(v[1:]))
    decreasing = bool(np.all(np.diff(v) <= rounding) and np.all(v_prime[grid > 0.0] < 0.0))
    return StructuralReport(decreasing=decreasing,
                            within_bounds=worst_bound_violation <= 1e-9 * scale,
                            boundary_derivative=abs(evaluate(svf, 0.0, 1)),
                            sign_structure=sign_violation <= settings.DERIVATIVE_SLACK,
                            max_pasting_gap=max((max(gap.value_gap, gap.derivative_gap) for gap in gaps),
                                                default=0.0),
                            worst_bound_violation=worst_bound_violation,
                            worst_sign_violation=sign_violation)


def perturb_coefficient(svf: SolvedValueFunction, factor: float, index: Optional[int] = None) -> SolvedValueFunction:
    """
        Copy of svf with coefA of one segment scaled by factor; by default the first segment
        with a nonzero coefA. Only used to check that the residual report catches wrong solutions.
    """
    if index is None:
        index = next(i for i, segment in enumerate(svf.segments) if segment.coefA != 0.0)
    segments = list(svf.segments)
    segments[index] = segments[index]._replace(coefA=segments[index].coefA * factor)
    return svf._replace(segments=tuple(segments))
