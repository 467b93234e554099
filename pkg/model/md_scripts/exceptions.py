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
class DrawdownModelError(Exception):
    """ Base class of every error raised by the model, solver and simulator packages. """
    pass


class InvalidParameterError(DrawdownModelError, ValueError):
    """ A rate, order or other argument lies outside the domain of the operation. """
    pass


class RegimeMismatchError(DrawdownModelError):
    """ A regime-specific construction was requested for parameters of the other regime. """
    pass


class RootNotBracketedError(DrawdownModelError):
    """ A monotone objective does not change sign on the search interval. """
    pass


class NonConvergenceError(DrawdownModelError):
    """ A bisection hit its iteration cap before reaching the interval tolerance. """
    pass


class EvaluationDomainError(DrawdownModelError, ValueError):
    """ The value function was evaluated at a negative drawdown. """
    pass
