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
import os
import sys

## bisection
BISECTION_MAX_ITER = int(os.getenv('DRAWDOWN_BISECTION_MAX_ITER', 200))
BISECTION_RTOL = float(os.getenv('DRAWDOWN_BISECTION_RTOL', 1e-13))
BISECTION_XTOL = float(os.getenv('DRAWDOWN_BISECTION_XTOL', 1e-15))
BRACKET_MAX_STEPS = int(os.getenv('DRAWDOWN_BRACKET_MAX_STEPS', 200))
## repeated bisection once the pasting gap is too large, scipy needs at least 4 eps
BISECTION_FINE_RTOL = float(os.getenv('DRAWDOWN_BISECTION_FINE_RTOL', 4 * sys.float_info.epsilon))

## smooth pasting at d, scaled by max(1, beta)
PASTING_TOL = float(os.getenv('DRAWDOWN_PASTING_TOL', 1e-10))

## HJB residual check
RESIDUAL_EXCLUDE = float(os.getenv('DRAWDOWN_RESIDUAL_EXCLUDE', 1e-9))
RESIDUAL_GRID_N = int(os.getenv('DRAWDOWN_RESIDUAL_GRID_N', 10000))
RESIDUAL_TAIL = float(os.getenv('DRAWDOWN_RESIDUAL_TAIL', 20.0))
RESIDUAL_THRESHOLD = float(os.getenv('DRAWDOWN_RESIDUAL_THRESHOLD', 1e-8))

## structural checks
STRUCTURE_GRID_N = int(os.getenv('DRAWDOWN_STRUCTURE_GRID_N', 2001))
DERIVATIVE_SLACK = float(os.getenv('DRAWDOWN_DERIVATIVE_SLACK', 1e-8))
