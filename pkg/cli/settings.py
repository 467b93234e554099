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

VERSION = '1.0.0'

## default output directory of every command that writes files
OUTPUT_DIR = os.getenv('DRAWDOWN_OUTPUT_DIR', 'output').strip()
LOG_LEVEL = os.getenv('DRAWDOWN_LOG_LEVEL', 'WARNING').strip().upper()

SOLVE_GRID_N = int(os.getenv('DRAWDOWN_SOLVE_GRID_N', 2001))
SUMMARY_DIGITS = int(os.getenv('DRAWDOWN_SUMMARY_DIGITS', 9))

## exit codes
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_VALIDATION = 2
EXIT_SOLVER = 3
EXIT_STRATEGY_SOLVER = 4
