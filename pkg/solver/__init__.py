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
from .value_function_solver import (solve, dividend_dominated_solution, drawdown_sensitive_solution,
                                    constant_strategy_value, zf_of_C, zg_of_C, f_derivative_at_d, g_derivative_at_d)
from .slv_scripts.evaluation import evaluate, optimal_rate, hjb_residual, structural_report, pasting_gaps, perturb_coefficient
from .slv_scripts.abstract_classes import (SegmentKind, Segment, SolvedValueFunction, GridSpec, HjbResidualReport,
                                           PastingGap, StructuralReport)
from .slv_scripts.serialization import value_table, write_table, read_table, dump_solution, load_solution
