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

## default discretisation
DEFAULT_DT = float(os.getenv('DRAWDOWN_DEFAULT_DT', 1e-3))
DEFAULT_HORIZON = float(os.getenv('DRAWDOWN_DEFAULT_HORIZON', 60.0))
DEFAULT_N_PATHS = int(os.getenv('DRAWDOWN_DEFAULT_N_PATHS', 20000))
DEFAULT_SEED = int(os.getenv('DRAWDOWN_DEFAULT_SEED', 20240101))

## paths advanced together, and time steps of noise drawn per path at once
BATCH_SIZE = int(os.getenv('DRAWDOWN_BATCH_SIZE', 2000))
NOISE_CHUNK = int(os.getenv('DRAWDOWN_NOISE_CHUNK', 500))

## parallel mode: batches are spread over worker threads when there are at least PARALLEL_MIN of them
PARALLEL_MODE = os.getenv('DRAWDOWN_PARALLEL_MODE', 'false').strip().lower() == 'true'
PARALLEL_MIN = int(os.getenv('DRAWDOWN_PARALLEL_MIN', 2))
N_WORKERS = int(os.getenv('DRAWDOWN_N_WORKERS', 4))

SHOW_PROGRESS = os.getenv('DRAWDOWN_SHOW_PROGRESS', 'false').strip().lower() == 'true'
