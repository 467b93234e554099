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
import json
import logging
from pathlib import Path

from .abstract_classes import McEstimate, PathRecord

logger = logging.getLogger(__name__)


def write_path(record: PathRecord, path: Path) -> Path:
    record.to_frame().to_csv(path, index=False, float_format="%.17g")
    logger.info(f"wrote path with {len(record.times)} rows to {path}")
    return path


def write_estimate(estimate: McEstimate, path: Path) -> Path:
    Path(path).write_text(json.dumps(estimate.to_dict(), indent=2), encoding="utf-8")
    logger.info(f"wrote estimate to {path}")
    return path
