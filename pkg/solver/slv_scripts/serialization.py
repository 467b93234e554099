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
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd

from .abstract_classes import SolvedValueFunction
from .evaluation import evaluate, optimal_rate

logger = logging.getLogger(__name__)

TABLE_COLUMNS = ["z", "v", "v_prime", "v_second", "u_star"]


def default_table_end(svf: SolvedValueFunction) -> float:
    """ z_g plus ten decay lengths of the tail. """
    return svf.z_g + 10.0 / svf.segments[-1].theta2


def value_table(svf: SolvedValueFunction, z_max: Optional[float] = None, n: int = 2001) -> pd.DataFrame:
    """ v, v', v'' and the feedback rate on a uniform grid of [0, z_max]. """
    grid = np.linspace(0.0, default_table_end(svf) if z_max is None else z_max, n)
    return pd.DataFrame({"z": grid,
                         "v": evaluate(svf, grid, 0),
                         "v_prime": evaluate(svf, grid, 1),
                         "v_second": evaluate(svf, grid, 2),
                         "u_star": optimal_rate(svf, grid)}, columns=TABLE_COLUMNS)


def write_table(table: pd.DataFrame, path: Path) -> Path:
    ## 17 significant digits read back bit-for-bit
    table.to_csv(path, index=False, float_format="%.17g")
    logger.info(f"wrote {len(table)} rows to {path}")
    return path


def read_table(path: Path) -> pd.DataFrame:
    return pd.read_csv(path, float_precision="round_trip")


def dump_solution(svf: SolvedValueFunction, path: Path) -> Path:
    Path(path).write_text(svf.to_json(), encoding="utf-8")
    logger.info(f"wrote solution to {path}")
    return path


def load_solution(path: Path) -> SolvedValueFunction:
    return SolvedValueFunction.from_json(Path(path).read_text(encoding="utf-8"))
