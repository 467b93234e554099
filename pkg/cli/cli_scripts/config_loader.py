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
from typing import Callable, Dict, List

from model import InvalidParameterError

logger = logging.getLogger(__name__)

MODEL_FIELDS = ("mu", "sigma", "r", "d", "u0", "beta")

## named parameter sets, selectable with --preset
PRESETS = {
    "value-base": {"mu": 3.0, "sigma": 2.0, "r": 0.2, "d": 5.0, "u0": 3.0, "beta": 1.0},
    "value-sensitive": {"mu": 3.0, "sigma": 2.0, "r": 0.2, "d": 5.0, "u0": 3.0, "beta": 0.5},
    "paths-low-rate": {"mu": 3.0, "sigma": 2.0, "r": 0.2, "d": 2.0, "u0": 2.0, "beta": 0.15},
    "paths-high-rate": {"mu": 3.0, "sigma": 2.0, "r": 0.2, "d": 2.0, "u0": 4.0, "beta": 0.15},
}


def float_list(text) -> List[float]:
    """ '0.5,0.7,0.75' -> [0.5, 0.7, 0.75] """
    if isinstance(text, (list, tuple)):
        return [float(value) for value in text]
    return [float(value) for value in str(text).split(",") if value.strip()]


def float_range(text) -> List[float]:
    """ 'a,b,n' -> n evenly spaced values from a to b """
    values = str(text).split(",")
    if len(values) != 3:
        raise InvalidParameterError(f"expected a range 'start,stop,count', got {text!r}")
    start, stop, count = float(values[0]), float(values[1]), int(values[2])
    if count < 2:
        return [start]
    step = (stop - start) / (count - 1)
    return [start + i * step for i in range(count)]


def read_config_file(path: Path, option_types: Dict[str, Callable]) -> dict:
    """
        key=value lines, '#' starts a comment. Keys are flag names without the leading dashes,
        with '-' and '_' interchangeable; values are cast with the flag's type.
    """
    options = {}
    with open(path, encoding="utf-8") as config_file:
        for number, line in enumerate(config_file, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InvalidParameterError(f"{path}:{number}: expected key=value, got {line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.lstrip("-").replace("-", "_")
            if key not in option_types:
                raise InvalidParameterError(f"{path}:{number}: unknown option --{key.replace('_', '-')}")
            try:
                options[key] = option_types[key](value)
            except ValueError as err:
                raise InvalidParameterError(f"{path}:{number}: invalid value for --{key.replace('_', '-')}: {err}")
    logger.info(f"read {len(options)} options from {path}")
    return options
