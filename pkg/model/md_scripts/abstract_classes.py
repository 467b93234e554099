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
import collections
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class ModelParams(BaseModel):
    """
        The six scalars of the drawdown dividend problem.
        mu: drift of the surplus per unit time (any sign).
        sigma: volatility per square root of time.
        r: discount rate.
        d: critical drawdown level above which the penalty runs.
        u0: maximal dividend rate.
        beta: weight of dividends against the penalty.
        Instances are frozen; NaN and infinite values are rejected at construction.
    """
    model_config = ConfigDict(frozen=True, allow_inf_nan=False, extra='forbid')

    mu: float
    sigma: float = Field(gt=0)
    r: float = Field(gt=0)
    d: float = Field(gt=0)
    u0: float = Field(gt=0)
    beta: float = Field(gt=0)

    def replace(self, **changes) -> "ModelParams":
        """ Validated copy with some parameters changed. """
        values = self.model_dump()
        values.update(changes)
        return ModelParams(**values)

    @property
    def upper_bound(self) -> float:
        """ beta*u0/r, the value of paying u0 forever without penalty. """
        return self.beta * self.u0 / self.r

    @property
    def lower_bound(self) -> float:
        """ (beta*u0 - 1)/r, the value of paying u0 forever under permanent penalty. """
        return (self.beta * self.u0 - 1.0) / self.r


class Exponents(collections.namedtuple("Exponents", ("u", "theta1", "theta2"))):
    """
        Magnitudes of the two characteristic roots at dividend rate u:
        theta1 multiplies the growing exponential, theta2 the decaying one.
    """
    pass


class RegimeThresholds(collections.namedtuple("RegimeThresholds", ("zeta", "xi1", "xi2"))):
    """ Critical dividend weight zeta and the bracket [xi2, xi1] of the pasting value C. """
    pass


class RegimeTag(str, Enum):
    DIVIDEND_DOMINATED = "DividendDominated"
    DRAWDOWN_SENSITIVE = "DrawdownSensitive"


class Regime(collections.namedtuple("Regime", ("tag", "boundary"))):
    """ Regime tag plus a flag set when beta lies within the classification band around zeta. """

    @property
    def is_dividend_dominated(self) -> bool:
        return self.tag is RegimeTag.DIVIDEND_DOMINATED
