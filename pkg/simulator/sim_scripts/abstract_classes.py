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
import math
from enum import Enum

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self

from model import ModelParams, InvalidParameterError
from .. import settings


class SimConfig(BaseModel):
    """
        Monte Carlo settings.
        z0: initial drawdown, i.e. the surplus starts z0 below its past maximum.
        x0: initial surplus; the running maximum starts at x0 + z0.
        dt, horizon: Euler step and truncation time T.
        n_paths, seed: number of paths and root seed of the per-path substreams.
        record_paths, record_stride: keep the state of simulated paths, every record_stride steps.
        noise_scale: multiplies sigma in the update, 0 gives the deterministic dynamics.
    """
    model_config = ConfigDict(frozen=True, allow_inf_nan=False, extra='forbid')

    z0: float = Field(default=0.0, ge=0)
    x0: float = 0.0
    dt: float = Field(default=settings.DEFAULT_DT, gt=0)
    horizon: float = Field(default=settings.DEFAULT_HORIZON, gt=0)
    n_paths: int = Field(default=settings.DEFAULT_N_PATHS, ge=1)
    seed: int = Field(default=settings.DEFAULT_SEED, ge=0, lt=2 ** 64)
    record_paths: bool = False
    record_stride: int = Field(default=1, ge=1)
    noise_scale: float = Field(default=1.0, ge=0)

    @model_validator(mode='after')
    def check_step(self) -> Self:
        if self.dt > self.horizon:
            raise ValueError(f"dt={self.dt} exceeds horizon={self.horizon}")
        return self

    def replace(self, **changes) -> "SimConfig":
        values = self.model_dump()
        values.update(changes)
        return SimConfig(**values)

    @property
    def n_steps(self) -> int:
        return max(1, int(round(self.horizon / self.dt)))

    def truncation_bias_bound(self, p: ModelParams) -> float:
        """ Largest possible contribution of the payoff after the horizon. """
        return math.exp(-p.r * self.horizon) * max(p.beta * p.u0, 1.0) / p.r


class StrategyKind(str, Enum):
    ZERO = "Zero"
    MAX = "Max"
    CONST = "Const"
    FEEDBACK = "Feedback"


class StrategySpec(collections.namedtuple("StrategySpec", ("kind", "rate", "z_f", "z_g"),
                                          defaults=(None, None, None))):
    """
        Dividend policy: Zero, Max (rate u0), Const(rate) or Feedback(z_f, z_g) paying u0 when the
        drawdown is at most z_f or at least z_g and nothing in between.
    """

    @classmethod
    def zero(cls) -> Self:
        return cls(kind=StrategyKind.ZERO)

    @classmethod
    def maximal(cls) -> Self:
        return cls(kind=StrategyKind.MAX)

    @classmethod
    def constant(cls, rate: float) -> Self:
        return cls(kind=StrategyKind.CONST, rate=float(rate))

    @classmethod
    def feedback(cls, z_f: float, z_g: float) -> Self:
        return cls(kind=StrategyKind.FEEDBACK, z_f=float(z_f), z_g=float(z_g))

    @property
    def label(self) -> str:
        if self.kind is StrategyKind.CONST:
            return f"const:{self.rate!r}"
        if self.kind is StrategyKind.FEEDBACK:
            return f"feedback:{self.z_f!r},{self.z_g!r}"
        return self.kind.value.lower()

    def validate_for(self, p: ModelParams) -> None:
        if self.kind is StrategyKind.CONST and not 0.0 <= self.rate <= p.u0:
            raise InvalidParameterError(f"constant rate {self.rate} is outside [0, u0={p.u0}]")
        if self.kind is StrategyKind.FEEDBACK and not 0.0 < self.z_f <= p.d <= self.z_g:
            raise InvalidParameterError(f"feedback thresholds must satisfy 0 < z_f <= d <= z_g, "
                                        f"got z_f={self.z_f}, d={p.d}, z_g={self.z_g}")

    def rates(self, p: ModelParams, delta: np.ndarray):
        """ Dividend rate for each drawdown in delta; constant strategies return a scalar. """
        if self.kind is StrategyKind.ZERO:
            return 0.0
        if self.kind is StrategyKind.MAX:
            return p.u0
        if self.kind is StrategyKind.CONST:
            return self.rate
        return np.where((delta <= self.z_f) | (delta >= self.z_g), p.u0, 0.0)


PATH_COLUMNS = ["t", "X", "M", "Delta", "U", "D", "discounted_payoff_so_far"]


class PathRecord(collections.namedtuple("PathRecord", ("times", "X", "M", "Delta", "U", "D",
                                                       "discounted_payoff"))):
    """
        State of one simulated path at the recorded times. U is the rate chosen at each time for
        the following step; D and discounted_payoff are accumulated up to each time.
    """

    @property
    def payoff(self) -> float:
        return float(self.discounted_payoff[-1])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"t": self.times, "X": self.X, "M": self.M, "Delta": self.Delta, "U": self.U,
                             "D": self.D, "discounted_payoff_so_far": self.discounted_payoff},
                            columns=PATH_COLUMNS)


class McEstimate(collections.namedtuple("McEstimate", ("mean", "std_error", "n_paths", "truncation_bias_bound",
                                                       "dt", "horizon", "seed", "z0", "strategy",
                                                       "boundary_hit_fraction"))):
    """ Monte Carlo estimate of a strategy value at drawdown z0, with its configuration echoed. """

    def to_dict(self) -> dict:
        return {"mean": float(self.mean),
                "std_error": float(self.std_error),
                "n_paths": int(self.n_paths),
                "truncation_bias_bound": float(self.truncation_bias_bound),
                "dt": float(self.dt),
                "horizon": float(self.horizon),
                "seed": int(self.seed)}


class PayoffSample(collections.namedtuple("PayoffSample", ("payoffs", "boundary_hits", "steps"))):
    """ Per-path payoffs in path-index order with the count of steps that hit drawdown exactly d. """
    pass
