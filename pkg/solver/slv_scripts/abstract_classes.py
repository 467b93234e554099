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
import json
import math
from enum import Enum
from typing import Optional

import numpy as np
from typing_extensions import Self

from model import ModelParams, Regime, RegimeTag, classify, exponents, xi_thresholds


class SegmentKind(str, Enum):
    FBAR = "FBar"
    FUNDER = "FUnder"
    GUNDER = "GUnder"
    GBAR = "GBar"


class Segment(collections.namedtuple("Segment", ("kind", "lo", "hi", "rate", "offset", "coefA", "coefB",
                                                 "anchor", "theta1", "theta2"))):
    """
        One closed-form piece of the value function on [lo, hi] (hi is inf for the tail):
            offset + coefA*exp(theta1*(z - anchor)) + coefB*exp(-theta2*(z - lo))
        with theta1, theta2 the exponents at the segment's dividend rate. anchor is hi for bounded
        pieces and lo for the tail, whose coefA is 0.
    """

    def value(self, z, order: int = 0):
        z = np.asarray(z, dtype=float)
        result = np.full(z.shape, self.offset if order == 0 else 0.0)
        ## zero coefficients are skipped so that inf*0 never shows up far in the tail
        if self.coefA != 0.0:
            result = result + self.coefA * self.theta1 ** order * np.exp(self.theta1 * (z - self.anchor))
        if self.coefB != 0.0:
            result = result + self.coefB * (-self.theta2) ** order * np.exp(-self.theta2 * (z - self.lo))
        return result

    def to_dict(self) -> dict:
        return {"kind": self.kind.value,
                "lo": float(self.lo),
                "hi": None if math.isinf(self.hi) else float(self.hi),
                "rate": float(self.rate),
                "offset": float(self.offset),
                "coefA": float(self.coefA),
                "coefB": float(self.coefB),
                "anchor": float(self.anchor)}

    @classmethod
    def from_dict(cls, params: ModelParams, segment_dict: dict) -> Self:
        ex = exponents(params, segment_dict["rate"])
        hi = segment_dict["hi"]
        return cls(kind=SegmentKind(segment_dict["kind"]), lo=segment_dict["lo"],
                   hi=math.inf if hi is None else hi, rate=segment_dict["rate"],
                   offset=segment_dict["offset"], coefA=segment_dict["coefA"], coefB=segment_dict["coefB"],
                   anchor=segment_dict["anchor"], theta1=ex.theta1, theta2=ex.theta2)


class SolvedValueFunction(collections.namedtuple("SolvedValueFunction", ("params", "regime", "thresholds", "C",
                                                                         "z_f", "z_g", "segments",
                                                                         "constant_rate"))):
    """
        Piecewise closed form of a value function on [0, inf).
        segments are ordered and cover [0, z_0], (z_0, z_1], ..., (z_k, inf).
        constant_rate is None for the optimal value function and the paid rate for the value of
        a constant strategy.
    """

    @property
    def zeta(self) -> float:
        return self.thresholds.zeta

    @property
    def xi1(self) -> float:
        return self.thresholds.xi1

    @property
    def xi2(self) -> float:
        return self.thresholds.xi2

    @property
    def upper_edges(self) -> np.ndarray:
        return np.array([segment.hi for segment in self.segments], dtype=float)

    def to_dict(self) -> dict:
        document = {"params": {name: float(value) for name, value in self.params.model_dump().items()},
                    "regime": self.regime.tag.value,
                    "zeta": float(self.zeta),
                    "xi1": float(self.xi1),
                    "xi2": float(self.xi2),
                    "C": float(self.C),
                    "z_f": float(self.z_f),
                    "z_g": float(self.z_g),
                    "segments": [segment.to_dict() for segment in self.segments]}
        if self.constant_rate is not None:
            document["constant_rate"] = float(self.constant_rate)
        return document

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, document: dict) -> Self:
        params = ModelParams(**document["params"])
        regime = classify(params)
        if regime.tag.value != document["regime"]:
            regime = Regime(tag=RegimeTag(document["regime"]), boundary=regime.boundary)
        thresholds = xi_thresholds(params)
        segments = tuple(Segment.from_dict(params, segment_dict) for segment_dict in document["segments"])
        return cls(params=params, regime=regime, thresholds=thresholds, C=document["C"],
                   z_f=document["z_f"], z_g=document["z_g"], segments=segments,
                   constant_rate=document.get("constant_rate"))

    @classmethod
    def from_json(cls, text: str) -> Self:
        return cls.from_dict(json.loads(text))


class PastingGap(collections.namedtuple("PastingGap", ("z", "value_gap", "derivative_gap"))):
    """ Absolute jumps of v and v' where two segments meet. """
    pass


class GridSpec(collections.namedtuple("GridSpec", ("z_max", "n", "exclude"), defaults=(None, None, None))):
    """
        Uniform residual grid on [0, z_max] with n points, minus the open band of half-width exclude
        around d. None picks the solver settings (z_max defaults to z_g plus a fixed tail).
    """
    pass


class HjbResidualReport(collections.namedtuple("HjbResidualReport", ("grid", "residuals", "max_abs_residual",
                                                                     "excluded", "max_grid_residual", "argmax_z",
                                                                     "pasting_gaps", "boundary_defect"))):
    """
        HJB residual on a grid together with the junction and boundary conditions of the solution.
        max_abs_residual is the worst of the grid residual, every pasting gap and |v'(0)|.
    """

    def passed(self, threshold: float) -> bool:
        return bool(self.max_abs_residual <= threshold)


class StructuralReport(collections.namedtuple("StructuralReport", ("decreasing", "within_bounds",
                                                                   "boundary_derivative", "sign_structure",
                                                                   "max_pasting_gap", "worst_bound_violation",
                                                                   "worst_sign_violation"))):
    """ Qualitative shape checks of a solved value function on a dense grid. """

    @property
    def ok(self) -> bool:
        return bool(self.decreasing and self.within_bounds and self.sign_structure)
