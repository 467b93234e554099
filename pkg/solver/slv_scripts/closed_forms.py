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
import sys

from model import ModelParams, exponents
from .abstract_classes import Segment, SegmentKind

## Closed forms of the four solution pieces and of the pasting equations that tie them together.
## Every piece stores its growing exponential anchored at its right end and its decaying one at its
## left end, so exp never sees a positive argument inside the piece.
## a, b are the exponents at rate 0 and t1, t2 the exponents at rate u0.

## largest argument of exp with a finite result
LOG_MAX = math.log(sys.float_info.max)


class RateExponents(collections.namedtuple("RateExponents", ("a", "b", "t1", "t2"))):
    """ Exponents at rate 0 (a, b) and at the maximal rate (t1, t2). """
    pass


def rate_exponents(p: ModelParams) -> RateExponents:
    zero, full = exponents(p, 0.0), exponents(p, p.u0)
    return RateExponents(a=zero.theta1, b=zero.theta2, t1=full.theta1, t2=full.theta2)


def _decay(ex: RateExponents, z: float):
    """ exp(-(t1+t2)z) and 1 - exp(-(t1+t2)z) """
    total = ex.t1 + ex.t2
    return math.exp(-total * z), -math.expm1(-total * z)


def scaled_exp(exponent: float, scale: float) -> float:
    """ scale*exp(exponent) for scale > 0, computed in log form; inf once it leaves the double range. """
    log_value = exponent + math.log(scale)
    if log_value >= LOG_MAX:
        return math.inf
    return math.exp(log_value)


## ---------------------------------------------------------------------------------------------
## constant strategy
def constant_rate_segments(p: ModelParams, u: float):
    """
        Value of paying the constant rate u forever: one piece on [0, d] with zero derivative at 0
        and a decaying tail on (d, inf), pasted C1 at d. Returns (segments, C).
    """
    ex = exponents(p, u)
    t1, t2 = ex.theta1, ex.theta2
    total = t1 + t2
    one_minus_decay = -math.expm1(-total * p.d)

    head = Segment(kind=SegmentKind.FBAR, lo=0.0, hi=p.d, rate=u, offset=p.beta * u / p.r,
                   coefA=-t2 / (p.r * total), coefB=-t1 * math.exp(-t1 * p.d) / (p.r * total), anchor=p.d,
                   theta1=t1, theta2=t2)
    tail = Segment(kind=SegmentKind.GBAR, lo=p.d, hi=math.inf, rate=u, offset=(p.beta * u - 1.0) / p.r,
                   coefA=0.0, coefB=t1 * one_minus_decay / (p.r * total), anchor=p.d, theta1=t1, theta2=t2)
    return (head, tail), float(head.value(p.d))


## ---------------------------------------------------------------------------------------------
## drawdown-sensitive pieces
def fbar_segment(p: ModelParams, ex: RateExponents, z_f: float) -> Segment:
    """ Rate-u0 piece on [0, z_f] with v'(0) = 0 and v'(z_f) = -beta. """
    _, one_minus_decay = _decay(ex, z_f)
    return Segment(kind=SegmentKind.FBAR, lo=0.0, hi=z_f, rate=p.u0, offset=p.upper_bound,
                   coefA=-p.beta / (ex.t1 * one_minus_decay),
                   coefB=-p.beta * math.exp(-ex.t1 * z_f) / (ex.t2 * one_minus_decay),
                   anchor=z_f, theta1=ex.t1, theta2=ex.t2)


def funder_segment(p: ModelParams, ex: RateExponents, C: float, z_f: float) -> Segment:
    """ Rate-0 piece on (z_f, d] with v(d) = C and v'(z_f) = -beta. """
    a, b = ex.a, ex.b
    width = p.d - z_f
    at_d = (C * b - p.beta * math.exp(-b * width)) / (a * math.exp(-(a + b) * width) + b)
    return Segment(kind=SegmentKind.FUNDER, lo=z_f, hi=p.d, rate=0.0, offset=0.0, coefA=at_d,
                   coefB=(p.beta + a * at_d * math.exp(-a * width)) / b, anchor=p.d, theta1=a, theta2=b)


def gunder_segment(p: ModelParams, ex: RateExponents, C: float, z_g: float) -> Segment:
    """ Rate-0 piece on (d, z_g] with v(d) = C and v'(z_g) = -beta. """
    a, b = ex.a, ex.b
    width = z_g - p.d
    at_d = ((C + 1.0 / p.r + (p.beta / a) * math.exp(-a * width))
            / (1.0 + (b / a) * math.exp(-(a + b) * width)))
    at_g = (b * at_d * math.exp(-b * width) - p.beta) / a
    return Segment(kind=SegmentKind.GUNDER, lo=p.d, hi=z_g, rate=0.0, offset=-1.0 / p.r, coefA=at_g,
                   coefB=at_d, anchor=z_g, theta1=a, theta2=b)


def gbar_segment(p: ModelParams, ex: RateExponents, z_g: float) -> Segment:
    """ Rate-u0 tail on (z_g, inf) with v'(z_g) = -beta. """
    return Segment(kind=SegmentKind.GBAR, lo=z_g, hi=math.inf, rate=p.u0, offset=p.lower_bound, coefA=0.0,
                   coefB=p.beta / ex.t2, anchor=z_g, theta1=ex.t1, theta2=ex.t2)


## ---------------------------------------------------------------------------------------------
## pasting equations
## The growing exponential of each equation has a positive factor and goes through scaled_exp,
## so a huge exponent gives an infinite value of the right sign instead of an OverflowError.
def _contact_factors(ex: RateExponents, z: float):
    """ Factors of exp(a*(d - z)) (positive) and of exp(-b*(d - z)) for second-order contact at z. """
    decay, one_minus_decay = _decay(ex, z)
    grow = (ex.t1 + ex.b) - (ex.b - ex.t2) * decay
    fall = (ex.a - ex.t1) - (ex.a + ex.t2) * decay
    return grow / one_minus_decay, fall / one_minus_decay


def zf_pasting_rhs(p: ModelParams, ex: RateExponents, z: float) -> float:
    """
        Value at d of the rate-0 piece started with second-order contact at z.
        Strictly increasing on (0, d], tends to -inf at 0+ and equals xi1 at d.
    """
    a, b = ex.a, ex.b
    grow, fall = _contact_factors(ex, z)
    scale = p.beta / (a + b)
    return scale * math.exp(-b * (p.d - z)) * fall / b - scaled_exp(a * (p.d - z), scale * grow / a)


def zg_pasting_rhs(p: ModelParams, ex: RateExponents, z: float) -> float:
    """
        Value at d of the rate-0 piece started with second-order contact at z.
        Strictly increasing on [d, inf) and equal to xi2 at d.
    """
    a, b = ex.a, ex.b
    width = z - p.d
    return (p.beta * (ex.t2 - b) / (a * (a + b)) * math.exp(-a * width) - 1.0 / p.r
            + scaled_exp(b * width, p.beta * (ex.t2 + a) / (b * (a + b))))


def f_lower_derivative(p: ModelParams, ex: RateExponents, z_f: float) -> float:
    """ Slope at d of the rate-0 piece pasted at z_f. """
    a, b = ex.a, ex.b
    grow, fall = _contact_factors(ex, z_f)
    scale = p.beta / (a + b)
    return -scaled_exp(a * (p.d - z_f), scale * grow) - scale * math.exp(-b * (p.d - z_f)) * fall


def g_lower_derivative(p: ModelParams, ex: RateExponents, z_g: float) -> float:
    """ Slope at d of the rate-0 piece pasted at z_g. """
    a, b = ex.a, ex.b
    width = z_g - p.d
    return (p.beta * (ex.t2 - b) / (a + b) * math.exp(-a * width)
            - scaled_exp(b * width, p.beta * (ex.t2 + a) / (a + b)))
