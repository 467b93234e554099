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
import math

import numpy as np
import pytest
from pydantic import ValidationError

from conftest import BASE, random_parameter_sets
from model import (ModelParams, RegimeTag, InvalidParameterError, classify, exponents, xi_thresholds, zeta,
                   zeta_curve)


def test_params_reject_non_positive_and_non_finite():
    for name in ("sigma", "r", "d", "u0", "beta"):
        with pytest.raises(ValidationError):
            ModelParams(**{**BASE, "beta": 1.0, name: 0.0})
    with pytest.raises(ValidationError):
        ModelParams(**{**BASE, "beta": 1.0, "mu": math.nan})
    with pytest.raises(ValidationError):
        ModelParams(**{**BASE, "beta": math.inf})
    assert ModelParams(**{**BASE, "beta": 1.0, "mu": -2.0}).mu == -2.0


def test_params_are_frozen(base_params):
    with pytest.raises(ValidationError):
        base_params.beta = 2.0
    assert base_params.replace(beta=2.0).beta == 2.0
    assert base_params.beta == 1.0


def test_exponents_symmetric_case(base_params):
    ex = exponents(base_params, 3.0)
    assert ex.theta1 == pytest.approx(math.sqrt(0.4) / 2, rel=1e-12)
    assert ex.theta2 == pytest.approx(math.sqrt(0.4) / 2, rel=1e-12)


def test_exponents_without_dividends(base_params):
    ex = exponents(base_params, 0.0)
    ## roots of 2k^2 - 3k - 0.2 = 0
    root = math.sqrt(9.0 + 1.6)
    assert ex.theta1 == pytest.approx((3.0 + root) / 4.0, rel=1e-12)
    assert ex.theta2 == pytest.approx((root - 3.0) / 4.0, rel=1e-12)
    assert ex.theta1 == pytest.approx(1.5639410, abs=1e-7)
    assert ex.theta2 == pytest.approx(0.0639410, abs=1e-7)


def test_exponents_rate_out_of_range(base_params):
    with pytest.raises(InvalidParameterError):
        exponents(base_params, -0.1)
    with pytest.raises(InvalidParameterError):
        exponents(base_params, 3.5)


def test_exponents_solve_characteristic_equations():
    for p in random_parameter_sets(20, dividend_dominated=True) + random_parameter_sets(20, False):
        for u in np.linspace(0.0, p.u0, 7):
            ex = exponents(p, float(u))
            drift, half_var = p.mu - u, 0.5 * p.sigma ** 2
            assert ex.theta1 > 0 and ex.theta2 > 0
            assert abs(-p.r - drift * ex.theta1 + half_var * ex.theta1 ** 2) <= 1e-10 * max(1.0, p.r)
            assert abs(-p.r + drift * ex.theta2 + half_var * ex.theta2 ** 2) <= 1e-10 * max(1.0, p.r)
            assert ex.theta1 * ex.theta2 == pytest.approx(2 * p.r / p.sigma ** 2, rel=1e-12)
            assert ex.theta1 - ex.theta2 == pytest.approx(2 * drift / p.sigma ** 2, rel=1e-12, abs=1e-12)


def test_zeta_anchor(base_params):
    assert zeta(base_params) == pytest.approx(0.757105, abs=5e-6)


def test_zeta_symmetric_around_drift(base_params):
    for delta in (0.5, 1.0, 2.0):
        above = zeta(base_params.replace(u0=base_params.mu + delta))
        below = zeta(base_params.replace(u0=base_params.mu - delta))
        assert above == pytest.approx(below, rel=1e-12)


def test_zeta_vanishes_with_d(base_params):
    assert zeta(base_params.replace(d=1e-8)) < 1e-7


def test_zeta_decreasing_in_sigma(base_params):
    values = [zeta(base_params.replace(sigma=sigma)) for sigma in (1.0, 2.0, 4.0, 8.0)]
    assert all(left > right for left, right in zip(values, values[1:]))


def test_zeta_curve_peaks_at_drift(base_params):
    u0_grid = np.linspace(0.1, 6.0, 60)
    curve = zeta_curve(base_params, u0_grid)
    assert curve.shape == (60,)
    peak = zeta(base_params.replace(u0=base_params.mu))
    assert np.all(curve <= peak * (1 + 1e-12))
    assert abs(u0_grid[np.argmax(curve)] - base_params.mu) <= u0_grid[1] - u0_grid[0]


def test_xi_thresholds_known_values(base_params):
    thresholds = xi_thresholds(base_params)
    assert thresholds.zeta == pytest.approx(zeta(base_params), rel=1e-15)
    assert thresholds.xi2 == pytest.approx(10.0 + 1.0 / (math.sqrt(0.4) / 2), rel=1e-12)
    assert thresholds.xi2 == pytest.approx(13.162278, abs=1e-6)


def test_xi_thresholds_meet_at_zeta(base_params):
    thresholds = xi_thresholds(base_params.replace(beta=zeta(base_params)))
    assert abs(thresholds.xi1 - thresholds.xi2) <= 1e-9 * (1 + abs(thresholds.xi1))


def test_xi_ordering_follows_regime():
    for p in random_parameter_sets(20, True) + random_parameter_sets(20, False, seed=11):
        thresholds = xi_thresholds(p)
        assert thresholds.xi1 < p.upper_bound
        assert thresholds.xi2 > p.lower_bound
        assert np.sign(thresholds.xi2 - thresholds.xi1) == np.sign(p.beta - thresholds.zeta)


def test_classify(base_params, sensitive_params):
    assert classify(base_params).tag is RegimeTag.DIVIDEND_DOMINATED
    assert not classify(base_params).boundary
    assert classify(sensitive_params).tag is RegimeTag.DRAWDOWN_SENSITIVE
    on_boundary = classify(base_params.replace(beta=zeta(base_params)))
    assert on_boundary.tag is RegimeTag.DIVIDEND_DOMINATED
    assert on_boundary.boundary
    ## just inside the classification band from below
    just_below = classify(base_params.replace(beta=zeta(base_params) * (1 - 1e-10)))
    assert just_below.is_dividend_dominated and just_below.boundary
