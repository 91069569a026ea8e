"""
BSD 3-Clause License

Copyright (c) 2026, the ose-solver authors

Redistribution and use in source and binary forms, with or without
modification, are permitted provided that the following conditions are met:

1. Redistributions of source code must retain the above copyright notice, this
   list of conditions and the following disclaimer.

2. Redistributions in binary form must reproduce the above copyright notice,
   this list of conditions and the following disclaimer in the documentation
   and/or other materials provided with the distribution.

3. Neither the name of the copyright holder nor the names of its
   contributors may be used to endorse or promote products derived from
   this software without specific prior written permission.

THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
"""

"""Tests for scenario validation and the closed-supply baselines."""
import math
from dataclasses import replace

import pytest

import scenario
from scenario import (
    CommonMarket,
    DomainError,
    ThetaNearOne,
    baselines,
    closed_supply_baseline,
    common_market_share,
    entry_threshold,
    entry_threshold_value,
    exterior_baseline,
    validate_params,
)


def test_study_scenario_is_valid(low_raw):
    params = validate_params(low_raw)
    assert params.theta == 0.8
    assert params.K == 0.0


def test_K_defaults_to_zero(low_raw):
    del low_raw["K"]
    assert validate_params(low_raw).K == 0.0


def test_spillover_overflow_rejected(low_raw):
    low_raw.update(gamma1=0.6, gamma2=0.5)
    with pytest.raises(DomainError) as info:
        validate_params(low_raw)
    assert "gamma1 + gamma2 must be <= 1" in info.value.violations


def test_theta_near_one_rejected(low_raw):
    low_raw["theta"] = 1.0005
    with pytest.raises(ThetaNearOne):
        validate_params(low_raw)


def test_all_violations_reported(low_raw):
    low_raw.update(A=0.0, m_e=0.95, w0=0.1, extra=1)
    del low_raw["m_i"]
    with pytest.raises(DomainError) as info:
        validate_params(low_raw)
    text = " | ".join(info.value.violations)
    assert "unknown field 'extra'" in text
    assert "missing field 'm_i'" in text
    assert "A=0.0 must lie in (0, 1]" in text
    assert "m_e must be < theta" in text
    assert "w0 + m_e must be < 1" in text
    assert not isinstance(info.value, ThetaNearOne)


@pytest.mark.parametrize("bad", [float("nan"), float("inf"), "0.3", True, None])
def test_non_numeric_values_rejected(low_raw, bad):
    low_raw["A"] = bad
    with pytest.raises(DomainError):
        validate_params(low_raw)


def test_common_market_share(low_params):
    assert common_market_share(low_params) == pytest.approx(0.58)
    assert common_market_share(replace(low_params, gamma1=0.0)) == pytest.approx(0.3)
    assert common_market_share(replace(low_params, A=1.0)) == pytest.approx(1.0)


def test_closed_supply_baseline(low_params):
    assert closed_supply_baseline(low_params) == pytest.approx((0.55, 0.06075))
    assert closed_supply_baseline(replace(low_params, m_i=0.0, A=1.0)) == pytest.approx((0.5, 0.25))
    assert closed_supply_baseline(replace(low_params, m_i=0.999999))[1] < 1e-12


def test_exterior_baseline(low_params):
    assert exterior_baseline(low_params) == pytest.approx((0.575, 0.06321875))
    assert exterior_baseline(replace(low_params, w0=0.9))[1] == pytest.approx(0.0)
    assert exterior_baseline(replace(low_params, A=1.0))[1] == 0.0


def test_entry_threshold(low_params, high_params):
    assert entry_threshold(low_params) == pytest.approx(0.412857, abs=1e-6)
    assert entry_threshold(high_params) == pytest.approx(0.239013, abs=1e-6)
    assert entry_threshold_value(0.8, 0.0, 0.1) == 0.0
    with pytest.raises(ValueError):
        entry_threshold_value(0.5, 0.06, 0.5)


def test_entry_threshold_decreases_with_theta():
    thetas = [t for t in (0.2 + 0.018 * k for k in range(100)) if abs(t - 1.0) > 1e-3]
    values = [entry_threshold_value(t, 0.06321875, 0.1) for t in thetas]
    assert all(b < a for a, b in zip(values, values[1:]))


def test_baselines_bundle(low_params):
    base = baselines(low_params)
    assert base.A_hat == pytest.approx(0.58)
    assert base.Pi_i0 == pytest.approx(0.06075)
    assert base.pi_e0 == pytest.approx(0.06321875)
    assert base.A_hat_entry_min == pytest.approx(entry_threshold(low_params))
    assert not hasattr(base, "entry_threshold")


def test_params_carry_no_copy_helpers(low_params):
    assert not hasattr(low_params, "with_values")
    assert not hasattr(scenario, "field_names")


def test_common_market_reduction(low_params):
    market = CommonMarket.from_params(low_params)
    assert market.A_hat == pytest.approx(0.58)
    assert market.p_e0 == pytest.approx(0.575)
    moved = market.with_A_hat(0.7)
    assert moved.A_hat == 0.7
    assert moved.pi_e0 == market.pi_e0
    assert math.isclose(market.entry_threshold, entry_threshold(low_params))
