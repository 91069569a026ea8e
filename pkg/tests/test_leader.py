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

"""Tests for the leader's closed-form optima and the decision tables."""
import math

import numpy as np
import pytest

import leader
import oracle
from data_models import RegionId
from follower import follower_best_response
from scenario import CommonMarket, baselines, entry_threshold, validate_params


def test_low_theta_equilibrium(low_params):
    decision = leader.equilibrium(low_params)
    assert decision.case_label == "ii"
    assert decision.candidate_label == "Lemma2-case3"
    assert decision.region is RegionId.R3
    assert decision.p_i_star == pytest.approx(0.65, abs=1e-6)
    assert decision.w_star == pytest.approx(0.100862, abs=1e-6)
    assert decision.profit2 == pytest.approx(0.025594, abs=1e-6)
    assert decision.p_i_interval is None
    assert decision.diagnostics == ()
    # participation binds
    assert decision.follower.profit == pytest.approx(0.06321875, abs=1e-9)


def test_high_theta_equilibrium(high_params):
    decision = leader.equilibrium(high_params)
    assert decision.case_label == "i.4"
    assert decision.candidate_label == "Lemma5-case4"
    assert decision.region is RegionId.R6
    assert decision.p_i_star == pytest.approx(0.54, abs=1e-6)
    assert decision.w_star == pytest.approx(0.338048, abs=1e-6)
    assert decision.profit2 == pytest.approx(0.090191, abs=1e-6)
    assert decision.follower.profit == pytest.approx(0.06321875, abs=1e-9)
    assert decision.demand.Q_i == pytest.approx(0.0, abs=1e-12)


def test_below_entry_threshold(low_raw):
    params = validate_params(dict(low_raw, gamma1=1.0 / 7.0))  # A_hat = 0.4
    assert baselines(params).A_hat < entry_threshold(params)
    with pytest.raises(leader.BelowEntryThreshold):
        leader.equilibrium(params)


def test_leader_profit_examples(low_params, high_params):
    assert leader.leader_profit(0.65, 0.100862, low_params) == pytest.approx(0.025594, abs=1e-6)
    assert leader.leader_profit(0.54, 0.338048, high_params) == pytest.approx(0.090191, abs=1e-6)
    # wholesale-only region at w = 0 earns nothing
    assert leader.leader_profit(1.0, 0.0, low_params) == 0.0


def test_leader_profit_requires_switch(low_params):
    with pytest.raises(leader.NoEntry):
        leader.leader_profit(1.0, 0.8, low_params)


def test_region_optimum_low_theta(low_raw):
    params = validate_params(dict(low_raw, gamma2=0.2))
    assert baselines(params).pi_e0 == pytest.approx(0.0252875)

    r3 = {c.label: c for c in leader.region_optimum(RegionId.R3, params)}
    best = r3["Lemma2-case3"]
    assert best.region is RegionId.R3
    assert best.p_i == pytest.approx(0.65)
    assert best.w == pytest.approx(0.250345, abs=1e-6)
    assert best.profit == pytest.approx(0.063525, abs=1e-6)

    r2 = {c.label: c for c in leader.region_optimum(RegionId.R2, params)}
    edge = r2["Lemma3-case3"]
    assert edge.p_i == pytest.approx(0.55)
    assert edge.w == pytest.approx(0.172958, abs=1e-5)
    assert edge.profit == pytest.approx(0.060820, abs=1e-5)


def test_region_optimum_high_theta(high_params):
    candidates = leader.region_optimum(RegionId.R6, high_params)
    assert [c.label for c in candidates] == ["Lemma5-case4"]
    assert candidates[0].profit == pytest.approx(0.090191, abs=1e-6)


def test_region_optimum_empty_region(low_params):
    with pytest.raises(leader.EmptyRegion):
        leader.region_optimum(RegionId.R2, low_params)


# The interior R2 case prices wholesale below zero here; the optimum sits on w = 0.
NEGATIVE_WHOLESALE = {
    "theta": 0.3623,
    "A": 0.9169,
    "gamma1": 0.3767,
    "gamma2": 0.2351,
    "m_i": 0.0529,
    "m_e": 0.1547,
    "w0": 0.1018,
}


def test_region_optimum_zero_wholesale_edge():
    params = validate_params(NEGATIVE_WHOLESALE)
    candidates = leader.region_optimum(RegionId.R2, params)
    assert [c.label for c in candidates] == ["Lemma3-w0"]
    edge = candidates[0]
    assert edge.w == 0.0
    assert edge.p_i == pytest.approx(0.56858, abs=1e-4)
    assert edge.profit == pytest.approx(0.19128, abs=2e-4)


def test_negative_wholesale_falls_back_to_zero_edge():
    params = validate_params(NEGATIVE_WHOLESALE)
    with pytest.warns(leader.TreeMismatch):
        decision = leader.equilibrium(params)
    assert decision.case_label == "enumerated"
    assert decision.candidate_label == "Lemma3-w0"
    assert decision.region is RegionId.R2
    assert decision.w_star == 0.0
    assert decision.profit2 == pytest.approx(0.19128, abs=2e-4)
    assert decision.demand.Q_i > 0.0

    grid = oracle.brute_force_leader(params, oracle.GridSpec(step_pe=1e-3, step_pi=0.01, step_w=2e-3))
    assert decision.profit2 == pytest.approx(grid.profit2, abs=2e-3)
    assert grid.w_star <= 0.01


def test_threshold_A0_splits_the_spillover_case(low_raw):
    params = validate_params(dict(low_raw, gamma2=0.2))
    result = leader.threshold_A0(params)
    assert result.root is not None
    assert 0.58 < result.root < 1.0
    market = CommonMarket.from_params(params).with_A_hat(result.root)
    r3 = {c.label: c for c in leader.region_optimum(RegionId.R3, market)}
    r2 = {c.label: c for c in leader.region_optimum(RegionId.R2, market)}
    assert r3["Lemma2-case3"].profit == pytest.approx(r2["Lemma3-case3"].profit, abs=1e-8)

    decision = leader.equilibrium(params)
    assert decision.case_label == "i.1.2.2"
    assert decision.profit2 == pytest.approx(0.063525, abs=1e-6)


def test_threshold_A0_degenerate_bracket(low_raw):
    params = validate_params(dict(low_raw, theta=0.5, m_i=0.2, m_e=0.1))
    with pytest.raises(leader.EmptyBracket):
        leader.threshold_A0(params)


def test_thresholds_reject_wrong_regime(low_params, high_params):
    with pytest.raises(ValueError):
        leader.threshold_A0(high_params)
    with pytest.raises(ValueError):
        leader.threshold_A1(low_params)


def test_threshold_A1_root(low_raw):
    params = validate_params(dict(low_raw, theta=2.0))
    result = leader.threshold_A1(params)
    assert result.root == pytest.approx(0.321548, abs=1e-5)
    assert result.dominant is None


def test_threshold_A1_empty_bracket(high_params):
    with pytest.raises(leader.EmptyBracket):
        leader.threshold_A1(high_params)


def test_wholesale_plateau(low_raw):
    # A_hat = 0.45, between the A1 root and the interior threshold
    params = validate_params(dict(low_raw, theta=2.0, gamma1=0.15 / 0.7))
    decision = leader.equilibrium(params)
    assert decision.case_label == "i.2.2.1"
    assert decision.region is RegionId.R4
    assert decision.p_i_star == 1.0
    assert decision.profit2 == pytest.approx(0.100167, abs=1e-5)
    low, high = decision.p_i_interval
    assert high is None
    assert low < 1.0
    for p_i in np.linspace(low + 1e-6, 1.0, 5):
        assert leader.leader_profit(float(p_i), decision.w_star, params) == pytest.approx(
            decision.profit2, abs=1e-12
        )


def test_high_theta_ignores_own_cost(low_raw):
    results = []
    for m_i in (0.0, 0.2, 0.4):
        decision = leader.equilibrium(validate_params(dict(low_raw, theta=1.25, m_i=m_i)))
        results.append(decision)
    for decision in results[1:]:
        assert decision.case_label == results[0].case_label
        assert decision.p_i_star == results[0].p_i_star
        assert decision.w_star == results[0].w_star
        assert decision.profit2 == pytest.approx(results[0].profit2, abs=1e-15)


def test_stage2_thresholds_keys(low_params, high_params):
    low = leader.stage2_thresholds(low_params)
    assert low["entry"] == pytest.approx(0.412857, abs=1e-6)
    assert low["r2_nonempty"] == pytest.approx(0.7431, abs=1e-4)
    high = leader.stage2_thresholds(high_params)
    assert set(high) == {"entry", "r4_interior", "r5_nonempty", "r5_interior",
                         "r6_kink", "r6_l3", "r6_l6"}
    assert leader.stage2_thresholds(CommonMarket.from_params(low_params)) == low


def _random_scenarios(seed, theta_range, count):
    rng = np.random.default_rng(seed)
    found = []
    while len(found) < count:
        raw = {
            "theta": float(rng.uniform(*theta_range)),
            "A": float(rng.uniform(0.15, 0.6)),
            "gamma1": float(rng.uniform(0.1, 0.5)),
            "gamma2": 0.5,
            "m_i": float(rng.uniform(0.0, 0.2)),
            "m_e": float(rng.uniform(0.0, 0.1)),
            "w0": float(rng.uniform(0.02, 0.2)),
        }
        params = validate_params(raw)
        if baselines(params).A_hat >= entry_threshold(params):
            found.append(params)
    return found


@pytest.mark.parametrize("seed, theta_range", [(3, (0.5, 0.9)), (5, (1.1, 1.8))])
def test_equilibrium_beats_every_grid_point(seed, theta_range):
    for params in _random_scenarios(seed, theta_range, 10):
        decision = leader.equilibrium(params)
        best_grid = -math.inf
        for p_i in np.linspace(0.0, 1.0, 41):
            for w in np.linspace(0.0, params.theta, 41):
                try:
                    best_grid = max(best_grid, leader.leader_profit(float(p_i), float(w), params))
                except leader.NoEntry:
                    continue
        assert decision.profit2 >= best_grid - 1e-3, params
        if params.theta < 1.0:
            assert decision.region in (RegionId.R2, RegionId.R3)
        else:
            assert decision.demand.Q_i <= 1e-12


def test_interior_anchor_case_prices_at_closed_supply_level(low_raw):
    # theta * m_i > m_e and a large common market reach the interior R2 case
    params = validate_params(dict(low_raw, m_i=0.3, m_e=0.0, A=0.9, gamma1=0.1))
    decision = leader.equilibrium(params)
    assert decision.case_label == "i.1.1"
    assert decision.p_i_star == pytest.approx((1.0 + 0.3) / 2.0)
    assert decision.region is RegionId.R2
    response = follower_best_response(decision.p_i_star, decision.w_star, params)
    assert response.region is RegionId.R2
