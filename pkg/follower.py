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

"""
Stage 3: the exterior manufacturer's sourcing decision and price.

Given the leader's (p_i, w), M_e either switches to supplier S and prices at
the kink-aware optimum of its concave profit, or stays with the incumbent
supplier and keeps (p_e0, pi_e0). The (p_i, w) plane splits into regions
R1-R3 (theta < 1) and R4-R6 (theta > 1); each region fixes which demand
branch the optimal p_e falls on.

Region boundary lines, theta < 1::

    y1: w = 2 p_i - 2 + theta - m_e
    y2: w = (2 - theta) p_i - 2 + 2 theta - m_e
    y3: w = p_i - m_e

theta > 1::

    l1: w = 2 theta p_i - theta - m_e
    l2: w = (2 theta - 1) p_i - theta + 1 - m_e
    l3: w = p_i - m_e

The participation curves (switching weakly beats pi_e0) are checked through
the region's profit directly.
"""

from typing import Optional, Set, Tuple

import global_params as gp
from data_models import FollowerDecision, RegionId, Source
from scenario import CommonMarket, ScenarioParams


def _quote(region: RegionId, p_i: float, w: float, market: CommonMarket) -> Tuple[float, float, float]:
    """Optimal p_e inside a region, the unit margin there and M_e's demand."""
    theta, A_hat, m_e = market.theta, market.A_hat, market.m_e
    if region in (RegionId.R1, RegionId.R4):
        p_e = (theta + w + m_e) / 2.0
        margin = p_e - w - m_e
        q_e = A_hat * margin / theta
    elif region is RegionId.R2:
        p_e = (theta * p_i + w + m_e) / 2.0
        margin = p_e - w - m_e
        q_e = A_hat * margin / (theta * (1.0 - theta))
    elif region is RegionId.R3:
        p_e = p_i - 1.0 + theta
        margin = p_e - w - m_e
        q_e = A_hat * (1.0 - p_i) / theta
    elif region is RegionId.R5:
        p_e = (theta - 1.0 + p_i + w + m_e) / 2.0
        margin = p_e - w - m_e
        q_e = A_hat * margin / (theta - 1.0)
    else:  # R6
        p_e = theta * p_i
        margin = p_e - w - m_e
        q_e = A_hat * (1.0 - p_i)
    return p_e, margin, q_e


def _on_branch(region: RegionId, p_i: float, w: float, market: CommonMarket) -> bool:
    theta, m_e = market.theta, market.m_e
    tol = gp.REGION_TOL
    if region is RegionId.R1:
        return w <= 2.0 * p_i - 2.0 + theta - m_e + tol
    if region is RegionId.R2:
        return w >= (2.0 - theta) * p_i - 2.0 + 2.0 * theta - m_e - tol
    if region is RegionId.R3:
        y1 = 2.0 * p_i - 2.0 + theta - m_e
        y2 = (2.0 - theta) * p_i - 2.0 + 2.0 * theta - m_e
        return y1 - tol <= w <= y2 + tol
    if region is RegionId.R4:
        # on l1 both rules quote p_e = theta*p_i; the lower index wins
        return w <= 2.0 * theta * p_i - theta - m_e + tol
    if region is RegionId.R5:
        return w >= (2.0 * theta - 1.0) * p_i - theta + 1.0 - m_e - tol
    l1 = 2.0 * theta * p_i - theta - m_e
    l2 = (2.0 * theta - 1.0) * p_i - theta + 1.0 - m_e
    return l1 - tol <= w <= l2 + tol


def region_profit(region: RegionId, p_i: float, w: float, market: CommonMarket) -> Tuple[float, float]:
    """
    M_e's price and profit when it switches and prices by a region's rule.

    No membership check is made; see ``in_region``.

    Returns
    -------
    (p_e, profit) : tuple of float
    """
    p_e, margin, q_e = _quote(region, p_i, w, market)
    return p_e, margin * q_e


def in_region(region: RegionId, p_i: float, w: float, market: CommonMarket) -> bool:
    """
    Check the full inequality system of one region.

    The system is the demand-branch constraint of the region, the
    no-resale constraint w <= p_i - m_e and participation (profit >= pi_e0).
    """
    if region not in RegionId.for_theta(market.theta):
        return False
    if w > p_i - market.m_e + gp.REGION_TOL:
        return False
    if not _on_branch(region, p_i, w, market):
        return False
    p_e, margin, q_e = _quote(region, p_i, w, market)
    if margin < 0.0 or q_e < 0.0:
        return False
    return margin * q_e >= market.pi_e0 - gp.PARTICIPATION_TOL


def _check_point(p_i: float, w: float) -> None:
    if p_i < 0.0 or w < 0.0:
        raise ValueError(f"prices must be non-negative (p_i={p_i}, w={w})")


def classify_in_market(p_i: float, w: float, market: CommonMarket) -> Optional[RegionId]:
    _check_point(p_i, w)
    for region in RegionId.for_theta(market.theta):
        if in_region(region, p_i, w, market):
            return region
    return None


def response_in_market(p_i: float, w: float, market: CommonMarket) -> FollowerDecision:
    """Best response for a reduced market (used by the leader stage)."""
    region = classify_in_market(p_i, w, market)
    if region is None:
        return FollowerDecision(
            source=Source.STAY_WITH_INCUMBENT,
            region=None,
            p_e_star=market.p_e0,
            profit=market.pi_e0,
        )
    p_e, profit = region_profit(region, p_i, w, market)
    return FollowerDecision(source=Source.SWITCH_TO_S, region=region, p_e_star=p_e, profit=profit)


def classify_region(p_i: float, w: float, params: ScenarioParams) -> Optional[RegionId]:
    """
    Region whose inequality system holds at (p_i, w), if any.

    On shared boundaries the lowest-numbered region is returned.

    Parameters
    ----------
    p_i : float
        M_i's end-product price (>= 0).
    w : float
        Wholesale component price offered to M_e (>= 0).
    params : ScenarioParams
        Validated scenario.

    Returns
    -------
    RegionId or None
        None when M_e stays with the incumbent supplier.
    """
    return classify_in_market(p_i, w, CommonMarket.from_params(params))


def follower_best_response(p_i: float, w: float, params: ScenarioParams) -> FollowerDecision:
    """
    M_e's sourcing decision and optimal price.

    Parameters
    ----------
    p_i : float
        M_i's end-product price (>= 0).
    w : float
        Wholesale component price (>= 0).
    params : ScenarioParams
        Validated scenario.

    Returns
    -------
    FollowerDecision
        SWITCH_TO_S with the region's price and profit, or
        STAY_WITH_INCUMBENT with (p_e0, pi_e0).
    """
    return response_in_market(p_i, w, CommonMarket.from_params(params))


def nonempty_regions_in_market(market: CommonMarket) -> Set[RegionId]:
    theta, A_hat, pi0, m_e = market.theta, market.A_hat, market.pi_e0, market.m_e
    a2 = (theta - m_e) ** 2
    entry = 4.0 * theta * pi0 / a2
    if A_hat < entry:
        return set()
    if theta < 1.0:
        r2_bound = theta * (2.0 - theta) ** 2 * pi0 / ((1.0 - theta) * a2)
        if A_hat >= r2_bound:
            return {RegionId.R1, RegionId.R2, RegionId.R3}
        return {RegionId.R1, RegionId.R3}
    if m_e > theta / (2.0 * theta - 1.0):
        return {RegionId.R4}
    r5_bound = (2.0 * theta - 1.0) ** 2 * pi0 / ((theta - 1.0) * a2)
    if m_e <= 0.5 and A_hat >= r5_bound:
        return {RegionId.R4, RegionId.R5, RegionId.R6}
    return {RegionId.R4, RegionId.R6}


def nonempty_regions(params: ScenarioParams) -> Set[RegionId]:
    """
    Regions that contain at least one (p_i, w) making M_e switch.

    theta < 1: empty below the entry threshold, {R1, R3} up to the R2
    threshold theta (2-theta)^2 pi_e0 / ((1-theta)(theta-m_e)^2), all three
    above it.

    theta > 1: empty below the entry threshold; {R4} when
    m_e > theta/(2 theta - 1); all three when m_e <= 1/2 and A_hat reaches
    (2 theta - 1)^2 pi_e0 / ((theta - 1)(theta - m_e)^2); {R4, R6} otherwise.
    """
    return nonempty_regions_in_market(CommonMarket.from_params(params))
