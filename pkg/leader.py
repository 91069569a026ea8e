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
Stage 2: equilibrium prices of the vertically integrated manufacturer.

The leader (supplier S together with M_i) posts the end-product price p_i and
the wholesale price w, anticipating M_e's best response. Closed-form optima
exist per follower region (``Lemma1``-``Lemma6`` candidates below, one per
region, several cases each); the decision tables pick among them using
thresholds on the common market share A_hat.

Every candidate is re-checked numerically (region membership, w >= 0) before
it is accepted, and the table's pick is cross-checked against the best
feasible candidate over all regions, including the w = 0 edge of R2 / R5.
Disagreements surface as warnings and in ``LeaderDecision.diagnostics``.
"""

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple, Union

import numpy as np
from scipy import optimize

import global_params as gp
from data_models import DemandBundle, FollowerDecision, LeaderCandidate, LeaderDecision, RegionId
from demand import demand_at
from follower import in_region, nonempty_regions_in_market, response_in_market
from scenario import CommonMarket, ScenarioParams


class NoEntry(RuntimeError):
    """M_e stays with the incumbent supplier at the given (p_i, w)."""


class EmptyRegion(ValueError):
    """The requested region holds no point at which M_e switches."""


class EmptyBracket(ValueError):
    """A threshold search bracket is empty or degenerate."""


class BelowEntryThreshold(RuntimeError):
    """A_hat is below the entry threshold: no open-supply equilibrium exists."""


class TreeMismatch(RuntimeWarning):
    """The decision table's pick is beaten by another feasible candidate."""


class CandidateRejected(RuntimeWarning):
    """A closed-form candidate failed its numerical feasibility check."""


# Which region each lemma optimizes over.
LEMMA_REGION = {
    "Lemma1": RegionId.R1,
    "Lemma2": RegionId.R3,
    "Lemma3": RegionId.R2,
    "Lemma4": RegionId.R4,
    "Lemma5": RegionId.R6,
    "Lemma6": RegionId.R5,
}

_PLATEAU_LEMMAS = ("Lemma1", "Lemma4")
_TIE = 1e-12

MarketLike = Union[CommonMarket, ScenarioParams]


def _as_market(market: MarketLike) -> CommonMarket:
    if isinstance(market, ScenarioParams):
        return CommonMarket.from_params(market)
    return market


def _sqrt(x: float) -> float:
    return math.sqrt(x) if x >= 0.0 else math.nan


def _ratio(num: float, den: float) -> float:
    # vanishing denominators make the threshold unreachable
    if den <= 0.0:
        return math.inf
    return num / den


@dataclass(frozen=True)
class ThresholdRoot:
    """Result of a threshold search over A_hat.

    root is None when the profit difference keeps one sign over the bracket;
    dominant then names the candidate that earns more throughout.
    """
    root: Optional[float]
    dominant: Optional[str]
    bracket: Tuple[float, float]


def stage2_thresholds(market: MarketLike) -> Dict[str, float]:
    """
    Named A_hat thresholds of the decision table for the market's theta regime.

    Degenerate thresholds (zero denominators) are reported as inf.

    Parameters
    ----------
    market : CommonMarket or ScenarioParams

    Returns
    -------
    dict
        theta < 1: entry, r1_interior, r2_nonempty, r2_interior, y5_feasible,
        r3_mid, r3_top. theta > 1: entry, r4_interior, r5_nonempty,
        r5_interior, r6_kink, r6_l3, r6_l6.
    """
    m = _as_market(market)
    theta, pi0, m_i, m_e = m.theta, m.pi_e0, m.m_i, m.m_e
    a2 = (theta - m_e) ** 2
    entry = _ratio(4.0 * theta * pi0, a2)
    if theta < 1.0:
        return {
            "entry": entry,
            "r1_interior": _ratio(16.0 * theta * pi0, a2),
            "r2_nonempty": _ratio(theta * (2.0 - theta) ** 2 * pi0, (1.0 - theta) * a2),
            "r2_interior": _ratio(16.0 * theta * (1.0 - theta) * pi0, (theta * m_i - m_e) ** 2),
            "y5_feasible": _ratio(4.0 * theta * pi0, (1.0 - m_i) ** 2 * (1.0 - theta)),
            "r3_mid": _ratio(4.0 * theta * pi0, (1.0 - theta) * a2),
            "r3_top": _ratio(4.0 * theta * (2.0 - theta) ** 2 * pi0, (1.0 - theta) * a2),
        }
    return {
        "entry": entry,
        "r4_interior": _ratio(16.0 * theta * pi0, a2),
        "r5_nonempty": _ratio((2.0 * theta - 1.0) ** 2 * pi0, (theta - 1.0) * a2),
        "r5_interior": _ratio(4.0 * pi0, theta - 1.0),
        "r6_kink": _ratio((2.0 * theta - 1.0) ** 2 * pi0, theta * (theta - 1.0) ** 2),
        "r6_l3": _ratio(4.0 * pi0, (theta - 1.0) * (1.0 - m_e ** 2)),
        "r6_l6": _ratio(4.0 * theta ** 2 * pi0, (theta - 1.0) * (theta ** 2 - m_e ** 2)),
    }


def region_objective(region: RegionId, p_i: float, w: float, market: CommonMarket) -> float:
    """
    Leader profit assuming M_e switches and prices by ``region``'s rule.

    Unlike ``leader_profit`` this does not check that M_e actually switches.
    """
    theta, A_hat, m_i, m_e = market.theta, market.A_hat, market.m_i, market.m_e
    if region in (RegionId.R1, RegionId.R4):
        return w * A_hat * (theta - w - m_e) / (2.0 * theta)
    if region is RegionId.R3:
        return w * A_hat * (1.0 - p_i) / theta
    if region is RegionId.R6:
        return w * A_hat * (1.0 - p_i)
    if region is RegionId.R2:
        own = 1.0 - ((2.0 - theta) * p_i - w - m_e) / (2.0 * (1.0 - theta))
        return (A_hat * (p_i - m_i) * own
                + w * A_hat * (theta * p_i - w - m_e) / (2.0 * theta * (1.0 - theta)))
    # R5
    own = 0.5 - ((2.0 * theta - 1.0) * p_i - w - m_e) / (2.0 * (theta - 1.0))
    rival = 0.5 - (w + m_e - p_i) / (2.0 * (theta - 1.0))
    return A_hat * (p_i - m_i) * own + w * A_hat * rival


# --- closed-form candidates ---------------------------------------------------

def _lemma_points(market: CommonMarket) -> Dict[str, Tuple[float, float]]:
    """(p_i, w) of every lemma case for the market's regime; NaN when undefined.

    Plateau cases (Lemma1 / Lemma4) carry NaN for p_i.
    """
    theta, A_hat, pi0, m_i, m_e = market.theta, market.A_hat, market.pi_e0, market.m_i, market.m_e
    a = theta - m_e
    nan = math.nan
    if theta < 1.0:
        r3 = _sqrt(theta * pi0 / (A_hat * (1.0 - theta)))
        p_top = (4.0 - 3.0 * theta + m_e) / (2.0 * (2.0 - theta))
        p_mid = 1.0 - r3
        w_mid = a - (2.0 - theta) * r3
        return {
            "Lemma1-case1": (nan, a / 2.0),
            "Lemma1-case2": (nan, a - 2.0 * _sqrt(theta * pi0 / A_hat)),
            "Lemma2-case1": (p_top, a / 2.0),
            "Lemma2-case2": (p_mid, w_mid),
            "Lemma2-case3": ((2.0 - theta + m_e) / 2.0, a / 2.0 - 2.0 * theta * pi0 / (A_hat * a)),
            "Lemma3-case1": ((1.0 + m_i) / 2.0, a / 2.0),
            "Lemma3-case2": (p_top, a / 2.0),
            "Lemma3-case3": (
                (1.0 + m_i) / 2.0,
                theta * (1.0 + m_i) / 2.0 - m_e - 2.0 * _sqrt(theta * (1.0 - theta) * pi0 / A_hat),
            ),
            "Lemma3-case4": (p_mid, w_mid),
        }
    k = 2.0 * theta - 1.0
    p_c3 = (1.0 + _sqrt(1.0 - 4.0 * pi0 / (A_hat * (theta - 1.0)))) / 2.0
    r5 = _sqrt(pi0 / (A_hat * (theta - 1.0)))
    return {
        "Lemma4-case1": (nan, a / 2.0),
        "Lemma4-case2": (nan, a - 2.0 * _sqrt(theta * pi0 / A_hat)),
        "Lemma5-case1": (theta / k, theta / k - m_e),
        "Lemma5-case2": ((1.0 + m_e) / 2.0, (1.0 - m_e) / 2.0),
        "Lemma5-case3": (p_c3, p_c3 - m_e),
        "Lemma5-case4": ((theta + m_e) / (2.0 * theta), a / 2.0 - 2.0 * theta * pi0 / (A_hat * a)),
        "Lemma6-case1": (0.5, 0.5 - m_e),
        "Lemma6-case2": (1.0 - r5, theta - m_e - k * r5),
    }


def _zero_wholesale_points(market: CommonMarket) -> Dict[str, Tuple[float, float]]:
    """(p_i, 0) maximizing the leader's profit on the w = 0 edge of R2 / R5.

    Holds the constrained optimum when a lemma point falls below w = 0. At
    w = 0 the wholesale-only regions earn nothing, and in R2 (theta < 1) or
    R5 (theta > 1) the profit is a concave quadratic in p_i whose own share
    vanishes at the branch bound ``hi``, so its vertex is (hi + m_i) / 2,
    clipped to [participation / no-resale bound, hi].
    """
    theta, A_hat, pi0, m_i, m_e = market.theta, market.A_hat, market.pi_e0, market.m_i, market.m_e
    if theta < 1.0:
        hi = (2.0 - 2.0 * theta + m_e) / (2.0 - theta)
        lo = (m_e + 2.0 * _sqrt(theta * (1.0 - theta) * pi0 / A_hat)) / theta
        label = "Lemma3-w0"
    else:
        hi = (theta - 1.0 + m_e) / (2.0 * theta - 1.0)
        lo = m_e + 2.0 * _sqrt((theta - 1.0) * pi0 / A_hat) - (theta - 1.0)
        label = "Lemma6-w0"
    lo = max(lo, m_e)
    return {label: (min(max((hi + m_i) / 2.0, lo), hi), 0.0)}


def _lemma_conditions(market: CommonMarket, th: Dict[str, float]) -> Dict[str, bool]:
    """Whether each lemma case's A_hat / cost conditions hold."""
    theta, A, m_i, m_e = market.theta, market.A_hat, market.m_i, market.m_e
    a = theta - m_e
    entry = th["entry"]
    if theta < 1.0:
        wide = 1.0 - m_i >= a / (2.0 - theta)
        return {
            "Lemma1-case1": A >= th["r1_interior"],
            "Lemma1-case2": entry <= A < th["r1_interior"],
            "Lemma2-case1": A >= th["r3_top"],
            "Lemma2-case2": th["r3_mid"] <= A < th["r3_top"],
            "Lemma2-case3": entry <= A < th["r3_mid"],
            # theta*m_i > m_e: the squared threshold alone would admit points above y5
            "Lemma3-case1": A >= th["r2_interior"] and wide and theta * m_i > m_e,
            "Lemma3-case2": A >= th["r3_top"] and 1.0 - m_i <= a / (2.0 - theta),
            "Lemma3-case3": th["y5_feasible"] <= A < th["r2_interior"],
            "Lemma3-case4": A < min(th["y5_feasible"], th["r3_top"]),
        }
    k = 2.0 * theta - 1.0
    return {
        "Lemma4-case1": A >= th["r4_interior"],
        "Lemma4-case2": entry <= A < th["r4_interior"],
        "Lemma5-case1": A > th["r6_kink"] and 1.0 / k < m_e <= theta / k,
        "Lemma5-case2": A > th["r6_l3"] and m_e <= 1.0 / k,
        "Lemma5-case3": th["r6_l6"] < A <= th["r6_l3"],
        "Lemma5-case4": entry <= A <= th["r6_l6"],
        "Lemma6-case1": A > th["r5_interior"] and m_e <= 0.5,
        "Lemma6-case2": th["r5_nonempty"] <= A <= th["r5_interior"],
    }


def _plateau_interval(region: RegionId, w: float, market: CommonMarket) -> Tuple[float, Optional[float]]:
    """Feasible p_i range at fixed w for the wholesale-only regions R1 / R4."""
    theta, m_e = market.theta, market.m_e
    if region is RegionId.R1:
        low = max((w + 2.0 - theta + m_e) / 2.0, w + m_e)
    else:
        # l1 belongs to R4
        low = max((w + theta + m_e) / (2.0 * theta), w + m_e)
    return low, None


def _profit_in_market(
    p_i: float, w: float, market: CommonMarket
) -> Tuple[float, FollowerDecision, DemandBundle]:
    if w < 0.0:
        raise ValueError(f"wholesale price must be non-negative, got {w}")
    follower = response_in_market(p_i, w, market)
    if not follower.switched:
        raise NoEntry(f"M_e stays with the incumbent supplier at p_i={p_i:.9g}, w={w:.9g}")
    bundle = demand_at(p_i, follower.p_e_star, market)
    profit = (p_i - market.m_i) * bundle.Q_i + w * bundle.Q_e
    return profit, follower, bundle


def _instantiate(
    label: str, point: Tuple[float, float], market: CommonMarket
) -> Tuple[Optional[LeaderCandidate], str]:
    """Turn a formula point into a checked candidate, or explain the rejection."""
    region = LEMMA_REGION[label.split("-")[0]]
    p_i, w = point
    plateau = label.startswith(_PLATEAU_LEMMAS)
    interval = None
    if not math.isfinite(w) or (not plateau and not math.isfinite(p_i)):
        return None, f"{label}: closed form undefined at A_hat={market.A_hat:.9g}"
    if w < 0.0:
        return None, f"{label}: negative wholesale price w={w:.9g} discarded"
    if plateau:
        interval = _plateau_interval(region, w, market)
        p_i = max(gp.PLATEAU_P_I, interval[0])
    if not in_region(region, p_i, w, market):
        return None, f"{label}: (p_i={p_i:.9g}, w={w:.9g}) lies outside {region.value}"
    try:
        profit, _, _ = _profit_in_market(p_i, w, market)
    except NoEntry as exc:
        return None, f"{label}: {exc}"
    return LeaderCandidate(
        region=region,
        label=label,
        p_i=p_i,
        w=w,
        profit=profit,
        p_i_arbitrary=plateau,
        p_i_interval=interval,
    ), ""


def _all_candidates(market: CommonMarket) -> List[LeaderCandidate]:
    """Every feasible formula point, conditions relaxed, in lemma order, then the w = 0 edge."""
    pool = []
    points = {**_lemma_points(market), **_zero_wholesale_points(market)}
    for label, point in points.items():
        candidate, _ = _instantiate(label, point, market)
        if candidate is not None:
            pool.append(candidate)
    return pool


# --- public operations --------------------------------------------------------

def leader_profit(p_i: float, w: float, params: ScenarioParams) -> float:
    """
    Stage-2 profit of the integrated manufacturer at (p_i, w).

    Computed as (p_i - m_i) Q_i + w Q_e at M_e's best response. The component
    S supplies to M_i itself nets out at zero cost.

    Raises
    ------
    NoEntry
        If M_e stays with the incumbent supplier.
    ValueError
        If w < 0 or p_i < 0.
    """
    profit, _, _ = _profit_in_market(p_i, w, CommonMarket.from_params(params))
    return profit


def region_optimum(region: RegionId, params: MarketLike) -> List[LeaderCandidate]:
    """
    Closed-form leader optima restricted to one follower region.

    Parameters
    ----------
    region : RegionId
    params : ScenarioParams or CommonMarket

    Returns
    -------
    list of LeaderCandidate
        One entry per lemma case whose conditions hold and whose point passes
        the feasibility check. Rejected cases raise a CandidateRejected warning.
        The w = 0 edge point of R2 or R5 ("Lemma3-w0", "Lemma6-w0") is
        appended when it beats every lemma case.

    Raises
    ------
    EmptyRegion
        If the region holds no switching point for this scenario.
    """
    market = _as_market(params)
    if region not in nonempty_regions_in_market(market):
        raise EmptyRegion(f"region {region.value} is empty for this scenario")
    conditions = _lemma_conditions(market, stage2_thresholds(market))
    result = []
    for label, point in _lemma_points(market).items():
        if LEMMA_REGION[label.split("-")[0]] is not region or not conditions[label]:
            continue
        candidate, reason = _instantiate(label, point, market)
        if candidate is None:
            warnings.warn(reason, CandidateRejected, stacklevel=2)
        else:
            result.append(candidate)
    for label, point in _zero_wholesale_points(market).items():
        if LEMMA_REGION[label.split("-")[0]] is not region:
            continue
        edge, _ = _instantiate(label, point, market)
        if edge is not None and all(edge.profit > c.profit + _TIE for c in result):
            result.append(edge)
    return result


def _find_root(
    diff: Callable[[float], float], lo: float, hi: float, labels: Tuple[str, str]
) -> ThresholdRoot:
    """Leftmost sign change of diff over [lo, hi]; labels = (diff > 0, diff < 0) winners."""
    hi = min(hi, 1.0)
    lo = max(lo, 1e-12)
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
        raise EmptyBracket(f"threshold bracket [{lo:.9g}, {hi:.9g}] is empty")
    xs = np.linspace(lo, hi, gp.SIGN_SCAN_POINTS)
    ds = np.array([diff(x) for x in xs])
    zeros = np.flatnonzero(ds == 0.0)
    changes = np.flatnonzero(np.sign(ds[:-1]) * np.sign(ds[1:]) < 0.0)
    first_zero = zeros[0] if zeros.size else None
    first_change = changes[0] if changes.size else None
    if first_zero is not None and (first_change is None or first_zero <= first_change):
        return ThresholdRoot(root=float(xs[first_zero]), dominant=None, bracket=(lo, hi))
    if first_change is not None:
        root = optimize.bisect(diff, xs[first_change], xs[first_change + 1], xtol=gp.BISECT_XTOL)
        return ThresholdRoot(root=float(root), dominant=None, bracket=(lo, hi))
    dominant = labels[0] if np.nanmean(ds) > 0.0 else labels[1]
    return ThresholdRoot(root=None, dominant=dominant, bracket=(lo, hi))


def _a0_difference(market: CommonMarket) -> Callable[[float], float]:
    def diff(A_hat: float) -> float:
        m = market.with_A_hat(A_hat)
        points = _lemma_points(m)
        return (region_objective(RegionId.R3, *points["Lemma2-case3"], m)
                - region_objective(RegionId.R2, *points["Lemma3-case3"], m))
    return diff


def _a1_difference(market: CommonMarket) -> Callable[[float], float]:
    def diff(A_hat: float) -> float:
        m = market.with_A_hat(A_hat)
        points = _lemma_points(m)
        return (region_objective(RegionId.R6, *points["Lemma5-case2"], m)
                - region_objective(RegionId.R4, math.nan, points["Lemma4-case2"][1], m))
    return diff


def threshold_A0(params: MarketLike) -> ThresholdRoot:
    """
    A_hat at which the R3 binding optimum and the R2 y5-boundary optimum tie.

    Searched over [4 theta pi_e0 / ((1-m_i)^2 (1-theta)),
    16 theta (1-theta) pi_e0 / (theta m_i - m_e)^2], clipped to A_hat <= 1.

    Raises
    ------
    EmptyBracket
        If the bracket is empty or theta * m_i == m_e.
    ValueError
        If theta > 1.
    """
    market = _as_market(params)
    if market.theta > 1.0:
        raise ValueError("threshold_A0 applies to theta < 1")
    if market.theta * market.m_i == market.m_e:
        raise EmptyBracket("theta * m_i == m_e: the upper bracket bound diverges")
    th = stage2_thresholds(market)
    return _find_root(_a0_difference(market), th["y5_feasible"], th["r2_interior"],
                      ("Lemma2-case3", "Lemma3-case3"))


def threshold_A1(params: MarketLike) -> ThresholdRoot:
    """
    A_hat at which the R6 interior optimum and the R4 binding optimum tie.

    Searched over [max(4 pi_e0 / ((theta-1)(1-m_e^2)), entry),
    16 theta pi_e0 / (theta-m_e)^2], clipped to A_hat <= 1.

    Raises
    ------
    EmptyBracket
        If the bracket is empty.
    ValueError
        If theta < 1.
    """
    market = _as_market(params)
    if market.theta < 1.0:
        raise ValueError("threshold_A1 applies to theta > 1")
    th = stage2_thresholds(market)
    return _find_root(_a1_difference(market), max(th["r6_l3"], th["entry"]), th["r4_interior"],
                      ("Lemma5-case2", "Lemma4-case2"))


def _split_on_A0(market: CommonMarket) -> Tuple[str, str]:
    try:
        result = threshold_A0(market)
    except EmptyBracket:
        winner = "Lemma2-case3" if _a0_difference(market)(market.A_hat) >= 0.0 else "Lemma3-case3"
    else:
        if result.root is not None:
            winner = "Lemma3-case3" if market.A_hat >= result.root else "Lemma2-case3"
        else:
            winner = result.dominant
    return ("i.1.2.1", winner) if winner == "Lemma3-case3" else ("i.1.2.2", winner)


def _split_on_A1(market: CommonMarket) -> Tuple[str, str]:
    try:
        result = threshold_A1(market)
    except EmptyBracket:
        winner = "Lemma5-case2" if _a1_difference(market)(market.A_hat) >= 0.0 else "Lemma4-case2"
    else:
        if result.root is not None:
            winner = "Lemma4-case2" if market.A_hat >= result.root else "Lemma5-case2"
        else:
            winner = result.dominant
    return ("i.2.2.1", winner) if winner == "Lemma4-case2" else ("i.2.2.2", winner)


def _walk_table(market: CommonMarket, th: Dict[str, float]) -> Tuple[str, Optional[str]]:
    """Case path and candidate label picked by the decision table."""
    theta, A, m_i, m_e = market.theta, market.A_hat, market.m_i, market.m_e
    a = theta - m_e
    if theta < 1.0:
        if A < th["r2_nonempty"]:
            return "ii", "Lemma2-case3"
        if 1.0 - m_i >= a / (2.0 - theta):
            if A >= th["r2_interior"] and theta * m_i > m_e:
                return "i.1.1", "Lemma3-case1"
            if A >= th["y5_feasible"]:
                return _split_on_A0(market)
            if A > th["r3_mid"]:
                return "i.1.3", "Lemma2-case2"
            return "i.1.4", "Lemma2-case3"
        if A >= th["r3_top"]:
            return "i.2.1", "Lemma2-case1"
        if A > th["r3_mid"]:
            return "i.2.2", "Lemma2-case2"
        return "i.2.3", "Lemma2-case3"

    k = 2.0 * theta - 1.0
    if m_e > theta / k:
        return ("ii.1", "Lemma4-case1") if A >= th["r4_interior"] else ("ii.2", "Lemma4-case2")
    if A > th["r6_kink"] and m_e > 1.0 / k:
        return ("i.1.1", "Lemma4-case1") if A >= th["r4_interior"] else ("i.1.2", "Lemma4-case2")
    if A > th["r6_l3"] and m_e <= 1.0 / k:
        if A >= th["r4_interior"]:
            return "i.2.1", "Lemma4-case1"
        return _split_on_A1(market)
    if th["r6_l6"] < A <= th["r6_l3"]:
        return "i.3", "Lemma5-case3"
    if A <= th["r6_l6"]:
        return "i.4", "Lemma5-case4"
    return "unmatched", None


def equilibrium_in_market(market: CommonMarket) -> LeaderDecision:
    th = stage2_thresholds(market)
    if market.A_hat < th["entry"]:
        raise BelowEntryThreshold(
            f"A_hat={market.A_hat:.9g} is below the entry threshold {th['entry']:.9g}"
        )
    diagnostics: List[str] = []
    case_label, key = _walk_table(market, th)
    points = _lemma_points(market)

    picked = None
    if key is not None:
        picked, reason = _instantiate(key, points[key], market)
        if picked is None:
            diagnostics.append(reason)
            warnings.warn(reason, CandidateRejected, stacklevel=3)

    pool = _all_candidates(market)
    if not pool:
        raise BelowEntryThreshold("no feasible open-supply candidate in any region")
    best = pool[0]
    for candidate in pool[1:]:
        if candidate.profit > best.profit:
            best = candidate

    if picked is not None and picked.profit >= best.profit - _TIE:
        chosen = picked
    else:
        message = (
            f"decision table case {case_label} ({key or 'no candidate'}) is beaten by "
            f"{best.label} in {best.region.value} (profit {best.profit:.9g})"
        )
        diagnostics.append(message)
        warnings.warn(message, TreeMismatch, stacklevel=3)
        chosen = best
        case_label = "enumerated"

    profit, follower, bundle = _profit_in_market(chosen.p_i, chosen.w, market)
    return LeaderDecision(
        p_i_star=chosen.p_i,
        w_star=chosen.w,
        case_label=case_label,
        region=chosen.region,
        profit2=profit,
        p_i_interval=chosen.p_i_interval,
        candidate_label=chosen.label,
        follower=follower,
        demand=bundle,
        diagnostics=tuple(diagnostics),
    )


def equilibrium(params: ScenarioParams) -> LeaderDecision:
    """
    Stage-2 equilibrium (p_i*, w*) of the integrated manufacturer.

    Walks the decision table for the scenario's theta regime, then checks the
    pick against every feasible closed-form candidate. The best candidate wins
    any disagreement (ties go to the table).

    Parameters
    ----------
    params : ScenarioParams
        Validated scenario.

    Returns
    -------
    LeaderDecision
        Equilibrium prices, table case path, region and profit. Wholesale-only
        plateaus (R1 / R4) report the canonical p_i and the feasible interval.

    Raises
    ------
    BelowEntryThreshold
        If A_hat is below 4 theta pi_e0 / (theta - m_e)^2.
    """
    return equilibrium_in_market(CommonMarket.from_params(params))
