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
Brute-force oracle for the closed forms.

Demand is re-derived by integrating the consumer choice rule over v ~ U[0, 1]
piece by piece; follower and leader optima are found by exhaustive grid
search over p_e, and over (p_i, w) for the leader. Nothing here uses the
demand equations, the follower price rules or the leader candidates; those
only appear on the "analytic" side of ``verify_scenario``.

Grid arg-max ties go to the smaller p_e, then the smaller p_i, then the
smaller w.
"""

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

import demand as dm
import follower as fl
import global_params as gp
import leader as ld
import strategy as st
from data_models import (
    ConsumerChoice,
    DemandBundle,
    FollowerDecision,
    LeaderDecision,
    PricePair,
    Source,
    Strategy,
)
from scenario import CommonMarket, ScenarioParams, baselines

DemandFunction = Callable[[PricePair, ScenarioParams], DemandBundle]


class GridTooLarge(ValueError):
    """The requested grid exceeds the point cap."""


@dataclass(frozen=True)
class GridSpec:
    """Oracle grid resolution. Axes: p_i in [0, max(1, theta)], w and p_e in [0, theta]."""
    step_pe: float = gp.STEP_PE
    step_pi: float = gp.STEP_PI
    step_w: float = gp.STEP_W
    max_points: int = gp.GRID_MAX_POINTS

    def __post_init__(self):
        for name in ("step_pe", "step_pi", "step_w"):
            step = getattr(self, name)
            if not (step > 0.0 and math.isfinite(step)):
                raise ValueError(f"{name} must be a positive number, got {step}")

    @staticmethod
    def _count(hi: float, step: float) -> int:
        return int(math.ceil(hi / step - 1e-9)) + 1

    @staticmethod
    def _axis(hi: float, step: float) -> np.ndarray:
        return np.linspace(0.0, hi, GridSpec._count(hi, step))

    def follower_points(self, theta: float) -> int:
        return self._count(theta, self.step_pe)

    def leader_points(self, theta: float) -> int:
        return self._count(max(1.0, theta), self.step_pi) * self._count(theta, self.step_w)

    def check(self, theta: float, leader: bool = False) -> None:
        """Raise GridTooLarge if an axis product exceeds max_points."""
        counts = [("p_e", self.follower_points(theta))]
        if leader:
            counts.append(("(p_i, w)", self.leader_points(theta)))
        for name, count in counts:
            if count > self.max_points:
                raise GridTooLarge(
                    f"{name} grid has {count} points, above the cap of {self.max_points}"
                )

    def pe_axis(self, theta: float) -> np.ndarray:
        return self._axis(theta, self.step_pe)

    def pi_axis(self, theta: float) -> np.ndarray:
        return self._axis(max(1.0, theta), self.step_pi)

    def w_axis(self, theta: float) -> np.ndarray:
        return self._axis(theta, self.step_w)


def _choice_measures(p_i, p_e, theta: float):
    """
    Measures of {v in [0, 1]} buying M_i and buying M_e (broadcasts).

    theta < 1: v buys M_i above s = (p_i - p_e)/(1 - theta) once v >= p_i,
    and M_e on [p_e/theta, s). theta > 1: M_i on [p_i, t] with
    t = (p_e - p_i)/(theta - 1), M_e above max(p_e/theta, t).
    """
    p_i = np.asarray(p_i, dtype=float)
    p_e = np.asarray(p_e, dtype=float)
    floor_e = np.maximum(p_e / theta, 0.0)
    if theta < 1.0:
        s = (p_i - p_e) / (1.0 - theta)
        m_i = np.clip(1.0 - np.maximum(np.maximum(p_i, s), 0.0), 0.0, 1.0)
        m_e = np.clip(np.minimum(s, 1.0) - floor_e, 0.0, 1.0)
    else:
        t = (p_e - p_i) / (theta - 1.0)
        m_i = np.clip(np.minimum(t, 1.0) - np.maximum(p_i, 0.0), 0.0, 1.0)
        m_e = np.clip(1.0 - np.maximum(floor_e, t), 0.0, 1.0)
    return m_i, m_e


def integrate_demand(prices: PricePair, params: ScenarioParams) -> DemandBundle:
    """
    Demands from the consumer choice rule, integrated exactly over v.

    [0, 1] is cut at v = p_i, v = p_e/theta and the indifference point; the
    choice is constant on each piece, so evaluating it at the midpoint and
    summing piece lengths is exact.

    Parameters
    ----------
    prices : PricePair
        Non-negative end-product prices.
    params : ScenarioParams

    Returns
    -------
    DemandBundle
    """
    p_i, p_e = prices.p_i, prices.p_e
    if p_i < 0.0 or p_e < 0.0:
        raise ValueError(f"prices must be non-negative (p_i={p_i}, p_e={p_e})")
    theta = params.theta
    A_hat = CommonMarket.from_params(params).A_hat
    indifference = (p_i - p_e) / (1.0 - theta) if theta < 1.0 else (p_e - p_i) / (theta - 1.0)
    cuts = sorted({0.0, 1.0} | {min(max(c, 0.0), 1.0) for c in (p_i, p_e / theta, indifference)})
    mass = {choice: 0.0 for choice in ConsumerChoice}
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        if hi > lo:
            mass[dm.consumer_choice(0.5 * (lo + hi), prices, theta)] += hi - lo
    q_i = A_hat * mass[ConsumerChoice.BUY_INTERIOR]
    q_e = A_hat * mass[ConsumerChoice.BUY_EXTERIOR]
    return DemandBundle(Q_i=q_i, Q_e=q_e, Q_s=q_i + q_e)


def brute_force_follower(
    p_i: float, w: float, params: ScenarioParams, grid: Optional[GridSpec] = None
) -> FollowerDecision:
    """
    M_e's best response by exhaustive search over the p_e grid.

    M_e switches when the grid maximum of its profit reaches pi_e0 and w does
    not exceed p_i - m_e. Oracle decisions carry no region label.

    Raises
    ------
    GridTooLarge
    """
    grid = grid or GridSpec()
    market = CommonMarket.from_params(params)
    grid.check(market.theta)
    p_e = grid.pe_axis(market.theta)
    _, share_e = _choice_measures(p_i, p_e, market.theta)
    profit = (p_e - w - market.m_e) * market.A_hat * share_e
    k = int(np.argmax(profit))
    best = float(profit[k])
    if w > p_i - market.m_e + gp.REGION_TOL or best < market.pi_e0 - gp.PARTICIPATION_TOL:
        return FollowerDecision(Source.STAY_WITH_INCUMBENT, None, market.p_e0, market.pi_e0)
    return FollowerDecision(Source.SWITCH_TO_S, None, float(p_e[k]), best)


def brute_force_leader(params: ScenarioParams, grid: Optional[GridSpec] = None) -> LeaderDecision:
    """
    Leader optimum by exhaustive search over (p_i, w), the follower
    best-responding on the p_e grid at every point.

    Points where M_e stays are infeasible. When several p_i tie at the
    optimal w (wholesale-only plateau) their range is reported in
    ``p_i_interval``.

    Raises
    ------
    GridTooLarge
    leader.BelowEntryThreshold
        If M_e stays at every grid point.
    """
    grid = grid or GridSpec()
    market = CommonMarket.from_params(params)
    theta, A_hat, m_i, m_e = market.theta, market.A_hat, market.m_i, market.m_e
    grid.check(theta, leader=True)
    p_i = grid.pi_axis(theta)
    w = grid.w_axis(theta)
    p_e = grid.pe_axis(theta)

    n_w, n_pe = w.size, p_e.size
    rows = max(1, gp.ORACLE_CHUNK // (n_w * n_pe))
    leader = np.full((p_i.size, n_w), -np.inf)
    pe_index = np.zeros((p_i.size, n_w), dtype=np.int64)
    follower_profit = np.zeros((p_i.size, n_w))

    W = w[None, :, None]
    E = p_e[None, None, :]
    for start in range(0, p_i.size, rows):
        P = p_i[start:start + rows, None, None]
        _, share_e = _choice_measures(P, E, theta)
        fprofit = (E - W - m_e) * A_hat * share_e
        k = np.argmax(fprofit, axis=2)
        fbest = np.take_along_axis(fprofit, k[..., None], axis=2)[..., 0]
        P2 = P[..., 0]
        W2 = W[..., 0]
        switch = (fbest >= market.pi_e0 - gp.PARTICIPATION_TOL) & (W2 <= P2 - m_e + gp.REGION_TOL)
        share_i, share_e_star = _choice_measures(P2, p_e[k], theta)
        value = A_hat * ((P2 - m_i) * share_i + W2 * share_e_star)
        block = slice(start, start + P.shape[0])
        leader[block] = np.where(switch, value, -np.inf)
        pe_index[block] = k
        follower_profit[block] = fbest

    flat = int(np.argmax(leader))
    row, col = np.unravel_index(flat, leader.shape)
    best = float(leader[row, col])
    if not math.isfinite(best):
        raise ld.BelowEntryThreshold("M_e stays with the incumbent supplier at every grid point")

    tied = p_i[leader[:, col] >= best - 1e-12]
    interval = None
    if tied.size > 1 and tied.max() > tied.min():
        interval = (float(tied.min()), float(tied.max()))

    pe_star = float(p_e[pe_index[row, col]])
    share_i, share_e = _choice_measures(p_i[row], pe_star, theta)
    q_i, q_e = A_hat * float(share_i), A_hat * float(share_e)
    return LeaderDecision(
        p_i_star=float(p_i[row]),
        w_star=float(w[col]),
        case_label="oracle",
        region=None,
        profit2=best,
        p_i_interval=interval,
        candidate_label="grid",
        follower=FollowerDecision(Source.SWITCH_TO_S, None, pe_star, float(follower_profit[row, col])),
        demand=DemandBundle(Q_i=q_i, Q_e=q_e, Q_s=q_i + q_e),
    )


# --- verification report ------------------------------------------------------

@dataclass(frozen=True)
class Tolerances:
    demand: float = gp.TOL_DEMAND
    price: float = gp.TOL_PRICE
    profit: float = gp.TOL_PROFIT


@dataclass(frozen=True)
class CheckRow:
    name: str
    analytic: float
    oracle: float
    gap: float
    tolerance: float
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    rows: Tuple[CheckRow, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def failures(self) -> Tuple[CheckRow, ...]:
        return tuple(row for row in self.rows if not row.passed)

    def to_dict(self) -> Dict[str, object]:
        return {"passed": self.passed, "checks": [asdict(row) for row in self.rows]}

    def format_table(self) -> str:
        """Fixed-width table, one line per check."""
        width = max([len("check")] + [len(row.name) for row in self.rows])
        header = f"{'check':<{width}}  {'analytic':>14}  {'oracle':>14}  {'gap':>10}  {'tol':>8}  result"
        lines = [header, "-" * len(header)]
        for row in self.rows:
            lines.append(
                f"{row.name:<{width}}  {row.analytic:>14.9g}  {row.oracle:>14.9g}  "
                f"{row.gap:>10.3g}  {row.tolerance:>8.1g}  {'ok' if row.passed else 'FAIL'}"
            )
        verdict = "all checks passed" if self.passed else f"{len(self.failures)} check(s) failed"
        lines.append(verdict)
        return "\n".join(lines)


def _row(name: str, analytic: float, oracle: float, tolerance: float) -> CheckRow:
    gap = abs(analytic - oracle)
    return CheckRow(name, float(analytic), float(oracle), float(gap), float(tolerance), bool(gap <= tolerance))


def _demand_rows(params: ScenarioParams, tol: Tolerances, closed_form: DemandFunction) -> List[CheckRow]:
    theta = params.theta
    worst: Dict[str, Tuple[float, float, float]] = {}
    for p_i in np.linspace(0.0, 1.2, 13):
        for p_e in np.linspace(0.0, 1.2 * theta, 13):
            prices = PricePair(float(p_i), float(p_e))
            analytic = closed_form(prices, params)
            exact = integrate_demand(prices, params)
            for key in ("Q_i", "Q_e", "Q_s"):
                a, o = getattr(analytic, key), getattr(exact, key)
                if key not in worst or abs(a - o) > worst[key][0]:
                    worst[key] = (abs(a - o), a, o)
    return [_row(f"demand.{key}", worst[key][1], worst[key][2], tol.demand) for key in ("Q_i", "Q_e", "Q_s")]


def _follower_rows(
    name: str, p_i: float, w: float, params: ScenarioParams, grid: GridSpec, tol: Tolerances
) -> List[CheckRow]:
    analytic = fl.follower_best_response(p_i, w, params)
    oracle = brute_force_follower(p_i, w, params, grid)
    rows = [_row(f"follower[{name}].switch", float(analytic.switched), float(oracle.switched), 0.0)]
    if analytic.switched and oracle.switched:
        rows.append(_row(f"follower[{name}].p_e", analytic.p_e_star, oracle.p_e_star,
                         max(tol.price, grid.step_pe)))
        rows.append(_row(f"follower[{name}].profit", analytic.profit, oracle.profit, tol.profit))
    return rows


def verify_scenario(
    params: ScenarioParams,
    grid: Optional[GridSpec] = None,
    tolerances: Optional[Tolerances] = None,
    closed_form: Optional[DemandFunction] = None,
) -> VerificationReport:
    """
    Compare every closed form against the oracle for one scenario.

    Checks, in order: demand on a 13x13 price lattice (worst gap per
    quantity), follower responses at fixed price points and just below the
    equilibrium wholesale price, the leader's equilibrium profit and the
    stage-1 verdict. A stage-1 disagreement passes only when the table's
    open/closed profit margin is within the profit tolerance.

    ``closed_form`` replaces ``demand.demand`` on the analytic side of the
    demand rows.

    Raises
    ------
    GridTooLarge
    """
    grid = grid or GridSpec()
    tol = tolerances or Tolerances()
    grid.check(params.theta, leader=True)
    rows = _demand_rows(params, tol, closed_form or dm.demand)

    try:
        decision = ld.equilibrium(params)
    except ld.BelowEntryThreshold:
        decision = None

    checkpoints: List[Tuple[str, float, float]] = [
        ("p_i=1,w=0", 1.0, 0.0),
        ("p_i=1,w=theta", 1.0, params.theta),
    ]
    if decision is not None:
        shifted = max(0.0, decision.w_star - 5.0 * grid.step_w)
        checkpoints.append(("equilibrium", decision.p_i_star, shifted))
    for name, p_i, w in checkpoints:
        rows.extend(_follower_rows(name, p_i, w, params, grid, tol))

    try:
        grid_decision = brute_force_leader(params, grid)
    except ld.BelowEntryThreshold:
        grid_decision = None
    rows.append(_row("leader.feasible", float(decision is not None), float(grid_decision is not None), 0.0))
    if decision is not None and grid_decision is not None:
        rows.append(_row("leader.profit", decision.profit2, grid_decision.profit2, tol.profit))

    outcome = st.stage1_decide(params)
    closed = baselines(params).Pi_i0
    oracle_open = grid_decision is not None and grid_decision.profit2 - params.K >= closed
    table_open = outcome.strategy is Strategy.OPEN
    row = _row("stage1.open", float(table_open), float(oracle_open), 0.0)
    if not row.passed and outcome.profit_open is not None:
        if abs(outcome.profit_open - closed) <= tol.profit:
            row = CheckRow(row.name, row.analytic, row.oracle, row.gap, row.tolerance, True)
    rows.append(row)
    return VerificationReport(rows=tuple(rows))
