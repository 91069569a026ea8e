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
Stage 1: open or close component supply, and supply-strategy zone sweeps.
"""

import math
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

import global_params as gp
from data_models import (
    DemandBundle,
    Reason,
    Role,
    Strategy,
    StrategyOutcome,
    ZoneCell,
    ZoneMap,
)
from leader import BelowEntryThreshold, equilibrium
from scenario import DomainError, ScenarioParams, baselines, validate_params

SOLVERS = ("table", "oracle")
SWEEP_AXES = ("A", "gamma1", "m_e", "m_i", "theta")
_OWN_DEMAND_TOL = 1e-12


def _axis_domain(name: str, fixed: Mapping[str, float]) -> Tuple[float, float]:
    if name == "A":
        return 0.0, 1.0
    if name == "gamma1":
        return 0.0, 1.0 - float(fixed.get("gamma2", gp.GAMMA2_DEFAULT))
    if name in ("m_e", "m_i"):
        return 0.0, 1.0
    if name == "theta":
        return 0.0, gp.THETA_MAX
    raise ValueError(f"'{name}' is not a sweepable axis (choose from {', '.join(SWEEP_AXES)})")


def axis_values(
    name: str,
    step: float,
    fixed: Mapping[str, float],
    lo: Optional[float] = None,
    hi: Optional[float] = None,
) -> Tuple[float, ...]:
    """
    Cell-centred lattice values along one sweep axis.

    Parameters
    ----------
    name : str
        One of SWEEP_AXES.
    step : float
        Cell width (> 0).
    fixed : Mapping[str, float]
        Non-swept parameters (gamma2 bounds the gamma1 axis).
    lo, hi : float, optional
        Axis range; defaults to the parameter's domain.

    Returns
    -------
    tuple of float
        lo + step * (k + 1/2) for every cell that fits in [lo, hi].
    """
    d_lo, d_hi = _axis_domain(name, fixed)
    lo = d_lo if lo is None else lo
    hi = d_hi if hi is None else hi
    if not (step > 0.0 and math.isfinite(step)):
        raise ValueError(f"step for axis '{name}' must be positive, got {step}")
    count = int(math.floor((hi - lo) / step + 1e-9))
    if count < 1:
        raise ValueError(f"axis '{name}': range [{lo}, {hi}] holds no cell of width {step}")
    return tuple(lo + step * (k + 0.5) for k in range(count))


def resolve_threads(threads: Optional[int] = None) -> int:
    """Worker count from the argument or the OSE_THREADS variable (0 = all CPUs)."""
    if threads is None:
        raw = os.environ.get(gp.THREADS_ENV_VAR, "1").strip() or "1"
        try:
            threads = int(raw)
        except ValueError:
            raise ValueError(f"{gp.THREADS_ENV_VAR} must be an integer, got '{raw}'") from None
    if threads < 0:
        raise ValueError(f"thread count must be >= 0, got {threads}")
    if threads == 0:
        threads = os.cpu_count() or 1
    return threads


def _no_entry(params: ScenarioParams) -> StrategyOutcome:
    base = baselines(params)
    return StrategyOutcome(
        strategy=Strategy.CLOSED,
        role=Role.PRODUCT_MANUFACTURER,
        profit_open=None,
        profit_closed=base.Pi_i0,
        reason=Reason.BELOW_ENTRY_THRESHOLD,
        system_profit_closed=base.Pi_i0 + base.pi_e0,
    )


def _open_role(bundle: DemandBundle) -> Role:
    if bundle.Q_i <= _OWN_DEMAND_TOL:
        return Role.COMPONENT_MANUFACTURER
    if bundle.Q_e > _OWN_DEMAND_TOL:
        return Role.DUAL_MANUFACTURER
    # M_e switched but sells nothing: only M_i's product reaches consumers
    return Role.PRODUCT_MANUFACTURER


def stage1_decide(params: ScenarioParams, solver: str = "table", grid=None) -> StrategyOutcome:
    """
    Open/close supply verdict of the integrated manufacturer.

    Opens when an open-supply equilibrium exists and its profit minus K weakly
    beats the closed-supply profit Pi_i0.

    Parameters
    ----------
    params : ScenarioParams
        Validated scenario.
    solver : {"table", "oracle"}
        Closed-form decision table, or the brute-force grid search.
    grid : oracle.GridSpec, optional
        Grid for the oracle solver.

    Returns
    -------
    StrategyOutcome
    """
    if solver not in SOLVERS:
        raise ValueError(f"unknown solver '{solver}' (choose from {', '.join(SOLVERS)})")
    base = baselines(params)
    if base.A_hat < base.A_hat_entry_min:
        return _no_entry(params)
    try:
        if solver == "oracle":
            import oracle  # oracle imports this module for its stage-1 check

            decision = oracle.brute_force_leader(params, grid or oracle.GridSpec())
        else:
            decision = equilibrium(params)
    except BelowEntryThreshold:
        return _no_entry(params)

    profit_open = decision.profit2 - params.K
    if profit_open < base.Pi_i0:
        strategy, role, reason = Strategy.CLOSED, Role.PRODUCT_MANUFACTURER, Reason.OPEN_DOMINATED
    else:
        strategy, role, reason = Strategy.OPEN, _open_role(decision.demand), Reason.OPEN_WEAKLY_BETTER
    return StrategyOutcome(
        strategy=strategy,
        role=role,
        profit_open=profit_open,
        profit_closed=base.Pi_i0,
        reason=reason,
        decision=decision,
        follower=decision.follower,
        demand=decision.demand,
        system_profit_open=profit_open + decision.follower.profit,
        system_profit_closed=base.Pi_i0 + base.pi_e0,
    )


def _solve_cell(task: Tuple[int, int, float, float, Dict[str, Any], str, Any]) -> Optional[ZoneCell]:
    row, col, x, y, raw, solver, grid = task
    try:
        params = validate_params(raw)
    except DomainError:
        return None
    base = baselines(params)
    return ZoneCell(
        row=row,
        col=col,
        x=x,
        y=y,
        A_hat=base.A_hat,
        entry_threshold=base.A_hat_entry_min,
        outcome=stage1_decide(params, solver=solver, grid=grid),
    )


def pareto_sweep(
    fixed: Mapping[str, float],
    x_values: Sequence[float],
    y_values: Sequence[float],
    x_axis: str = "A",
    y_axis: str = "gamma1",
    threads: Optional[int] = None,
    solver: str = "table",
    grid=None,
) -> ZoneMap:
    """
    Stage-1 verdicts over a lattice of two parameter axes.

    Baselines (pi_e0, Pi_i0) are recomputed per cell. Cells whose parameters
    violate a model constraint are left out of the map.

    Parameters
    ----------
    fixed : Mapping[str, float]
        The non-swept scenario fields.
    x_values, y_values : sequence of float
        Lattice coordinates; row index runs over x, column index over y.
    x_axis, y_axis : str
        Swept fields, from SWEEP_AXES. Default (A, gamma1).
    threads : int, optional
        Worker processes; None reads OSE_THREADS. Output order does not depend
        on the worker count.
    solver : {"table", "oracle"}
    grid : oracle.GridSpec, optional

    Returns
    -------
    ZoneMap
    """
    for axis in (x_axis, y_axis):
        if axis not in SWEEP_AXES:
            raise ValueError(f"'{axis}' is not a sweepable axis (choose from {', '.join(SWEEP_AXES)})")
    if x_axis == y_axis:
        raise ValueError("sweep axes must differ")
    if solver not in SOLVERS:
        raise ValueError(f"unknown solver '{solver}' (choose from {', '.join(SOLVERS)})")
    base_raw = {k: v for k, v in fixed.items() if k not in (x_axis, y_axis)}
    tasks = []
    for row, x in enumerate(x_values):
        for col, y in enumerate(y_values):
            raw = dict(base_raw)
            raw[x_axis] = float(x)
            raw[y_axis] = float(y)
            tasks.append((row, col, float(x), float(y), raw, solver, grid))

    workers = resolve_threads(threads)
    if workers > 1 and len(tasks) > 1:
        chunk = max(1, len(tasks) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_solve_cell, tasks, chunksize=chunk))
    else:
        results = [_solve_cell(task) for task in tasks]

    return ZoneMap(
        x_axis=x_axis,
        y_axis=y_axis,
        x_values=tuple(float(x) for x in x_values),
        y_values=tuple(float(y) for y in y_values),
        fixed=tuple(sorted(base_raw.items())),
        cells=tuple(cell for cell in results if cell is not None),
    )
