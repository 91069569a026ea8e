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
Encoding of solver results as JSON records and zone-map CSV.

All computed numbers are written at 9 significant digits so output is stable
for diff-based comparison. Scenario inputs are echoed at full precision so a
solve record parses back to the same parameters.
"""

import json
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd

import global_params as gp
import zone_schema as zs
from data_models import (
    DemandBundle,
    FollowerDecision,
    LeaderDecision,
    StrategyOutcome,
    Strategy,
    ZoneMap,
)
from scenario import Baselines, ScenarioParams


def round_sig(value: Optional[float]) -> Optional[float]:
    """
    Round to SIG_DIGITS significant digits.

    Parameters
    ----------
    value : float or None

    Returns
    -------
    float or None
        None for None and non-finite input (serialized as JSON null).
    """
    if value is None or not math.isfinite(value):
        return None
    return float(f"{value:.{gp.SIG_DIGITS}g}")


def format_number(value: Optional[float]) -> str:
    """CSV cell text; empty for missing values."""
    if value is None or not math.isfinite(value):
        return ""
    return f"{value:.{gp.SIG_DIGITS}g}"


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def encode_scenario(params: ScenarioParams) -> Dict[str, float]:
    return {key: float(value) for key, value in params.to_dict().items()}


def read_scenario(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Raw scenario mapping from a JSON file.

    The fields are not validated here: ``zones`` accepts files that leave
    out its sweep axes.

    Raises
    ------
    FileNotFoundError
    json.JSONDecodeError
    ValueError
        If the file does not hold a JSON object.
    """
    payload = json.loads(Path(path).read_text())
    if not isinstance(payload, dict):
        raise ValueError(f"{path}: scenario JSON must be an object")
    return payload


def encode_baselines(base: Baselines) -> Dict[str, Optional[float]]:
    return {
        "A_hat": round_sig(base.A_hat),
        "p_i0": round_sig(base.p_i0),
        "Pi_i0": round_sig(base.Pi_i0),
        "p_e0": round_sig(base.p_e0),
        "pi_e0": round_sig(base.pi_e0),
        "A_hat_entry_min": round_sig(base.A_hat_entry_min),
    }


def encode_demand(bundle: Optional[DemandBundle]) -> Optional[Dict[str, Optional[float]]]:
    if bundle is None:
        return None
    return dict(zip(zs.DEMAND_KEYS, (round_sig(bundle.Q_i), round_sig(bundle.Q_e), round_sig(bundle.Q_s))))


def encode_follower(decision: Optional[FollowerDecision]) -> Optional[Dict[str, Any]]:
    if decision is None:
        return None
    values = (
        decision.source.value,
        decision.region.value if decision.region is not None else None,
        round_sig(decision.p_e_star),
        round_sig(decision.profit),
    )
    return dict(zip(zs.FOLLOWER_KEYS, values))


def encode_leader(decision: Optional[LeaderDecision]) -> Optional[Dict[str, Any]]:
    if decision is None:
        return None
    interval = None
    if decision.p_i_interval is not None:
        interval = [round_sig(bound) if bound is not None else None for bound in decision.p_i_interval]
    values = (
        round_sig(decision.p_i_star),
        round_sig(decision.w_star),
        decision.case_label,
        decision.region.value if decision.region is not None else None,
        round_sig(decision.profit2),
        interval,
    )
    record = dict(zip(zs.LEADER_KEYS, values))
    record["candidate"] = decision.candidate_label
    return record


def encode_outcome(outcome: StrategyOutcome) -> Dict[str, Any]:
    return {
        "strategy": outcome.strategy.value,
        "role": outcome.role.value,
        "reason": outcome.reason.value,
        "profit_open": round_sig(outcome.profit_open),
        "profit_closed": round_sig(outcome.profit_closed),
        "system_profit_open": round_sig(outcome.system_profit_open),
        "system_profit_closed": round_sig(outcome.system_profit_closed),
    }


def solve_record(params: ScenarioParams, base: Baselines, outcome: StrategyOutcome) -> Dict[str, Any]:
    """
    Full record of one solve.

    leader, follower and demand are null when no open-supply equilibrium
    exists.
    """
    decision = outcome.decision
    return {
        "scenario": encode_scenario(params),
        "baselines": encode_baselines(base),
        "outcome": encode_outcome(outcome),
        "leader": encode_leader(decision),
        "follower": encode_follower(decision.follower if decision else None),
        "demand": encode_demand(decision.demand if decision else None),
        "diagnostics": list(decision.diagnostics) if decision else [],
    }


def zone_rows(zone_map: ZoneMap) -> List[List[str]]:
    """CSV rows (as text) in zone_schema column order."""
    rows = []
    for cell in zone_map.cells:
        outcome = cell.outcome
        row = [""] * zs.ZONE_COLUMN_COUNT
        row[zs.X_AXIS] = format_number(cell.x)
        row[zs.Y_AXIS] = format_number(cell.y)
        row[zs.A_HAT] = format_number(cell.A_hat)
        row[zs.STRATEGY] = outcome.strategy.value
        row[zs.ROLE] = outcome.role.value
        row[zs.PROFIT_OPEN] = format_number(outcome.profit_open)
        row[zs.PROFIT_CLOSED] = format_number(outcome.profit_closed)
        decision = outcome.decision
        if outcome.strategy is Strategy.OPEN and decision is not None:
            row[zs.REGION] = decision.region.value if decision.region is not None else ""
            row[zs.CASE] = decision.case_label
            row[zs.P_I] = format_number(decision.p_i_star)
            row[zs.W] = format_number(decision.w_star)
            row[zs.P_E] = format_number(decision.follower.p_e_star)
        rows.append(row)
    return rows


def zone_frame(zone_map: ZoneMap) -> pd.DataFrame:
    return pd.DataFrame(
        zone_rows(zone_map),
        columns=zs.zone_header(zone_map.x_axis, zone_map.y_axis),
        dtype=object,
    )


def write_zone_csv(zone_map: ZoneMap, target) -> None:
    """Write the zone map as CSV to a path or an open text stream."""
    zone_frame(zone_map).to_csv(target, index=False)


def zone_record(zone_map: ZoneMap) -> Dict[str, Any]:
    """JSON form of a zone map: axes, fixed parameters and the CSV rows."""
    return {
        "x_axis": zone_map.x_axis,
        "y_axis": zone_map.y_axis,
        "x_values": [round_sig(x) for x in zone_map.x_values],
        "y_values": [round_sig(y) for y in zone_map.y_values],
        "fixed": {key: float(value) for key, value in zone_map.fixed},
        "counts": {
            "open": zone_map.open_count,
            "closed": zone_map.closed_count,
            "masked": zone_map.masked_count,
        },
        "columns": zs.zone_header(zone_map.x_axis, zone_map.y_axis),
        "rows": zone_rows(zone_map),
    }


def report_record(report) -> Dict[str, Any]:
    """JSON form of an oracle.VerificationReport, numbers rounded."""
    record = report.to_dict()
    for check in record["checks"]:
        for key in ("analytic", "oracle", "gap", "tolerance"):
            check[key] = round_sig(check[key])
    return record
