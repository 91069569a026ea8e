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
Scenario parameters, validation and the baseline (no-entry) quantities.

A scenario fixes the relative perceived value theta of the exterior product,
the interior share A, the share proportions gamma1 / gamma2 of the common and
exterior segments, the unit production costs m_i / m_e, the incumbent
supplier's component price w0 and the brand-building investment K.
"""

import math
from dataclasses import asdict, dataclass, replace
from typing import Any, Dict, List, Mapping, Tuple

import global_params as gp

REQUIRED_FIELDS = ("theta", "A", "gamma1", "gamma2", "m_i", "m_e", "w0")
OPTIONAL_FIELDS = {"K": gp.K_DEFAULT}


class DomainError(ValueError):
    """Scenario violates one or more model constraints.

    The individual violations are kept in ``violations`` so callers can report
    all of them at once.
    """

    def __init__(self, violations: List[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ThetaNearOne(DomainError):
    """theta falls inside the excluded band around 1."""


@dataclass(frozen=True)
class ScenarioParams:
    theta: float
    A: float
    gamma1: float
    gamma2: float
    m_i: float
    m_e: float
    w0: float
    K: float = gp.K_DEFAULT

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class Baselines:
    """Profits and prices when the exterior manufacturer keeps the incumbent supplier."""
    A_hat: float
    p_i0: float
    Pi_i0: float
    p_e0: float
    pi_e0: float
    A_hat_entry_min: float


@dataclass(frozen=True)
class CommonMarket:
    """Reduced parameter set seen by stages 2 and 3.

    Stages 2 and 3 depend on A and gamma1 only through A_hat, so the
    threshold searches vary A_hat directly while holding the rest fixed.
    """
    theta: float
    A_hat: float
    pi_e0: float
    m_i: float
    m_e: float
    p_e0: float

    @classmethod
    def from_params(cls, params: ScenarioParams) -> "CommonMarket":
        p_e0, pi_e0 = exterior_baseline(params)
        return cls(
            theta=params.theta,
            A_hat=common_market_share(params),
            pi_e0=pi_e0,
            m_i=params.m_i,
            m_e=params.m_e,
            p_e0=p_e0,
        )

    def with_A_hat(self, A_hat: float) -> "CommonMarket":
        return replace(self, A_hat=A_hat)

    @property
    def entry_threshold(self) -> float:
        return entry_threshold_value(self.theta, self.pi_e0, self.m_e)


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def validate_params(
    raw: Mapping[str, Any],
    eps_theta: float = gp.EPS_THETA,
    theta_max: float = gp.THETA_MAX,
) -> ScenarioParams:
    """
    Check a raw scenario mapping against the model domain.

    Parameters
    ----------
    raw : Mapping[str, Any]
        Field name to value. ``K`` may be omitted (defaults to 0).
    eps_theta : float
        Half-width of the excluded band around theta = 1.
    theta_max : float
        Largest admitted theta.

    Returns
    -------
    ScenarioParams
        The validated scenario.

    Raises
    ------
    ThetaNearOne
        If |theta - 1| < eps_theta (all other violations are listed as well).
    DomainError
        For any other violation. Every violated constraint is listed.
    """
    violations: List[str] = []
    known = set(REQUIRED_FIELDS) | set(OPTIONAL_FIELDS)
    for key in sorted(set(raw) - known):
        violations.append(f"unknown field '{key}'")
    values: Dict[str, float] = {}
    for key in REQUIRED_FIELDS:
        if key not in raw or raw[key] is None:
            violations.append(f"missing field '{key}'")
            continue
        values[key] = raw[key]
    for key, default in OPTIONAL_FIELDS.items():
        value = raw.get(key)
        values[key] = default if value is None else value

    numeric: Dict[str, float] = {}
    for key, value in values.items():
        if not _is_number(value) or not math.isfinite(float(value)):
            violations.append(f"{key} must be a finite number, got {value!r}")
        else:
            numeric[key] = float(value)

    near_one = False

    def check(key: str, ok, message: str) -> None:
        if key in numeric and not ok(numeric[key]):
            violations.append(f"{key}={numeric[key]!r} {message}")

    check("theta", lambda t: 0.0 < t <= theta_max, f"must lie in (0, {theta_max}]")
    if "theta" in numeric and abs(numeric["theta"] - 1.0) < eps_theta:
        near_one = True
        violations.append(
            f"theta={numeric['theta']!r} lies within {eps_theta} of 1 (excluded band)"
        )
    check("A", lambda a: 0.0 < a <= 1.0, "must lie in (0, 1]")
    check("gamma1", lambda g: 0.0 <= g < 1.0, "must lie in [0, 1)")
    check("gamma2", lambda g: 0.0 < g < 1.0, "must lie in (0, 1)")
    check("m_i", lambda m: 0.0 <= m < 1.0, "must lie in [0, 1)")
    check("m_e", lambda m: 0.0 <= m < 1.0, "must lie in [0, 1)")
    check("w0", lambda w: 0.0 <= w < 1.0, "must lie in [0, 1)")
    check("K", lambda k: k >= 0.0, "must be >= 0")

    if "gamma1" in numeric and "gamma2" in numeric:
        if numeric["gamma1"] + numeric["gamma2"] > 1.0 + 1e-12:
            violations.append("gamma1 + gamma2 must be <= 1")
    if "m_e" in numeric and "theta" in numeric and not numeric["m_e"] < numeric["theta"]:
        violations.append("m_e must be < theta")
    if "w0" in numeric and "m_e" in numeric and not numeric["w0"] + numeric["m_e"] < 1.0:
        violations.append("w0 + m_e must be < 1")

    if violations:
        if near_one:
            raise ThetaNearOne(violations)
        raise DomainError(violations)
    return ScenarioParams(**numeric)


def common_market_share(params: ScenarioParams) -> float:
    """A_hat = A + gamma1 * (1 - A): consumers reachable by both manufacturers."""
    return params.A + params.gamma1 * (1.0 - params.A)


def closed_supply_baseline(params: ScenarioParams) -> Tuple[float, float]:
    """Monopoly price and profit of M_i over its own share A: (p_i0, Pi_i0)."""
    p_i0 = (1.0 + params.m_i) / 2.0
    Pi_i0 = params.A * ((1.0 - params.m_i) / 2.0) ** 2
    return p_i0, Pi_i0


def exterior_baseline(params: ScenarioParams) -> Tuple[float, float]:
    """Monopoly price and profit of M_e sourcing from S0 at price w0: (p_e0, pi_e0)."""
    margin = 1.0 - params.w0 - params.m_e
    p_e0 = (1.0 + params.w0 + params.m_e) / 2.0
    pi_e0 = params.gamma2 * (1.0 - params.A) * (margin / 2.0) ** 2
    return p_e0, pi_e0


def entry_threshold_value(theta: float, pi_e0: float, m_e: float) -> float:
    if not m_e < theta:
        raise ValueError(f"entry threshold requires m_e < theta (m_e={m_e}, theta={theta})")
    return 4.0 * theta * pi_e0 / (theta - m_e) ** 2


def entry_threshold(params: ScenarioParams) -> float:
    """Smallest A_hat at which some (p_i, w) can induce M_e to switch to S."""
    return entry_threshold_value(params.theta, exterior_baseline(params)[1], params.m_e)


def baselines(params: ScenarioParams) -> Baselines:
    p_i0, Pi_i0 = closed_supply_baseline(params)
    p_e0, pi_e0 = exterior_baseline(params)
    return Baselines(
        A_hat=common_market_share(params),
        p_i0=p_i0,
        Pi_i0=Pi_i0,
        p_e0=p_e0,
        pi_e0=pi_e0,
        A_hat_entry_min=entry_threshold_value(params.theta, pi_e0, params.m_e),
    )
