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
Shared result types for the open-supply pricing game.

Every stage of the solver hands one of these records to the next: the demand
model produces DemandBundle, the follower stage FollowerDecision, the leader
stage LeaderCandidate / LeaderDecision and the supply-strategy stage
StrategyOutcome. Records are frozen so they can be shared across worker
processes in sweeps.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple


class ConsumerChoice(Enum):
    BUY_INTERIOR = "buy_interior"
    BUY_EXTERIOR = "buy_exterior"
    BUY_NEITHER = "buy_neither"


class RegionId(Enum):
    """Follower best-response regions in the (p_i, w) plane.

    R1-R3 exist when theta < 1, R4-R6 when theta > 1.
    """
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"
    R5 = "R5"
    R6 = "R6"

    @classmethod
    def for_theta(cls, theta: float) -> Tuple["RegionId", ...]:
        """Regions valid for the given theta regime, lowest index first."""
        if theta < 1.0:
            return (cls.R1, cls.R2, cls.R3)
        return (cls.R4, cls.R5, cls.R6)


class Source(Enum):
    SWITCH_TO_S = "switch"
    STAY_WITH_INCUMBENT = "stay"


class Strategy(Enum):
    OPEN = "open"
    CLOSED = "closed"


class Role(Enum):
    PRODUCT_MANUFACTURER = "product_manufacturer"
    COMPONENT_MANUFACTURER = "component_manufacturer"
    DUAL_MANUFACTURER = "dual_manufacturer"


class Reason(Enum):
    BELOW_ENTRY_THRESHOLD = "below_entry_threshold"
    OPEN_DOMINATED = "open_dominated"
    OPEN_WEAKLY_BETTER = "open_weakly_better"


@dataclass(frozen=True)
class PricePair:
    """End-product prices of the interior (p_i) and exterior (p_e) manufacturer."""
    p_i: float
    p_e: float


@dataclass(frozen=True)
class DemandBundle:
    """Product demands and the supplier's component demand (Q_s = Q_i + Q_e)."""
    Q_i: float
    Q_e: float
    Q_s: float


@dataclass(frozen=True)
class FollowerDecision:
    """Sourcing choice and price of the exterior manufacturer.

    region is set whenever the closed-form best response switches to S.
    Decisions produced by the brute-force oracle never carry a region.
    """
    source: Source
    region: Optional[RegionId]
    p_e_star: float
    profit: float

    @property
    def switched(self) -> bool:
        return self.source is Source.SWITCH_TO_S


@dataclass(frozen=True)
class LeaderCandidate:
    """One closed-form optimum of the leader restricted to a single region."""
    region: RegionId
    label: str  # e.g. "Lemma2-case3"
    p_i: float
    w: float
    profit: float
    p_i_arbitrary: bool = False
    p_i_interval: Optional[Tuple[float, Optional[float]]] = None  # (low, high); high None = unbounded


@dataclass(frozen=True)
class LeaderDecision:
    """Stage-2 equilibrium prices of the vertically integrated manufacturer."""
    p_i_star: float
    w_star: float
    case_label: str  # decision-table path, e.g. "i.1.2.2"; "oracle" for grid results
    region: Optional[RegionId]
    profit2: float
    p_i_interval: Optional[Tuple[float, Optional[float]]] = None
    candidate_label: str = ""
    follower: Optional[FollowerDecision] = None
    demand: Optional[DemandBundle] = None
    diagnostics: Tuple[str, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class StrategyOutcome:
    """Stage-1 supply verdict.

    profit_open is None when no open-supply equilibrium exists. decision,
    follower and demand describe the stage-2 equilibrium whenever one exists,
    including when closed supply pays more.
    """
    strategy: Strategy
    role: Role
    profit_open: Optional[float]
    profit_closed: float
    reason: Reason
    decision: Optional[LeaderDecision] = None
    follower: Optional[FollowerDecision] = None
    demand: Optional[DemandBundle] = None
    system_profit_open: Optional[float] = None
    system_profit_closed: float = 0.0


@dataclass(frozen=True)
class ZoneCell:
    """One lattice cell of a supply-strategy sweep."""
    row: int
    col: int
    x: float
    y: float
    A_hat: float
    entry_threshold: float
    outcome: StrategyOutcome


@dataclass(frozen=True)
class ZoneMap:
    """Supply-strategy lattice over two parameter axes.

    Cells are ordered by (row, col); cells whose parameters violate a model
    constraint are omitted.
    """
    x_axis: str
    y_axis: str
    x_values: Tuple[float, ...]
    y_values: Tuple[float, ...]
    fixed: Tuple[Tuple[str, float], ...]
    cells: Tuple[ZoneCell, ...]

    @property
    def open_count(self) -> int:
        return sum(1 for c in self.cells if c.outcome.strategy is Strategy.OPEN)

    @property
    def closed_count(self) -> int:
        return len(self.cells) - self.open_count

    @property
    def masked_count(self) -> int:
        return len(self.x_values) * len(self.y_values) - len(self.cells)
