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
Column layout of zone-map CSV files and key names of the JSON records.

The writer in ``encoding`` and the reader in ``readout/zone_summary.py`` both
import these constants; plotting scripts downstream rely on the column order.

Zone CSV (one row per unmasked cell, ordered by row then column):
- [0]: X_AXIS   swept value of the first axis (header is its field name, default "A")
- [1]: Y_AXIS   swept value of the second axis (default "gamma1")
- [2]: A_HAT
- [3]: STRATEGY       "open" / "closed"
- [4]: ROLE           product_manufacturer / component_manufacturer / dual_manufacturer
- [5]: REGION         R1..R6; empty when closed
- [6]: CASE           decision-table case path; empty when closed
- [7]: P_I            empty when closed
- [8]: W              empty when closed
- [9]: P_E            empty when closed
- [10]: PROFIT_OPEN   empty when no open-supply equilibrium exists
- [11]: PROFIT_CLOSED
"""

X_AXIS = 0
Y_AXIS = 1
A_HAT = 2
STRATEGY = 3
ROLE = 4
REGION = 5
CASE = 6
P_I = 7
W = 8
P_E = 9
PROFIT_OPEN = 10
PROFIT_CLOSED = 11

# Fixed tail after the two axis columns
TAIL_COLUMNS = (
    "A_hat",
    "strategy",
    "role",
    "region",
    "case",
    "p_i",
    "w",
    "p_e",
    "profit_open",
    "profit_closed",
)
ZONE_COLUMN_COUNT = 2 + len(TAIL_COLUMNS)  # 12

DEFAULT_X_AXIS = "A"
DEFAULT_Y_AXIS = "gamma1"


def zone_header(x_axis: str = DEFAULT_X_AXIS, y_axis: str = DEFAULT_Y_AXIS) -> list:
    """CSV header for a sweep over (x_axis, y_axis)."""
    return [x_axis, y_axis, *TAIL_COLUMNS]


# JSON record keys
DEMAND_KEYS = ("q_i", "q_e", "q_s")
FOLLOWER_KEYS = ("source", "region", "p_e", "profit")
LEADER_KEYS = ("p_i", "w", "case", "region", "profit", "p_i_interval")
