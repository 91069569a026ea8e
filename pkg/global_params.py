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

# === Model domain =================================
EPS_THETA = 1e-3      # exclusion band around theta = 1 (both demand regimes divide by |1-theta|)
THETA_MAX = 4.0       # largest admitted relative perceived value

# === Study defaults =================================
GAMMA2_DEFAULT = 0.5  # exterior share proportion used in the zone study
W0_DEFAULT = 0.05     # incumbent supplier's component price used in the zone study
K_DEFAULT = 0.0       # component brand-building investment

# === Solver numerics =================================
PARTICIPATION_TOL = 1e-12  # follower switches when profit >= pi_e0 - PARTICIPATION_TOL
REGION_TOL = 1e-12         # slack on linear region inequalities
SIGN_SCAN_POINTS = 200     # sign scan of a threshold bracket before bisection
BISECT_XTOL = 1e-10        # bisection tolerance on A_hat
PLATEAU_P_I = 1.0          # canonical p_i reported for wholesale-only plateaus

# === Oracle =================================
STEP_PE = 1e-3           # follower grid step over p_e in [0, theta]
STEP_PI = 2e-3           # leader grid step over p_i in [0, max(1, theta)]
STEP_W = 2e-3            # leader grid step over w in [0, theta]
GRID_MAX_POINTS = 10**8  # hard cap on the number of evaluated grid points
ORACLE_CHUNK = 2**21     # elements per vectorised oracle block

# --- tolerances -----------------------
TOL_DEMAND = 1e-9
TOL_PRICE = 1e-3
TOL_PROFIT = 1e-3

# === Output =================================
SIG_DIGITS = 9                # significant digits for all numeric output
THREADS_ENV_VAR = "OSE_THREADS"  # caps sweep parallelism (0 = auto)
