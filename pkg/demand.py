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
Consumer choice and the piecewise-linear demand model.

Consumers value M_i's product at v ~ U[0, 1] and M_e's at theta * v. Each
buys the product with the larger non-negative surplus (ties go to M_i).
Demands are the choice-set measures scaled by the common market share A_hat.
"""

from scenario import CommonMarket, ScenarioParams
from data_models import ConsumerChoice, DemandBundle, PricePair


def _check_prices(p_i: float, p_e: float) -> None:
    if p_i < 0.0 or p_e < 0.0:
        raise ValueError(f"prices must be non-negative (p_i={p_i}, p_e={p_e})")


def consumer_choice(v: float, prices: PricePair, theta: float) -> ConsumerChoice:
    """
    Product bought by a consumer with perceived value v.

    Parameters
    ----------
    v : float
        Perceived value of M_i's product, in [0, 1].
    prices : PricePair
        End-product prices.
    theta : float
        Relative perceived value of M_e's product.

    Returns
    -------
    ConsumerChoice
        BUY_INTERIOR if v >= p_i and v - p_i >= theta*v - p_e; otherwise
        BUY_EXTERIOR if theta*v >= p_e; otherwise BUY_NEITHER.
    """
    if not 0.0 <= v <= 1.0:
        raise ValueError(f"perceived value must lie in [0, 1], got {v}")
    surplus_i = v - prices.p_i
    surplus_e = theta * v - prices.p_e
    if surplus_i >= 0.0 and surplus_i >= surplus_e:
        return ConsumerChoice.BUY_INTERIOR
    if surplus_e >= 0.0:
        return ConsumerChoice.BUY_EXTERIOR
    return ConsumerChoice.BUY_NEITHER


def demand_at(p_i: float, p_e: float, market: CommonMarket) -> DemandBundle:
    """
    Demands at a price pair for a reduced market (theta, A_hat).

    Branch selection at breakpoints follows the weak/strict pattern of the
    demand equations; adjacent branches agree there.
    """
    _check_prices(p_i, p_e)
    theta, A_hat = market.theta, market.A_hat
    if theta < 1.0:
        if p_i >= 1.0 - theta + p_e:
            q_i = 0.0
            q_e = A_hat * max(0.0, 1.0 - p_e / theta)
        elif p_i >= p_e / theta:
            q_i = A_hat * max(0.0, 1.0 - (p_i - p_e) / (1.0 - theta))
            q_e = A_hat * max(0.0, (theta * p_i - p_e) / (theta * (1.0 - theta)))
        else:
            q_i = A_hat * max(0.0, 1.0 - p_i)
            q_e = 0.0
    else:
        if p_i > p_e / theta:
            q_i = 0.0
            q_e = A_hat * max(0.0, 1.0 - p_e / theta)
        elif p_i > p_e - theta + 1.0:
            q_i = A_hat * max(0.0, (p_e - theta * p_i) / (theta - 1.0))
            q_e = A_hat * max(0.0, 1.0 - (p_e - p_i) / (theta - 1.0))
        else:
            q_i = A_hat * max(0.0, 1.0 - p_i)
            q_e = 0.0
    # The supplier sells one component per end product of either brand.
    return DemandBundle(Q_i=q_i, Q_e=q_e, Q_s=q_i + q_e)


def demand(prices: PricePair, params: ScenarioParams) -> DemandBundle:
    """
    Demands for M_i's and M_e's products and for S's component.

    Parameters
    ----------
    prices : PricePair
        End-product prices (non-negative).
    params : ScenarioParams
        Validated scenario; dispatches on theta < 1 vs theta > 1.

    Returns
    -------
    DemandBundle
        (Q_i, Q_e, Q_s) with Q_s = Q_i + Q_e.

    Raises
    ------
    ValueError
        If a price is negative.
    """
    return demand_at(prices.p_i, prices.p_e, CommonMarket.from_params(params))
