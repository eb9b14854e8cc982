"""Closed-form thresholds that organize the equilibrium regimes.

Every comparison the classifier makes reduces to one of a handful of scalar
thresholds in phi or u_c. The phi-thresholds can leave [0, 1] or blow up when
their denominators vanish, so the dataclass carries the raw value (possibly
infinite) alongside a clamped-to-[0, 1] companion for plotting, and the
predicates the classifier actually consumes are direct comparisons that never
divide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .beliefs import Conditioning, retention_utility
from .model import ModelParams

__all__ = [
    "Thresholds",
    "compute_thresholds",
    "effort_sustainable",
    "listens_to_alt",
]


def _clamp01(x: float) -> float:
    if x != x:  # NaN guard; raw thresholds are never NaN but stay defensive
        return 0.0
    return min(max(x, 0.0), 1.0)


@dataclass(frozen=True)
class Thresholds:
    """Scalar boundaries of the regime map at one parameter point.

    phi_e:  malice level above which effort cannot be sustained when the voter
            requires clearance on top of agreement; 1 - k / (q - 1/2).
    phi_v:  malice level above which the voter stops deferring to an accusation
            when the mainstream agrees; +inf when the voter defers at any phi.
    phi_a:  malice level above which an accusation alone no longer drops the
            retention payoff below the challenger; +inf when it never does.
    u_lo:   retention payoff after a mainstream-policy mismatch.
    u_hi:   retention payoff after a match, alt report ignored.
    u_hi2:  retention payoff after a match plus clearance (phi-free).

    Raw values live on the extended real line; *_unit fields clamp to [0, 1].
    """

    phi_e: float
    phi_v: float
    phi_a: float
    u_lo: float
    u_hi: float
    u_hi2: float
    phi_e_unit: float
    phi_v_unit: float
    phi_a_unit: float


def compute_thresholds(params: ModelParams) -> Thresholds:
    """All regime boundaries for one parameter point.

    phi_v and phi_a are reported as +inf when their denominators are not
    positive; the matching predicates below stay exact in those cases.
    """
    pi, q, k, s, u_c, l = params.pi, params.q, params.k, params.s, params.u_c, params.l
    half_low = (1.0 - pi) / 2.0

    phi_e = 1.0 - k / (q - 0.5)

    # u_c >= U(consistent-accuse) rearranges to phi <= (s + u_c) l / denom with
    # denom = pi q (1 - u_c) - half_low * u_c; nonpositive denom means the
    # comparison holds for every phi.
    denom_v = pi * q * (1.0 - u_c) - half_low * u_c
    phi_v = (s + u_c) * l / denom_v if denom_v > 0.0 else math.inf

    denom_a = pi - u_c
    phi_a = (s + u_c) * l / denom_a if denom_a > 0.0 else math.inf

    u_lo = pi * (1.0 - q) / (pi * (1.0 - q) + half_low)
    u_hi = (pi * q - s * l) / (pi * q + half_low + l)
    u_hi2 = pi * q / (pi * q + half_low)

    return Thresholds(
        phi_e=phi_e,
        phi_v=phi_v,
        phi_a=phi_a,
        u_lo=u_lo,
        u_hi=u_hi,
        u_hi2=u_hi2,
        phi_e_unit=_clamp01(phi_e),
        phi_v_unit=_clamp01(phi_v),
        phi_a_unit=_clamp01(phi_a),
    )


def listens_to_alt(params: ModelParams) -> bool:
    """Whether an accusation flips the voter's decision after a mainstream match.

    True when the challenger is at least as good as retaining at the
    consistent-accuse cell. Computed as a direct payoff comparison, so
    degenerate phi_v denominators need no special casing.
    """
    return params.u_c >= retention_utility(params, Conditioning.CONSISTENT_ACCUSE)


def effort_sustainable(params: ModelParams, requires_alt_clearance: bool) -> bool:
    """Whether the high type's effort premium covers its cost.

    With a voter who also requires clearance, only the (1 - phi) truthful
    slice of accusations rewards matching the state, shrinking the premium
    from q - 1/2 to (q - 1/2)(1 - phi). Exact indifference counts as
    sustainable.
    """
    premium = params.q - 0.5
    if requires_alt_clearance:
        premium *= 1.0 - params.phi
    return params.k <= premium * params.ego_rent
