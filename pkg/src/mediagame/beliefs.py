"""Closed-form voter beliefs for the benchmark accountability profile.

Each conditioning event below has a posterior over incumbent types that can
be written as a ratio of short products in the primitives. The weights are
stated per unit of (1 - sigma), so the subversive type enters through the
prior odds l = sigma / (1 - sigma). All six events presume the high type
exerts effort (the accountability benchmark); events that condition only on
the alternative report have the same posterior either way, because that
report never depends on policy or state.

The same posteriors fall out of the exact enumeration in `model`, which the
test suite uses as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .model import ModelParams, NonFiniteError, OutOfRangeError

__all__ = [
    "Conditioning",
    "Posterior",
    "UnreachableConditioningError",
    "mainstream_trust",
    "posterior",
    "retention_utility",
]


class UnreachableConditioningError(ValueError):
    """Raised when a conditioning event has probability zero at these params."""


class Conditioning(Enum):
    """Voter information events with closed-form posteriors.

    CONSISTENT_ANY:  mainstream agrees with the policy; alt report ignored.
    INCONSISTENT:    mainstream disagrees; rules the subversive type out.
    CONSISTENT_CLEAR: agrees and the alt outlet clears the incumbent.
    CONSISTENT_ACCUSE: agrees and the alt outlet accuses.
    ALT_ONLY_ACCUSE: accusation alone, mainstream ignored.
    ALT_ONLY_CLEAR:  clearance alone, mainstream ignored.
    """

    CONSISTENT_ANY = "consistent-any"
    INCONSISTENT = "inconsistent"
    CONSISTENT_CLEAR = "consistent-clear"
    CONSISTENT_ACCUSE = "consistent-accuse"
    ALT_ONLY_ACCUSE = "alt-only-accuse"
    ALT_ONLY_CLEAR = "alt-only-clear"


@dataclass(frozen=True)
class Posterior:
    """Type distribution after conditioning; components sum to one."""

    p_high: float
    p_low: float
    p_subversive: float

    def retention_utility(self, s: float) -> float:
        """Voter's expected election-stage payoff from retaining."""
        return self.p_high - s * self.p_subversive

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.p_high, self.p_low, self.p_subversive)


def _condition_weights(params: ModelParams, conditioning: Conditioning) -> tuple[float, float, float]:
    """Unnormalized (high, low, subversive) weights per unit of (1 - sigma)."""
    pi, q, phi, l = params.pi, params.q, params.phi, params.l
    half_low = (1.0 - pi) / 2.0
    if conditioning is Conditioning.CONSISTENT_ANY:
        # subversive always matches; benign types match with q or 1/2
        return (pi * q, half_low, l)
    if conditioning is Conditioning.INCONSISTENT:
        return (pi * (1.0 - q), half_low, 0.0)
    if conditioning is Conditioning.CONSISTENT_CLEAR:
        return (pi * q * (1.0 - phi), half_low * (1.0 - phi), 0.0)
    if conditioning is Conditioning.CONSISTENT_ACCUSE:
        return (pi * q * phi, half_low * phi, l)
    if conditioning is Conditioning.ALT_ONLY_ACCUSE:
        # only malicious outlets accuse benign incumbents
        return (pi * phi, (1.0 - pi) * phi, l)
    if conditioning is Conditioning.ALT_ONLY_CLEAR:
        return (pi * (1.0 - phi), (1.0 - pi) * (1.0 - phi), 0.0)
    raise ValueError(f"unknown conditioning {conditioning!r}")


def posterior(params: ModelParams, conditioning: Conditioning) -> Posterior:
    """Exact posterior over incumbent types given one conditioning event.

    Raises UnreachableConditioningError when the event has probability zero,
    which happens only at phi = 1 for the two clearance events.
    """
    w_high, w_low, w_sub = _condition_weights(params, conditioning)
    total = w_high + w_low + w_sub
    if total <= 0.0:
        raise UnreachableConditioningError(
            f"{conditioning.value} has probability zero at phi={params.phi}"
        )
    return Posterior(w_high / total, w_low / total, w_sub / total)


def retention_utility(params: ModelParams, conditioning: Conditioning) -> float:
    """Voter's payoff from retaining, conditional on the event.

    Composition of `posterior`: p_high - s * p_subversive. The inconsistent
    event depends only on pi and q; the subversive weight there is zero.
    """
    return posterior(params, conditioning).retention_utility(params.s)


def mainstream_trust(sigma: float, phi: float) -> float:
    """Voter confidence that the mainstream outlet is truthful after an accusation.

    Uses the benchmark form (1-sigma)(1-phi) / ((1-sigma)(1-phi) + sigma): the
    prior weight on a truthful outlet, discounted by the alternative outlet's
    reliability, against the subversion prior. It starts at the prior 1 - sigma
    when the accuser is surely truthful and falls as reliability erodes.
    """
    sigma = float(sigma)
    phi = float(phi)
    if not math.isfinite(sigma):
        raise NonFiniteError("sigma", f"must be finite, got {sigma!r}")
    if not 0.0 < sigma < 1.0:
        raise OutOfRangeError("sigma", "must be > 0.0 and < 1.0")
    if not math.isfinite(phi):
        raise NonFiniteError("phi", f"must be finite, got {phi!r}")
    if not 0.0 <= phi <= 1.0:
        raise OutOfRangeError("phi", "must be >= 0.0 and <= 1.0")
    kept = (1.0 - sigma) * (1.0 - phi)
    return kept / (kept + sigma)
