"""Brute-force equilibrium checking over the pure symmetric profile space.

The game's pure, policy-symmetric profile space is tiny: the high type either
exerts effort or not, and the voter picks retain/remove per observation cell,
giving 2 * 2**4 = 32 profiles. `is_pbe` checks one profile by recomputing
best responses against the exact outcome table: the voter must weakly prefer
her prescribed action at every on-path cell under Bayes-consistent beliefs,
and the high type's effort choice must be weakly optimal given the voter's
rule. Off-path cells are unconstrained, matching the usual freedom to pick
supporting beliefs there. Exact ties count as optimal for either action;
reported deviation gains always exceed the tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .beliefs import Posterior
from .model import (
    OBSERVATION_CLASSES,
    IncumbentType,
    ModelParams,
    ObservationClass,
    OutcomeTable,
    StrategyProfile,
    outcome_distribution,
)

__all__ = [
    "EffortDeviation",
    "TOLERANCE",
    "VerifyResult",
    "VoterDeviation",
    "beliefs_from_profile",
    "enumerate_profiles",
    "find_equilibria",
    "is_pbe",
]

TOLERANCE = 1e-12


@dataclass(frozen=True)
class VoterDeviation:
    """A cell where flipping the vote strictly improves the voter's payoff."""

    observation: ObservationClass
    prescribed_retain: bool
    gain: float


@dataclass(frozen=True)
class EffortDeviation:
    """Flipping the high type's effort strictly improves her payoff."""

    prescribed_effort: bool
    gain: float


@dataclass(frozen=True)
class VerifyResult:
    profile: StrategyProfile
    is_equilibrium: bool
    voter_deviations: tuple[VoterDeviation, ...]
    effort_deviation: EffortDeviation | None
    offpath_classes: tuple[ObservationClass, ...]


def enumerate_profiles() -> tuple[StrategyProfile, ...]:
    """All 32 pure symmetric profiles in a fixed order.

    No-effort profiles come first. Within an effort block, voter rules count
    up in binary with bit j the retain flag of OBSERVATION_CLASSES[j], so the
    very first profile is (no effort, remove at every observation).
    """
    profiles = []
    for high_effort in (False, True):
        for bits in range(16):
            retain = tuple(bool((bits >> j) & 1) for j in range(4))
            profiles.append(StrategyProfile(high_effort, retain))
    return tuple(profiles)


def beliefs_from_profile(
    params: ModelParams, profile: StrategyProfile
) -> dict[ObservationClass, Posterior]:
    """Bayes-consistent beliefs at every on-path observation cell.

    Zero-probability cells are omitted; equilibrium analysis is free to
    choose beliefs there.
    """
    table = outcome_distribution(params, profile)
    out: dict[ObservationClass, Posterior] = {}
    for obs in OBSERVATION_CLASSES:
        total = table.class_probability(obs)
        if total <= 0.0:
            continue
        weights = table.type_weights_given([obs])
        out[obs] = Posterior(
            weights[IncumbentType.HIGH] / total,
            weights[IncumbentType.LOW] / total,
            weights[IncumbentType.SUBVERSIVE] / total,
        )
    return out


def _policy_symmetry_audit(table: OutcomeTable) -> None:
    """Uninformed types must be exactly indifferent across policy labels.

    Retention odds are accumulated with fsum, so both policy branches reduce
    the same multiset of products and the equality is bitwise. A failure
    means the enumeration itself broke label symmetry.
    """
    rule = table.profile
    for incumbent_type in (IncumbentType.LOW, IncumbentType.SUBVERSIVE):
        per_policy = []
        for policy in (0, 1):
            mass = math.fsum(
                a.weight for a in table.atoms
                if a.incumbent_type is incumbent_type and a.policy == policy
            )
            kept = math.fsum(
                a.weight for a in table.atoms
                if a.incumbent_type is incumbent_type
                and a.policy == policy
                and rule.retains(a.observation)
            )
            per_policy.append(kept / mass)
        if per_policy[0] != per_policy[1]:
            raise RuntimeError(
                f"policy symmetry broken for {incumbent_type.value}: {per_policy}"
            )


def _high_type_payoff(params: ModelParams, profile: StrategyProfile, effort: bool) -> float:
    """Office payoff to the high type under the profile's voter rule."""
    branch = StrategyProfile(effort, profile.retain)
    win = outcome_distribution(params, branch).retention_probability(IncumbentType.HIGH)
    return win * params.ego_rent - (params.k if effort else 0.0)


def is_pbe(params: ModelParams, profile: StrategyProfile, tol: float = TOLERANCE) -> VerifyResult:
    """Check one profile for equilibrium against the exact outcome table.

    Voter optimality is evaluated at every on-path cell: the prescribed
    action's expected payoff must be within `tol` of the best action. The
    high type's effort is compared by win-probability difference times the
    office payoff against the cost. Low and subversive policy indifference
    is re-audited on every call.
    """
    table = outcome_distribution(params, profile)
    _policy_symmetry_audit(table)

    voter_deviations: list[VoterDeviation] = []
    offpath: list[ObservationClass] = []
    for obs in OBSERVATION_CLASSES:
        total = table.class_probability(obs)
        if total <= 0.0:
            offpath.append(obs)
            continue
        weights = table.type_weights_given([obs])
        retain_payoff = (
            weights[IncumbentType.HIGH] - params.s * weights[IncumbentType.SUBVERSIVE]
        ) / total
        prescribed_retain = profile.retains(obs)
        gain = (params.u_c - retain_payoff) if prescribed_retain else (retain_payoff - params.u_c)
        if gain > tol:
            voter_deviations.append(VoterDeviation(obs, prescribed_retain, gain))

    payoff_as_is = _high_type_payoff(params, profile, profile.high_effort)
    payoff_flipped = _high_type_payoff(params, profile, not profile.high_effort)
    effort_deviation = None
    effort_gain = payoff_flipped - payoff_as_is
    if effort_gain > tol:
        effort_deviation = EffortDeviation(profile.high_effort, effort_gain)

    return VerifyResult(
        profile=profile,
        is_equilibrium=not voter_deviations and effort_deviation is None,
        voter_deviations=tuple(voter_deviations),
        effort_deviation=effort_deviation,
        offpath_classes=tuple(offpath),
    )


def find_equilibria(params: ModelParams, tol: float = TOLERANCE) -> tuple[StrategyProfile, ...]:
    """All equilibria among the 32 pure symmetric profiles, in enumeration order."""
    return tuple(
        profile
        for profile in enumerate_profiles()
        if is_pbe(params, profile, tol).is_equilibrium
    )
