"""Core types and exact outcome enumeration for the media accountability game.

The game has three players that matter for outcomes: an incumbent politician,
a pair of media outlets, and a voter. Nature draws a policy state (0 or 1,
equally likely) and an incumbent type:

* high:       competent and benign; can pay an effort cost to learn the state
              before choosing policy, in which case she matches it.
* low:        benign but uninformed; picks either policy with probability 1/2.
* subversive: hostile; picks either policy with probability 1/2 and controls
              the mainstream outlet, which then parrots her choice.

The mainstream outlet, when not captured, reports the true state with accuracy
q > 1/2. The alternative outlet is truthful with probability 1 - phi, in which
case it accuses the incumbent exactly when she is subversive; with probability
phi it is malicious and accuses regardless. The voter sees the policy choice,
the mainstream message, and the alternative report, then retains the incumbent
or elects an outside challenger.

Because types mix 1/2 on policy and the state is symmetric, the voter's
observation collapses to a sufficient statistic with four cells: whether the
mainstream message agrees with the policy, and whether the alternative outlet
accused. `outcome_distribution` enumerates the exact joint distribution over
those cells, one small weighted atom per branch of the game tree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Mapping

__all__ = [
    "AltReport",
    "Atom",
    "IncumbentType",
    "ModelParams",
    "NonFiniteError",
    "OBSERVATION_CLASSES",
    "ObservationClass",
    "OutcomeTable",
    "OutOfRangeError",
    "ParamError",
    "StrategyProfile",
    "alt_selection_profile",
    "listen_both_profile",
    "mainstream_only_profile",
    "observation_probability",
    "outcome_distribution",
    "remove_always_profile",
    "retain_always_profile",
    "validate_params",
]

EGO_RENT = 1.0  # office payoff for any retained incumbent; fixed by normalization


class ParamError(ValueError):
    """A model parameter failed validation. `field` names the offender."""

    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name


class NonFiniteError(ParamError):
    pass


class OutOfRangeError(ParamError):
    pass


# Validation bounds: (low, high, low_open, high_open). None means unbounded.
_BOUNDS = {
    "sigma": (0.0, 1.0, True, True),
    "pi": (0.0, 1.0, True, True),
    "q": (0.5, 1.0, True, True),
    "k": (0.0, None, False, True),
    "s": (0.0, None, False, True),
    "phi": (0.0, 1.0, False, False),
}


@dataclass(frozen=True)
class ModelParams:
    """Primitives of one game instance.

    sigma: prior probability the incumbent is subversive, in (0, 1).
    pi:    probability a benign incumbent is high type, in (0, 1).
    q:     mainstream accuracy when not captured, in (1/2, 1).
    k:     effort cost paid by a high type who learns the state, >= 0.
    s:     voter's loss from a retained subversive, >= 0.
    u_c:   voter's payoff from the challenger, in [-s, 1].
    phi:   probability the alternative outlet is malicious, in [0, 1].

    Corner values of sigma and pi are rejected: they collapse the type space
    and make several conditional beliefs undefined.
    """

    sigma: float
    pi: float
    q: float
    k: float
    s: float
    u_c: float
    phi: float

    def __post_init__(self):
        for name in ("sigma", "pi", "q", "k", "s", "u_c", "phi"):
            value = getattr(self, name)
            object.__setattr__(self, name, float(value))
        for name, (lo, hi, lo_open, hi_open) in _BOUNDS.items():
            value = getattr(self, name)
            if not math.isfinite(value):
                raise NonFiniteError(name, f"must be finite, got {value!r}")
            if lo is not None and (value < lo or (lo_open and value == lo)):
                raise OutOfRangeError(name, f"must be {'>' if lo_open else '>='} {lo}")
            if hi is not None and (value > hi or (hi_open and value == hi)):
                raise OutOfRangeError(name, f"must be {'<' if hi_open else '<='} {hi}")
        if not math.isfinite(self.u_c):
            raise NonFiniteError("u_c", f"must be finite, got {self.u_c!r}")
        # u_c below -s would make even a sure subversive preferable to the challenger
        if self.u_c < -self.s or self.u_c > 1.0:
            raise OutOfRangeError("u_c", f"must lie in [-s, 1] = [{-self.s}, 1]")

    @property
    def l(self) -> float:
        """Subversion odds sigma / (1 - sigma), the recurring prior-odds weight."""
        return self.sigma / (1.0 - self.sigma)

    @property
    def ego_rent(self) -> float:
        return EGO_RENT

    def prior(self, incumbent_type: "IncumbentType") -> float:
        if incumbent_type is IncumbentType.SUBVERSIVE:
            return self.sigma
        if incumbent_type is IncumbentType.HIGH:
            return (1.0 - self.sigma) * self.pi
        return (1.0 - self.sigma) * (1.0 - self.pi)

    def voter_utility(self, incumbent_type: "IncumbentType") -> float:
        """Election-stage payoff to the voter from retaining this type."""
        if incumbent_type is IncumbentType.HIGH:
            return 1.0
        if incumbent_type is IncumbentType.LOW:
            return 0.0
        return -self.s

    def replace(self, **changes: float) -> "ModelParams":
        """Copy with fields changed; the copy is re-validated."""
        return replace(self, **changes)


def validate_params(
    sigma: float,
    pi: float,
    q: float,
    k: float,
    s: float,
    u_c: float,
    phi: float,
) -> ModelParams:
    """Validate seven raw numbers and return an immutable ModelParams.

    Raises NonFiniteError or OutOfRangeError naming the offending field.
    """
    return ModelParams(sigma=sigma, pi=pi, q=q, k=k, s=s, u_c=u_c, phi=phi)


class IncumbentType(Enum):
    HIGH = "high"
    LOW = "low"
    SUBVERSIVE = "subversive"


class AltReport(Enum):
    """What the alternative outlet says about the incumbent."""

    ACCUSE = "accuse"  # alleges the incumbent is subversive
    CLEAR = "clear"


@dataclass(frozen=True)
class ObservationClass:
    """Voter-side sufficient statistic for one election.

    agree:  mainstream message matched the incumbent's policy choice.
    report: the alternative outlet's verdict.
    """

    agree: bool
    report: AltReport

    def label(self) -> str:
        side = "consistent" if self.agree else "inconsistent"
        return f"{side}-{self.report.value}"


# Canonical cell order; voter rules are stored as a retain-flag per cell.
OBSERVATION_CLASSES: tuple[ObservationClass, ...] = (
    ObservationClass(True, AltReport.CLEAR),
    ObservationClass(True, AltReport.ACCUSE),
    ObservationClass(False, AltReport.CLEAR),
    ObservationClass(False, AltReport.ACCUSE),
)

_CLASS_INDEX = {obs: i for i, obs in enumerate(OBSERVATION_CLASSES)}


@dataclass(frozen=True)
class StrategyProfile:
    """A pure strategy profile, symmetric across policy labels.

    high_effort: whether the high type pays k to learn the state.
    retain:      retain flag per observation cell, in OBSERVATION_CLASSES order.
    """

    high_effort: bool
    retain: tuple[bool, bool, bool, bool]

    @classmethod
    def from_rule(
        cls, high_effort: bool, rule: Mapping[ObservationClass, bool]
    ) -> "StrategyProfile":
        return cls(high_effort, tuple(bool(rule[obs]) for obs in OBSERVATION_CLASSES))

    def retains(self, obs: ObservationClass) -> bool:
        return self.retain[_CLASS_INDEX[obs]]

    def retained_classes(self) -> tuple[ObservationClass, ...]:
        return tuple(o for o, keep in zip(OBSERVATION_CLASSES, self.retain) if keep)

    def describe(self) -> str:
        effort = "effort" if self.high_effort else "no-effort"
        kept = [o.label() for o in self.retained_classes()]
        return f"{effort}; retain at {{{', '.join(kept)}}}" if kept else f"{effort}; retain never"


def listen_both_profile() -> StrategyProfile:
    """Effort; retain only when the mainstream agrees and the alt outlet clears."""
    return StrategyProfile(True, (True, False, False, False))


def mainstream_only_profile() -> StrategyProfile:
    """Effort; retain whenever the mainstream agrees, ignoring the alt outlet."""
    return StrategyProfile(True, (True, True, False, False))


def alt_selection_profile() -> StrategyProfile:
    """No effort; remove exactly on a corroborated accusation.

    An accusation alongside a mainstream-policy match is the only cell a
    subversive incumbent can reach with an accusation pending, so removing
    there and retaining elsewhere screens out subversives without effort
    incentives. A contradicted accusation (mainstream disagrees) proves the
    incumbent is not subversive, so the voter keeps her.
    """
    return StrategyProfile(False, (True, False, True, True))


def retain_always_profile() -> StrategyProfile:
    return StrategyProfile(False, (True, True, True, True))


def remove_always_profile() -> StrategyProfile:
    return StrategyProfile(False, (False, False, False, False))


@dataclass(frozen=True)
class Atom:
    """One leaf of the enumerated game tree with its exact probability."""

    incumbent_type: IncumbentType
    state: int
    effort: bool
    policy: int
    message: int
    alt_malicious: bool
    report: AltReport
    weight: float

    @property
    def observation(self) -> ObservationClass:
        return ObservationClass(self.message == self.policy, self.report)


@dataclass(frozen=True, eq=False)
class OutcomeTable:
    """Exact joint distribution over game-tree leaves for one profile.

    Marginals are accumulated with math.fsum so they are correctly rounded
    and independent of atom order.
    """

    params: ModelParams
    profile: StrategyProfile
    atoms: tuple[Atom, ...]
    class_probs: Mapping[ObservationClass, float] = field(init=False)
    joint_probs: Mapping[tuple[IncumbentType, ObservationClass], float] = field(init=False)

    def __post_init__(self):
        by_class: dict[ObservationClass, list[float]] = {o: [] for o in OBSERVATION_CLASSES}
        by_joint: dict[tuple[IncumbentType, ObservationClass], list[float]] = {}
        for atom in self.atoms:
            obs = atom.observation
            by_class[obs].append(atom.weight)
            by_joint.setdefault((atom.incumbent_type, obs), []).append(atom.weight)
        object.__setattr__(
            self, "class_probs", {o: math.fsum(ws) for o, ws in by_class.items()}
        )
        object.__setattr__(
            self, "joint_probs", {key: math.fsum(ws) for key, ws in by_joint.items()}
        )

    def total_weight(self) -> float:
        return math.fsum(a.weight for a in self.atoms)

    def class_probability(self, obs: ObservationClass) -> float:
        return self.class_probs.get(obs, 0.0)

    def joint_probability(self, incumbent_type: IncumbentType, obs: ObservationClass) -> float:
        return self.joint_probs.get((incumbent_type, obs), 0.0)

    def event_probability(self, classes: Iterable[ObservationClass]) -> float:
        return math.fsum(self.class_probability(o) for o in set(classes))

    def type_weights_given(
        self, classes: Iterable[ObservationClass]
    ) -> dict[IncumbentType, float]:
        """Unnormalized type weights conditional on the observation landing in `classes`."""
        wanted = set(classes)
        return {
            t: math.fsum(self.joint_probability(t, o) for o in wanted)
            for t in IncumbentType
        }

    def retention_probability(
        self, incumbent_type: IncumbentType, profile: StrategyProfile | None = None
    ) -> float:
        """P(retained | type) under `profile`'s voter rule (default: own profile).

        Sure and impossible events are resolved structurally so they come out
        exactly 1.0 or 0.0 rather than within a rounding error of it.
        """
        rule = (profile or self.profile)
        mine = [a for a in self.atoms if a.incumbent_type is incumbent_type]
        kept = [a for a in mine if rule.retains(a.observation)]
        if not kept:
            return 0.0
        if len(kept) == len(mine):
            return 1.0
        total = math.fsum(a.weight for a in kept)
        return total / self.params.prior(incumbent_type)


def outcome_distribution(params: ModelParams, profile: StrategyProfile) -> OutcomeTable:
    """Enumerate the exact outcome distribution induced by a profile.

    Branches with probability zero are dropped, so the table holds at most 40
    atoms. Policy and state labels are treated symmetrically throughout; the
    voter never needs more than the (agree, report) cell.
    """
    q, phi = params.q, params.phi
    atoms: list[Atom] = []
    for incumbent_type in IncumbentType:
        p_type = params.prior(incumbent_type)
        effort = profile.high_effort and incumbent_type is IncumbentType.HIGH
        for state in (0, 1):
            p_state = 0.5
            for policy in (0, 1):
                if effort:
                    p_policy = 1.0 if policy == state else 0.0
                else:
                    p_policy = 0.5  # uninformed types mix evenly over policies
                for message in (0, 1):
                    if incumbent_type is IncumbentType.SUBVERSIVE:
                        # captured outlet always endorses the incumbent's choice
                        p_message = 1.0 if message == policy else 0.0
                    else:
                        p_message = q if message == state else 1.0 - q
                    for alt_malicious in (False, True):
                        p_alt = phi if alt_malicious else 1.0 - phi
                        weight = p_type * p_state * p_policy * p_message * p_alt
                        if weight == 0.0:
                            continue
                        accuse = alt_malicious or incumbent_type is IncumbentType.SUBVERSIVE
                        atoms.append(
                            Atom(
                                incumbent_type=incumbent_type,
                                state=state,
                                effort=effort,
                                policy=policy,
                                message=message,
                                alt_malicious=alt_malicious,
                                report=AltReport.ACCUSE if accuse else AltReport.CLEAR,
                                weight=weight,
                            )
                        )
    return OutcomeTable(params=params, profile=profile, atoms=tuple(atoms))


def observation_probability(table: OutcomeTable, obs: ObservationClass) -> float:
    """Marginal probability of one observation cell."""
    return table.class_probability(obs)
