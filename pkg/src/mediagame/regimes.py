"""Equilibrium regime classification and parameter sweeps.

`classify` maps a parameter point to the equilibrium regime that organizes
the model's comparative statics, together with a strategy profile that the
brute-force checker in `verifier` confirms is an equilibrium at that point.
The decision procedure is exact: every branch condition is the binding
best-response inequality of the profile it emits, so classification and
verification agree everywhere off the boundary set.

Accountability branches first. A moderate challenger and a sustainable effort
premium support effort equilibria, with the voter either deferring to
accusations (listen-both) or ignoring them (mainstream-only). Otherwise no
effort can be sustained and the voter's rule is pinned by two comparisons:
the benign-prior payoff pi against u_c, and the payoff at a corroborated
accusation against u_c. Those two cuts produce the select-on-alt,
retain-always, and remove-always regimes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .model import (
    ModelParams,
    StrategyProfile,
    alt_selection_profile,
    listen_both_profile,
    mainstream_only_profile,
    remove_always_profile,
    retain_always_profile,
)
from .thresholds import Thresholds, compute_thresholds, effort_sustainable, listens_to_alt

__all__ = [
    "Regime",
    "RegimeReport",
    "SweepResult",
    "Transition",
    "classify",
    "sweep",
]


class Regime(Enum):
    LISTEN_BOTH = "accountability-listen-both"
    MAINSTREAM_ONLY = "accountability-mainstream-only"
    SELECT_ON_ALT = "no-accountability-select-on-alt"
    RETAIN_ALWAYS = "no-accountability-retain-always"
    REMOVE_ALWAYS = "no-accountability-remove-always"


@dataclass(frozen=True)
class RegimeReport:
    """Classification of one parameter point.

    profile is the supporting equilibrium; notes list the binding conditions
    in the order they were checked.
    """

    regime: Regime
    profile: StrategyProfile
    thresholds: Thresholds
    notes: tuple[str, ...]


def _accusation_payoff_without_effort(params: ModelParams) -> float:
    """Retention payoff at a corroborated accusation when nobody exerts effort.

    All subversives land in this cell; benign types reach it with probability
    phi / 2. Weights per unit of (1 - sigma): (pi phi/2, (1-pi) phi/2, l).
    """
    half_phi = params.phi / 2.0
    return (params.pi * half_phi - params.s * params.l) / (half_phi + params.l)


def classify(params: ModelParams) -> RegimeReport:
    """Deterministic regime assignment with a verifier-backed profile.

    Tie conventions: challenger windows are closed on the left and open on
    the right; effort holds at exact indifference; the voter resolves exact
    indifference between candidates to the challenger.
    """
    th = compute_thresholds(params)
    u_c = params.u_c
    listens = listens_to_alt(params)
    moderate_low = th.u_lo <= u_c

    if moderate_low and u_c < th.u_hi2 and listens and effort_sustainable(params, True):
        return RegimeReport(
            regime=Regime.LISTEN_BOTH,
            profile=listen_both_profile(),
            thresholds=th,
            notes=(
                "challenger window: u_lo <= u_c < u_hi2",
                "accusations flip the match decision (u_c >= U(consistent-accuse))",
                "effort premium survives clearance screen (k <= (q - 1/2)(1 - phi))",
            ),
        )

    if moderate_low and u_c < th.u_hi and not listens and effort_sustainable(params, False):
        return RegimeReport(
            regime=Regime.MAINSTREAM_ONLY,
            profile=mainstream_only_profile(),
            thresholds=th,
            notes=(
                "challenger window: u_lo <= u_c < u_hi",
                "accusations ignored after a match (u_c < U(consistent-accuse))",
                "baseline effort premium covers cost (k <= q - 1/2)",
            ),
        )

    # No effort can be sustained in equilibrium from here on.
    if params.pi > u_c:
        accused_payoff = _accusation_payoff_without_effort(params)
        if u_c >= accused_payoff:
            notes = [
                "no accountability: effort or challenger window fails",
                "clearance retains (pi > u_c)",
                "corroborated accusation removes (u_c >= no-effort accused payoff)",
            ]
            if params.phi <= th.phi_a:
                notes.append("accusation alone is decisive (phi <= phi_a)")
            else:
                # The accusation-only payoff already exceeds u_c, but the
                # corroborated cell keeps removal a best response because the
                # mainstream match concentrates subversive weight there.
                notes.append("accusation alone not decisive (phi > phi_a); match-corroboration binds")
            return RegimeReport(
                regime=Regime.SELECT_ON_ALT,
                profile=alt_selection_profile(),
                thresholds=th,
                notes=tuple(notes),
            )
        return RegimeReport(
            regime=Regime.RETAIN_ALWAYS,
            profile=retain_always_profile(),
            thresholds=th,
            notes=(
                "no accountability: effort or challenger window fails",
                "clearance retains (pi > u_c)",
                "retention survives even a corroborated accusation (u_c < no-effort accused payoff)",
            ),
        )

    return RegimeReport(
        regime=Regime.REMOVE_ALWAYS,
        profile=remove_always_profile(),
        thresholds=th,
        notes=(
            "no accountability: effort or challenger window fails",
            "challenger beats the benign prior (pi <= u_c)",
        ),
    )


@dataclass(frozen=True)
class Transition:
    """First grid value at which the regime differs from its predecessor."""

    value: float
    previous: Regime
    regime: Regime


@dataclass(frozen=True)
class SweepResult:
    vary: str
    points: tuple[tuple[float, RegimeReport], ...]
    transitions: tuple[Transition, ...]

    def regimes(self) -> tuple[Regime, ...]:
        return tuple(report.regime for _, report in self.points)

    def bands(self) -> tuple[Regime, ...]:
        """Regime sequence with consecutive duplicates collapsed."""
        out: list[Regime] = []
        for regime in self.regimes():
            if not out or out[-1] is not regime:
                out.append(regime)
        return tuple(out)


def sweep(params: ModelParams, vary: str, grid: Sequence[float] | Iterable[float]) -> SweepResult:
    """Classify along a grid of values for one parameter field.

    Grid points are evaluated independently in order; invalid values raise
    the usual validation errors. Transitions record each change of regime.
    """
    values = [float(v) for v in grid]
    points: list[tuple[float, RegimeReport]] = []
    transitions: list[Transition] = []
    previous: Regime | None = None
    for value in values:
        report = classify(params.replace(**{vary: value}))
        points.append((value, report))
        if previous is not None and report.regime is not previous:
            transitions.append(Transition(value, previous, report.regime))
        previous = report.regime
    return SweepResult(vary=vary, points=tuple(points), transitions=tuple(transitions))
