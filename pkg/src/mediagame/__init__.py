"""Electoral accountability under mainstream and alternative media.

A small exact-solver toolkit for a voting game in which an incumbent of
unknown type (competent, uninformed, or subversive) is screened by a voter
who reads two imperfect media outlets. The package provides closed-form
posteriors and thresholds, an equilibrium regime classifier, a brute-force
equilibrium verifier over the pure symmetric profile space, a reproducible
Monte Carlo simulator, and a CLI that reports sweeps as CSV plus rendered
figures.
"""

from .beliefs import (
    Conditioning,
    Posterior,
    UnreachableConditioningError,
    mainstream_trust,
    posterior,
    retention_utility,
)
from .model import (
    OBSERVATION_CLASSES,
    AltReport,
    Atom,
    IncumbentType,
    ModelParams,
    NonFiniteError,
    ObservationClass,
    OutcomeTable,
    OutOfRangeError,
    ParamError,
    StrategyProfile,
    alt_selection_profile,
    listen_both_profile,
    mainstream_only_profile,
    observation_probability,
    outcome_distribution,
    remove_always_profile,
    retain_always_profile,
    validate_params,
)
from .regimes import Regime, RegimeReport, SweepResult, Transition, classify, sweep
from .simulation import InvalidCountError, Metrics, simulate, theoretical_metrics
from .thresholds import Thresholds, compute_thresholds, effort_sustainable, listens_to_alt
from .verifier import (
    TOLERANCE,
    EffortDeviation,
    VerifyResult,
    VoterDeviation,
    beliefs_from_profile,
    enumerate_profiles,
    find_equilibria,
    is_pbe,
)

__version__ = "0.1.0"

__all__ = [
    "AltReport",
    "Atom",
    "Conditioning",
    "EffortDeviation",
    "IncumbentType",
    "InvalidCountError",
    "Metrics",
    "ModelParams",
    "NonFiniteError",
    "OBSERVATION_CLASSES",
    "ObservationClass",
    "OutOfRangeError",
    "OutcomeTable",
    "ParamError",
    "Posterior",
    "Regime",
    "RegimeReport",
    "StrategyProfile",
    "SweepResult",
    "TOLERANCE",
    "Thresholds",
    "Transition",
    "UnreachableConditioningError",
    "VerifyResult",
    "VoterDeviation",
    "alt_selection_profile",
    "beliefs_from_profile",
    "classify",
    "compute_thresholds",
    "effort_sustainable",
    "enumerate_profiles",
    "find_equilibria",
    "is_pbe",
    "listen_both_profile",
    "listens_to_alt",
    "mainstream_only_profile",
    "mainstream_trust",
    "observation_probability",
    "outcome_distribution",
    "posterior",
    "remove_always_profile",
    "retain_always_profile",
    "retention_utility",
    "simulate",
    "sweep",
    "theoretical_metrics",
    "validate_params",
]
