"""Monte Carlo election simulation with a reproducible counter-based stream.

Randomness comes from numpy's Philox generator, a counter-based RNG keyed by
the caller's seed. Replication i owns the two counter blocks starting at 2*i,
which is eight float64 draws laid out as:

    column 0: incumbent type     (subversive below sigma, then high, then low)
    column 1: policy state       (state 1 when the draw is >= 1/2)
    column 2: policy coin        (used only by uninformed incumbents)
    column 3: mainstream noise   (truthful outlet matches the state below q)
    column 4: alt outlet type    (malicious below phi)
    columns 5-7: reserved padding

Because every replication reads a fixed counter window and all aggregation
happens through integer tallies, results are bit-for-bit identical for a
given (seed, n) regardless of chunking or evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .beliefs import Posterior
from .model import (
    OBSERVATION_CLASSES,
    IncumbentType,
    ModelParams,
    ObservationClass,
    StrategyProfile,
    outcome_distribution,
)

__all__ = [
    "InvalidCountError",
    "Metrics",
    "simulate",
    "theoretical_metrics",
]

_DRAWS_PER_REPLICATION = 8  # two Philox counter blocks of four float64 each
_TYPES = (IncumbentType.HIGH, IncumbentType.LOW, IncumbentType.SUBVERSIVE)


class InvalidCountError(ValueError):
    """Raised when the requested replication count is not a positive integer."""


@dataclass(frozen=True)
class Metrics:
    """Election outcome statistics, either empirical or exact.

    Exact metrics carry n_replications = 0 and seed = 0. Empirical retention
    probabilities are NaN for a type that was never drawn; empirical
    posteriors omit cells that never occurred.
    """

    retain_prob_by_type: Mapping[IncumbentType, float]
    p_high_retained: float
    p_subversive_retained: float
    expected_voter_welfare: float
    empirical_posteriors: Mapping[ObservationClass, Posterior]
    n_replications: int
    seed: int


def _metrics_from_tallies(
    params: ModelParams,
    profile: StrategyProfile,
    n: int,
    seed: int,
    type_counts: np.ndarray,
    retained_counts: np.ndarray,
    cell_type_counts: np.ndarray,
) -> Metrics:
    retain_by_type: dict[IncumbentType, float] = {}
    for idx, incumbent_type in enumerate(_TYPES):
        seen = int(type_counts[idx])
        retain_by_type[incumbent_type] = (
            int(retained_counts[idx]) / seen if seen else math.nan
        )

    # Welfare from integer tallies: u_c plus each retained type's payoff edge.
    edge = 0.0
    for idx, incumbent_type in enumerate(_TYPES):
        edge += int(retained_counts[idx]) * (params.voter_utility(incumbent_type) - params.u_c)
    welfare = params.u_c + edge / n

    posteriors: dict[ObservationClass, Posterior] = {}
    for cell_idx, obs in enumerate(OBSERVATION_CLASSES):
        cell_total = int(cell_type_counts[cell_idx].sum())
        if cell_total == 0:
            continue
        h, lo, sub = (int(cell_type_counts[cell_idx, t]) for t in range(3))
        posteriors[obs] = Posterior(h / cell_total, lo / cell_total, sub / cell_total)

    return Metrics(
        retain_prob_by_type=retain_by_type,
        p_high_retained=retain_by_type[IncumbentType.HIGH],
        p_subversive_retained=retain_by_type[IncumbentType.SUBVERSIVE],
        expected_voter_welfare=welfare,
        empirical_posteriors=posteriors,
        n_replications=n,
        seed=seed,
    )


def simulate(
    params: ModelParams,
    profile: StrategyProfile,
    n: int,
    seed: int,
    chunk_size: int = 1 << 16,
) -> Metrics:
    """Simulate n independent elections under one strategy profile.

    Deterministic in (seed, n): chunk_size only bounds memory and cannot
    change any output bit. Raises InvalidCountError unless n >= 1.
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise InvalidCountError(f"replication count must be a positive integer, got {n!r}")
    if chunk_size < 1:
        raise InvalidCountError(f"chunk_size must be positive, got {chunk_size!r}")

    sigma, pi, q, phi = params.sigma, params.pi, params.q, params.phi
    retain_lookup = np.array(profile.retain, dtype=bool)

    type_counts = np.zeros(3, dtype=np.int64)
    retained_counts = np.zeros(3, dtype=np.int64)
    cell_type_counts = np.zeros((4, 3), dtype=np.int64)

    for start in range(0, n, chunk_size):
        m = min(chunk_size, n - start)
        # Counter offset 2*start pins this chunk to its replication window.
        bits = np.random.Philox(key=seed, counter=2 * start)
        u = np.random.Generator(bits).random((m, _DRAWS_PER_REPLICATION))

        subversive = u[:, 0] < sigma
        high = ~subversive & (u[:, 0] < sigma + (1.0 - sigma) * pi)
        type_idx = np.where(high, 0, np.where(subversive, 2, 1)).astype(np.int64)

        state = (u[:, 1] >= 0.5).astype(np.int8)
        coin = (u[:, 2] >= 0.5).astype(np.int8)
        informed = high & profile.high_effort
        policy = np.where(informed, state, coin)

        truthful_msg = np.where(u[:, 3] < q, state, 1 - state)
        message = np.where(subversive, policy, truthful_msg)

        malicious = u[:, 4] < phi
        accuse = malicious | subversive
        agree = message == policy

        cell_idx = np.where(agree, 0, 2) + accuse.astype(np.int64)
        retained = retain_lookup[cell_idx]

        type_counts += np.bincount(type_idx, minlength=3)
        retained_counts += np.bincount(type_idx[retained], minlength=3)
        flat = cell_idx * 3 + type_idx
        cell_type_counts += np.bincount(flat, minlength=12).reshape(4, 3)

    return _metrics_from_tallies(
        params, profile, n, seed, type_counts, retained_counts, cell_type_counts
    )


def theoretical_metrics(params: ModelParams, profile: StrategyProfile) -> Metrics:
    """Exact counterpart of `simulate` from the enumerated outcome table."""
    table = outcome_distribution(params, profile)

    retain_by_type = {
        incumbent_type: table.retention_probability(incumbent_type)
        for incumbent_type in _TYPES
    }

    edge = 0.0
    for incumbent_type in _TYPES:
        prior = params.prior(incumbent_type)
        kept = retain_by_type[incumbent_type]
        edge += prior * kept * (params.voter_utility(incumbent_type) - params.u_c)
    welfare = params.u_c + edge

    posteriors: dict[ObservationClass, Posterior] = {}
    for obs in OBSERVATION_CLASSES:
        total = table.class_probability(obs)
        if total <= 0.0:
            continue
        weights = table.type_weights_given([obs])
        posteriors[obs] = Posterior(
            weights[IncumbentType.HIGH] / total,
            weights[IncumbentType.LOW] / total,
            weights[IncumbentType.SUBVERSIVE] / total,
        )

    return Metrics(
        retain_prob_by_type=retain_by_type,
        p_high_retained=retain_by_type[IncumbentType.HIGH],
        p_subversive_retained=retain_by_type[IncumbentType.SUBVERSIVE],
        expected_voter_welfare=welfare,
        empirical_posteriors=posteriors,
        n_replications=0,
        seed=0,
    )
