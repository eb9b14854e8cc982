"""Shared fixtures: the canonical parameter point and deterministic grids.

The canonical point (sigma=0.05, pi=0.5, q=0.7, k=0.1, s=1.0, u_c=0.4)
admits exact rational arithmetic for every derived quantity, so tests can
freeze hand-computed fractions as expected values.  The product grid spans
all three accountability outcomes and every sentinel/clamp branch of the
threshold code.
"""

from __future__ import annotations

import itertools
from math import isfinite

import pytest

from mediagame import ModelParams, compute_thresholds
from mediagame.beliefs import Conditioning, retention_utility

GRID_SIGMAS = (0.02, 0.05, 0.15, 0.3)
GRID_PIS = (0.2, 0.5, 0.8)
GRID_QS = (0.55, 0.7, 0.9)
GRID_KS = (0.01, 0.1, 0.3)
GRID_SS = (0.5, 1.0, 2.0)
GRID_UCS = (-0.2, 0.1, 0.4, 0.55)
GRID_PHIS = (0.05, 0.3, 0.6, 0.9)

BOUNDARY_MARGIN = 1e-6


@pytest.fixture
def pstar() -> ModelParams:
    """Canonical interior point with exact-fraction derived quantities."""
    return ModelParams(sigma=0.05, pi=0.5, q=0.7, k=0.1, s=1.0, u_c=0.4, phi=0.3)


def build_grid() -> list[ModelParams]:
    """Deterministic interior product grid (5184 points)."""
    points = []
    for sigma, pi, q, k, s, u_c, phi in itertools.product(
        GRID_SIGMAS, GRID_PIS, GRID_QS, GRID_KS, GRID_SS, GRID_UCS, GRID_PHIS
    ):
        points.append(
            ModelParams(sigma=sigma, pi=pi, q=q, k=k, s=s, u_c=u_c, phi=phi)
        )
    return points


_GRID_CACHE: list[ModelParams] | None = None


def grid_points() -> list[ModelParams]:
    global _GRID_CACHE
    if _GRID_CACHE is None:
        _GRID_CACHE = build_grid()
    return _GRID_CACHE


@pytest.fixture(scope="session")
def grid() -> list[ModelParams]:
    return grid_points()


def _accused_payoff_without_effort(params: ModelParams) -> float:
    """Independent copy of the corroborated-accusation cutoff used by classify.

    Under the no-effort profile the (agree, accuse) cell pools high and low
    types (each agreeing half the time, accused with probability phi) with
    the subversive type (always agreeing, always accused), so the retention
    payoff there is (pi*phi/2 - s*l) / (phi/2 + l) per unit of benign mass.
    """
    half_phi = params.phi / 2.0
    ell = params.l
    return (params.pi * half_phi - params.s * ell) / (half_phi + ell)


def boundary_distances(params: ModelParams) -> list[float]:
    """Signed distances from every decision boundary of classify().

    A point is comparison-stable when all of these are bounded away from
    zero: the classifier and the equilibrium checker then agree regardless
    of how float rounding resolves the knife-edge cases.
    """
    th = compute_thresholds(params)
    dists = [
        params.u_c - th.u_lo,
        params.u_c - th.u_hi,
        params.u_c - th.u_hi2,
        params.u_c - retention_utility(params, Conditioning.CONSISTENT_ACCUSE),
        params.u_c - params.pi,
        params.u_c - _accused_payoff_without_effort(params),
        params.k - (params.q - 0.5),
        params.k - (params.q - 0.5) * (1.0 - params.phi),
    ]
    return [d for d in dists if isfinite(d)]


def clear_of_boundaries(params: ModelParams, margin: float = BOUNDARY_MARGIN) -> bool:
    """True when params sits strictly outside every decision-boundary band."""
    return all(abs(d) > margin for d in boundary_distances(params))


def off_boundary_grid() -> list[ModelParams]:
    return [p for p in grid_points() if clear_of_boundaries(p)]


@pytest.fixture(scope="session")
def stable_grid() -> list[ModelParams]:
    return off_boundary_grid()
