"""Regime classification, canonical profiles, and sweep band structure."""

from __future__ import annotations

import math

import pytest

from mediagame import (
    ModelParams,
    Regime,
    RegimeReport,
    classify,
    compute_thresholds,
    listen_both_profile,
    mainstream_only_profile,
    remove_always_profile,
    retain_always_profile,
    sweep,
)
from mediagame.model import OutOfRangeError, alt_selection_profile

CANONICAL_PROFILE = {
    Regime.LISTEN_BOTH: listen_both_profile(),
    Regime.MAINSTREAM_ONLY: mainstream_only_profile(),
    Regime.SELECT_ON_ALT: alt_selection_profile(),
    Regime.RETAIN_ALWAYS: retain_always_profile(),
    Regime.REMOVE_ALWAYS: remove_always_profile(),
}


class TestCanonicalClassifications:
    def test_low_phi_sustains_full_accountability(self, pstar):
        report = classify(pstar)
        assert report.regime is Regime.LISTEN_BOTH
        assert report.profile == listen_both_profile()

    def test_middle_phi_kills_effort_but_keeps_selection(self, pstar):
        report = classify(pstar.replace(phi=0.6))
        assert report.regime is Regime.SELECT_ON_ALT
        assert report.profile == alt_selection_profile()

    def test_high_phi_makes_voter_ignore_alt(self, pstar):
        report = classify(pstar.replace(phi=0.8))
        assert report.regime is Regime.MAINSTREAM_ONLY
        assert report.profile == mainstream_only_profile()

    def test_weak_challenger_still_selects_on_accusations(self, pstar):
        """u_c below the inconsistent-match payoff closes the effort window."""
        report = classify(pstar.replace(u_c=0.3))
        assert report.regime is Regime.SELECT_ON_ALT

    def test_challenger_between_u_hi_and_u_hi2_keeps_listening(self, pstar):
        report = classify(pstar.replace(u_c=0.5))
        assert report.regime is Regime.LISTEN_BOTH

    def test_retain_always_when_challenger_hopeless(self):
        params = ModelParams(sigma=0.01, pi=0.8, q=0.6, k=0.5, s=0.1, u_c=0.0, phi=0.5)
        report = classify(params)
        assert report.regime is Regime.RETAIN_ALWAYS
        assert report.profile == retain_always_profile()

    def test_remove_always_when_challenger_beats_benign_prior(self):
        params = ModelParams(sigma=0.05, pi=0.2, q=0.7, k=0.3, s=1.0, u_c=0.5, phi=0.5)
        report = classify(params)
        assert report.regime is Regime.REMOVE_ALWAYS
        assert report.profile == remove_always_profile()

    def test_report_carries_thresholds_and_notes(self, pstar):
        report = classify(pstar)
        assert isinstance(report, RegimeReport)
        assert report.thresholds == compute_thresholds(pstar)
        assert report.notes and all(isinstance(n, str) and n for n in report.notes)

    def test_regime_values_are_stable_identifiers(self):
        assert Regime.LISTEN_BOTH.value == "accountability-listen-both"
        assert Regime.MAINSTREAM_ONLY.value == "accountability-mainstream-only"
        assert Regime.SELECT_ON_ALT.value == "no-accountability-select-on-alt"
        assert Regime.RETAIN_ALWAYS.value == "no-accountability-retain-always"
        assert Regime.REMOVE_ALWAYS.value == "no-accountability-remove-always"


class TestProfileRegimeConsistency:
    def test_profile_matches_regime_on_grid(self, grid):
        for params in grid:
            report = classify(params)
            assert report.profile == CANONICAL_PROFILE[report.regime], params

    def test_accountability_regimes_exert_effort(self, grid):
        for params in grid:
            report = classify(params)
            expects_effort = report.regime in (Regime.LISTEN_BOTH, Regime.MAINSTREAM_ONLY)
            assert report.profile.high_effort == expects_effort, params

    def test_subversive_retention_is_exact_per_regime(self, grid):
        """Each regime pins the subversive's fate deterministically.

        A subversive's outlet always matches the policy and a truthful alt
        outlet always accuses, so every profile either always spares or always
        removes that type; the probability must come out exactly 0.0 or 1.0,
        not merely close.
        """
        from mediagame import IncumbentType, outcome_distribution

        spared = {Regime.MAINSTREAM_ONLY, Regime.RETAIN_ALWAYS}
        for params in grid:
            report = classify(params)
            table = outcome_distribution(params, report.profile)
            kept = table.retention_probability(IncumbentType.SUBVERSIVE)
            assert kept == (1.0 if report.regime in spared else 0.0), params


class TestSweeps:
    def test_canonical_phi_sweep_has_three_bands(self, pstar):
        grid = [i / 1000 for i in range(1001)]
        result = sweep(pstar, "phi", grid)
        assert result.bands() == (
            Regime.LISTEN_BOTH,
            Regime.SELECT_ON_ALT,
            Regime.MAINSTREAM_ONLY,
        )
        assert len(result.transitions) == 2
        step = 1 / 1000
        first, second = result.transitions
        assert first.previous is Regime.LISTEN_BOTH
        assert first.regime is Regime.SELECT_ON_ALT
        assert first.value - step <= 0.5 <= first.value
        assert second.previous is Regime.SELECT_ON_ALT
        assert second.regime is Regime.MAINSTREAM_ONLY
        assert second.value - step <= 140 / 209 <= second.value

    def test_cheap_effort_phi_sweep_has_two_bands(self, pstar):
        cheap = pstar.replace(k=0.01)
        grid = [i / 1000 for i in range(1001)]
        result = sweep(cheap, "phi", grid)
        assert result.bands() == (Regime.LISTEN_BOTH, Regime.MAINSTREAM_ONLY)
        assert len(result.transitions) == 1
        (only,) = result.transitions
        th = compute_thresholds(cheap)
        assert only.value - 1 / 1000 <= th.phi_v <= only.value
        # The single-transition shape needs effort cheap enough to survive
        # the full listening region.
        assert cheap.k < (cheap.q - 0.5) * (1.0 - th.phi_v)

    def test_alternative_point_reproduces_three_bands(self):
        params = ModelParams(sigma=0.1, pi=0.6, q=0.8, k=0.2, s=1.5, u_c=0.38, phi=0.0)
        grid = [i / 1000 for i in range(1001)]
        result = sweep(params, "phi", grid)
        assert result.bands() == (
            Regime.LISTEN_BOTH,
            Regime.SELECT_ON_ALT,
            Regime.MAINSTREAM_ONLY,
        )
        th = compute_thresholds(params)
        first, second = result.transitions
        assert first.value - 1e-3 <= th.phi_e <= first.value
        assert second.value - 1e-3 <= th.phi_v <= second.value

    def test_sweep_over_challenger_strength(self, pstar):
        """Raising u_c walks from retain-always territory toward removal."""
        grid = [i / 100 for i in range(-20, 100)]
        result = sweep(pstar, "u_c", grid)
        regimes = result.regimes()
        assert regimes[0] is Regime.RETAIN_ALWAYS
        assert regimes[-1] is Regime.REMOVE_ALWAYS
        assert Regime.LISTEN_BOTH in regimes
        assert Regime.SELECT_ON_ALT in regimes
        assert result.bands() == tuple(
            r for i, r in enumerate(regimes) if i == 0 or regimes[i - 1] is not r
        )

    def test_sweep_points_align_with_classify(self, pstar):
        grid = [0.0, 0.25, 0.5, 0.75, 1.0]
        result = sweep(pstar, "phi", grid)
        assert result.vary == "phi"
        assert [v for v, _ in result.points] == grid
        for value, report in result.points:
            assert report == classify(pstar.replace(phi=value))

    def test_sweep_propagates_validation_errors(self, pstar):
        with pytest.raises(OutOfRangeError):
            sweep(pstar, "q", [0.6, 0.4])

    def test_sweep_rejects_unknown_field(self, pstar):
        with pytest.raises(TypeError):
            sweep(pstar, "bogus", [0.1])

    def test_empty_transition_list_when_constant(self, pstar):
        result = sweep(pstar, "phi", [0.1, 0.2, 0.3])
        assert result.transitions == ()
        assert result.bands() == (Regime.LISTEN_BOTH,)


class TestNotesContent:
    def test_listen_notes_mention_window_and_effort(self, pstar):
        notes = " ".join(classify(pstar).notes)
        assert "u_lo <= u_c < u_hi2" in notes
        assert "effort premium" in notes

    def test_selection_notes_distinguish_decisive_accusations(self, pstar):
        direct = classify(pstar.replace(u_c=0.3))
        assert direct.regime is Regime.SELECT_ON_ALT
        assert any("accusation alone is decisive (phi <= phi_a)" in n for n in direct.notes)

        # With u_c = 0 the standalone accusation payoff already exceeds u_c
        # past phi_a = 2/19, yet removal at the corroborated cell stays a best
        # response until phi = 4/19; phi = 0.13 sits between the two.
        corroborated = classify(pstar.replace(u_c=0.0, phi=0.13))
        assert corroborated.regime is Regime.SELECT_ON_ALT
        assert math.isfinite(corroborated.thresholds.phi_a)
        assert corroborated.thresholds.phi_a < 0.13
        assert any("match-corroboration binds" in n for n in corroborated.notes)

    def test_remove_always_notes_name_the_prior_comparison(self):
        params = ModelParams(sigma=0.05, pi=0.2, q=0.7, k=0.3, s=1.0, u_c=0.5, phi=0.5)
        notes = " ".join(classify(params).notes)
        assert "pi <= u_c" in notes
