"""Figure rendering for sweep reports.

One figure per sweep: a regime band strip on top, threshold markers where
they fall inside the swept range, and the exact per-type retention and
welfare curves underneath. Rendering is headless (Agg) and file-only, so
importing this module never needs a display.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Patch

from .model import IncumbentType
from .regimes import Regime, SweepResult
from .simulation import Metrics

__all__ = ["render_sweep_figure"]

_REGIME_COLORS = {
    Regime.LISTEN_BOTH: "#2a9d8f",
    Regime.MAINSTREAM_ONLY: "#457b9d",
    Regime.SELECT_ON_ALT: "#e9c46a",
    Regime.RETAIN_ALWAYS: "#e76f51",
    Regime.REMOVE_ALWAYS: "#9d4edd",
}

_REGIME_SHORT = {
    Regime.LISTEN_BOTH: "listen both",
    Regime.MAINSTREAM_ONLY: "mainstream only",
    Regime.SELECT_ON_ALT: "select on alt",
    Regime.RETAIN_ALWAYS: "retain always",
    Regime.REMOVE_ALWAYS: "remove always",
}


def render_sweep_figure(
    result: SweepResult,
    metrics: list[Metrics],
    path: str,
    dpi: int = 150,
) -> None:
    """Render a sweep to an image file next to its CSV.

    `metrics` must hold the exact metrics for result.points, in order.
    """
    values = [value for value, _ in result.points]
    reports = [report for _, report in result.points]
    if len(metrics) != len(values):
        raise ValueError("metrics must align with sweep points")

    fig, (band_ax, curve_ax) = plt.subplots(
        2, 1, figsize=(8.0, 5.4), sharex=True,
        gridspec_kw={"height_ratios": [1, 3], "hspace": 0.08},
    )

    lo, hi = min(values), max(values)
    span = (hi - lo) or 1.0

    # Contiguous regime bands as colored spans.
    start_idx = 0
    seen: dict[Regime, Patch] = {}
    for i in range(1, len(reports) + 1):
        if i < len(reports) and reports[i].regime is reports[start_idx].regime:
            continue
        regime = reports[start_idx].regime
        left = values[start_idx] if start_idx == 0 else 0.5 * (values[start_idx - 1] + values[start_idx])
        right = values[i - 1] if i == len(reports) else 0.5 * (values[i - 1] + values[i])
        band_ax.axvspan(left, right, color=_REGIME_COLORS[regime], alpha=0.85)
        if regime not in seen:
            seen[regime] = Patch(color=_REGIME_COLORS[regime], label=_REGIME_SHORT[regime])
        start_idx = i
    band_ax.set_yticks([])
    band_ax.set_ylabel("regime", rotation=0, ha="right", va="center")
    band_ax.legend(
        handles=list(seen.values()), loc="upper left",
        bbox_to_anchor=(0.0, 1.9), ncols=min(3, len(seen)), frameon=False, fontsize=8,
    )

    # Threshold markers, drawn where finite and inside the swept window.
    th = reports[0].thresholds
    for raw, label in ((th.phi_e, "phi_e"), (th.phi_v, "phi_v"), (th.phi_a, "phi_a")):
        if result.vary == "phi" and math.isfinite(raw) and lo <= raw <= hi:
            for ax in (band_ax, curve_ax):
                ax.axvline(raw, color="0.25", lw=0.9, ls="--")
            band_ax.annotate(
                label, (raw, 1.02), xycoords=("data", "axes fraction"),
                ha="center", fontsize=8, color="0.25",
            )

    curves = {
        "high retained": [m.retain_prob_by_type[IncumbentType.HIGH] for m in metrics],
        "low retained": [m.retain_prob_by_type[IncumbentType.LOW] for m in metrics],
        "subversive retained": [m.retain_prob_by_type[IncumbentType.SUBVERSIVE] for m in metrics],
        "voter welfare": [m.expected_voter_welfare for m in metrics],
    }
    styles = {
        "high retained": dict(color="#2a9d8f", lw=1.8),
        "low retained": dict(color="#457b9d", lw=1.8),
        "subversive retained": dict(color="#e76f51", lw=1.8),
        "voter welfare": dict(color="0.2", lw=1.4, ls=":"),
    }
    for name, ys in curves.items():
        curve_ax.plot(values, ys, label=name, **styles[name])
    curve_ax.set_xlim(lo - 0.01 * span, hi + 0.01 * span)
    curve_ax.set_xlabel(result.vary)
    curve_ax.set_ylabel("probability / payoff")
    curve_ax.grid(True, lw=0.3, alpha=0.5)
    curve_ax.legend(loc="best", fontsize=8, frameon=False)

    fig.savefig(path, dpi=dpi, bbox_inches="tight")
    plt.close(fig)
