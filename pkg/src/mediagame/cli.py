"""Command line interface.

Four subcommands: `classify` one parameter point, `sweep` one field across a
grid (CSV report, optional rendered figure), `verify` the profile space by
brute force, and `simulate` a Monte Carlo election run. Every command is a
pure function of its flags and seed; repeated invocations emit byte-identical
output. Exit codes: 0 success, 1 failed expectation, 2 usage or validation
error.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

from .model import (
    OBSERVATION_CLASSES,
    IncumbentType,
    ModelParams,
    ParamError,
    StrategyProfile,
    alt_selection_profile,
    listen_both_profile,
    mainstream_only_profile,
    remove_always_profile,
    retain_always_profile,
)
from .regimes import RegimeReport, classify, sweep
from .simulation import InvalidCountError, Metrics, simulate, theoretical_metrics
from .verifier import enumerate_profiles, find_equilibria, is_pbe

__all__ = ["main"]

_PARAM_FLAGS = ("sigma", "pi", "q", "k", "s", "uc", "phi")
_FLAG_TO_FIELD = {"uc": "u_c"}
_FIELD_TO_FLAG = {"u_c": "uc"}

_NAMED_PROFILES = {
    "listen-both": listen_both_profile,
    "mainstream-only": mainstream_only_profile,
    "select-on-alt": alt_selection_profile,
    "retain-always": retain_always_profile,
    "remove-always": remove_always_profile,
}

_SWEEP_HEADER = (
    "{vary},regime,phi_e,phi_v,phi_a,u_lo,u_hi,u_hi2,"
    "p_high_retained,p_low_retained,p_subversive_retained,welfare"
)


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def _build_parser() -> argparse.ArgumentParser:
    params = argparse.ArgumentParser(add_help=False)
    group = params.add_argument_group("model parameters")
    for flag in _PARAM_FLAGS:
        group.add_argument(f"--{flag}", type=float, default=None)
    params.add_argument("--config", default=None, help="key=value file; flags override")

    io = argparse.ArgumentParser(add_help=False)
    io.add_argument("--format", choices=("pretty", "csv"), default="pretty")
    io.add_argument("--out", default=None, help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="mediagame",
        description="Equilibrium analysis of an electoral game with two media outlets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", parents=[params, io], help="regime at one parameter point")

    sp = sub.add_parser("sweep", parents=[params, io], help="regime bands along one field")
    sp.add_argument("--vary", choices=_PARAM_FLAGS, default="phi")
    sp.add_argument("--start", type=float, default=0.0)
    sp.add_argument("--stop", type=float, default=1.0)
    sp.add_argument("--steps", type=int, default=101)
    sp.add_argument("--plot", default=None, help="also render the sweep to this image file")

    vp = sub.add_parser("verify", parents=[params, io], help="brute-force equilibrium check")
    vp.add_argument(
        "--expect-classifier",
        action="store_true",
        help="exit 1 unless the classifier's profile is among the verified equilibria",
    )

    mp = sub.add_parser("simulate", parents=[params, io], help="Monte Carlo election run")
    mp.add_argument("--n", type=int, required=True)
    mp.add_argument("--seed", type=int, required=True)
    mp.add_argument("--profile", choices=("classified",) + tuple(_NAMED_PROFILES), default="classified")

    return parser


def _read_config(path: str) -> dict[str, float]:
    values: dict[str, float] = {}
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key == "u_c":
                key = "uc"
            if key not in _PARAM_FLAGS:
                raise ValueError(f"{path}:{lineno}: unknown parameter {key!r}")
            values[key] = float(value.strip())
    return values


def _params_from_args(args: argparse.Namespace) -> ModelParams:
    merged: dict[str, float] = {}
    if args.config:
        merged.update(_read_config(args.config))
    for flag in _PARAM_FLAGS:
        value = getattr(args, flag)
        if value is not None:
            merged[flag] = value
    missing = [f"--{flag}" for flag in _PARAM_FLAGS if flag not in merged]
    if missing:
        raise ValueError(f"missing required parameter(s): {', '.join(missing)}")
    return ModelParams(
        sigma=merged["sigma"],
        pi=merged["pi"],
        q=merged["q"],
        k=merged["k"],
        s=merged["s"],
        u_c=merged["uc"],
        phi=merged["phi"],
    )


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _report_row(value: float, report: RegimeReport, metrics: Metrics) -> str:
    th = report.thresholds
    fields = [
        _fmt(value),
        report.regime.value,
        _fmt(th.phi_e),
        _fmt(th.phi_v),
        _fmt(th.phi_a),
        _fmt(th.u_lo),
        _fmt(th.u_hi),
        _fmt(th.u_hi2),
        _fmt(metrics.retain_prob_by_type[IncumbentType.HIGH]),
        _fmt(metrics.retain_prob_by_type[IncumbentType.LOW]),
        _fmt(metrics.retain_prob_by_type[IncumbentType.SUBVERSIVE]),
        _fmt(metrics.expected_voter_welfare),
    ]
    return ",".join(fields)


def _cmd_classify(args: argparse.Namespace) -> int:
    params = _params_from_args(args)
    report = classify(params)
    metrics = theoretical_metrics(params, report.profile)
    if args.format == "csv":
        lines = [_SWEEP_HEADER.format(vary="phi"), _report_row(params.phi, report, metrics)]
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    th = report.thresholds
    lines = [
        f"regime: {report.regime.value}",
        f"profile: {report.profile.describe()}",
        f"phi_e={_fmt(th.phi_e)}  phi_v={_fmt(th.phi_v)}  phi_a={_fmt(th.phi_a)}",
        f"u_lo={_fmt(th.u_lo)}  u_hi={_fmt(th.u_hi)}  u_hi2={_fmt(th.u_hi2)}",
        "retention: high={} low={} subversive={}".format(
            _fmt(metrics.retain_prob_by_type[IncumbentType.HIGH]),
            _fmt(metrics.retain_prob_by_type[IncumbentType.LOW]),
            _fmt(metrics.retain_prob_by_type[IncumbentType.SUBVERSIVE]),
        ),
        f"welfare: {_fmt(metrics.expected_voter_welfare)}",
        "notes:",
    ]
    lines.extend(f"  - {note}" for note in report.notes)
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    # The swept flag may be omitted: its base value is replaced at every grid
    # point anyway, so default it to the grid start.
    if getattr(args, args.vary) is None:
        setattr(args, args.vary, args.start)
    params = _params_from_args(args)
    if args.steps < 1:
        raise ValueError("--steps must be at least 1")
    if args.steps == 1:
        grid = [args.start]
    else:
        step = (args.stop - args.start) / (args.steps - 1)
        grid = [args.start + i * step for i in range(args.steps)]
    field = _FLAG_TO_FIELD.get(args.vary, args.vary)
    result = sweep(params, field, grid)
    metrics = [
        theoretical_metrics(params.replace(**{field: value}), report.profile)
        for value, report in result.points
    ]

    lines = [_SWEEP_HEADER.format(vary=args.vary)]
    for (value, report), point_metrics in zip(result.points, metrics):
        lines.append(_report_row(value, report, point_metrics))
    _emit("\n".join(lines) + "\n", args.out)

    for tr in result.transitions:
        print(
            f"transition at {args.vary}={_fmt(tr.value)}: "
            f"{tr.previous.value} -> {tr.regime.value}",
            file=sys.stderr,
        )

    if args.plot:
        from .plots import render_sweep_figure

        render_sweep_figure(result, metrics, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return 0


def _profile_columns() -> list[str]:
    return [f"retain_{obs.label().replace('-', '_')}" for obs in OBSERVATION_CLASSES]


def _cmd_verify(args: argparse.Namespace) -> int:
    params = _params_from_args(args)
    report = classify(params)
    results = [is_pbe(params, profile) for profile in enumerate_profiles()]
    equilibria = [r.profile for r in results if r.is_equilibrium]
    concordant = report.profile in equilibria

    if args.format == "csv":
        header = ["profile_index", "high_effort", *_profile_columns(), "is_equilibrium"]
        lines = [",".join(header)]
        for index, result in enumerate(results):
            row = [
                str(index),
                str(result.profile.high_effort).lower(),
                *(str(flag).lower() for flag in result.profile.retain),
                str(result.is_equilibrium).lower(),
            ]
            lines.append(",".join(row))
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [f"equilibria: {len(equilibria)} of {len(results)} profiles"]
        for index, result in enumerate(results):
            if result.is_equilibrium:
                lines.append(f"  [{index:2d}] {result.profile.describe()}")
        lines.append(f"classifier regime: {report.regime.value}")
        lines.append(f"classifier profile: {report.profile.describe()}")
        lines.append(f"classifier profile verified: {'yes' if concordant else 'no'}")
        _emit("\n".join(lines) + "\n", args.out)

    if args.expect_classifier and not concordant:
        print("expectation failed: classifier profile is not a verified equilibrium", file=sys.stderr)
        return 1
    return 0


def _posterior_columns() -> list[str]:
    names = []
    for obs in OBSERVATION_CLASSES:
        stem = obs.label().replace("-", "_")
        names.extend((f"p_high_{stem}", f"p_low_{stem}", f"p_subversive_{stem}"))
    return names


def _metrics_row(kind: str, metrics: Metrics) -> str:
    cells = [
        kind,
        str(metrics.n_replications),
        str(metrics.seed),
        _fmt(metrics.retain_prob_by_type[IncumbentType.HIGH]),
        _fmt(metrics.retain_prob_by_type[IncumbentType.LOW]),
        _fmt(metrics.retain_prob_by_type[IncumbentType.SUBVERSIVE]),
        _fmt(metrics.expected_voter_welfare),
    ]
    for obs in OBSERVATION_CLASSES:
        post = metrics.empirical_posteriors.get(obs)
        if post is None:
            cells.extend(("nan", "nan", "nan"))
        else:
            cells.extend((_fmt(post.p_high), _fmt(post.p_low), _fmt(post.p_subversive)))
    return ",".join(cells)


def _cmd_simulate(args: argparse.Namespace) -> int:
    params = _params_from_args(args)
    if args.profile == "classified":
        profile = classify(params).profile
    else:
        profile = _NAMED_PROFILES[args.profile]()
    empirical = simulate(params, profile, n=args.n, seed=args.seed)
    exact = theoretical_metrics(params, profile)

    if args.format == "csv":
        header = [
            "kind", "n", "seed",
            "retain_high", "retain_low", "retain_subversive", "welfare",
            *_posterior_columns(),
        ]
        lines = [",".join(header), _metrics_row("empirical", empirical), _metrics_row("exact", exact)]
        _emit("\n".join(lines) + "\n", args.out)
        return 0

    lines = [
        f"profile: {profile.describe()}",
        f"replications: {args.n}  seed: {args.seed}",
        "                     empirical      exact",
    ]
    rows = [
        ("high retained", IncumbentType.HIGH),
        ("low retained", IncumbentType.LOW),
        ("subversive retained", IncumbentType.SUBVERSIVE),
    ]
    for label, incumbent_type in rows:
        lines.append(
            f"{label:<20} {_fmt(empirical.retain_prob_by_type[incumbent_type]):>12} "
            f"{_fmt(exact.retain_prob_by_type[incumbent_type]):>12}"
        )
    lines.append(
        f"{'voter welfare':<20} {_fmt(empirical.expected_voter_welfare):>12} "
        f"{_fmt(exact.expected_voter_welfare):>12}"
    )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


_COMMANDS = {
    "classify": _cmd_classify,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
    "simulate": _cmd_simulate,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse signals usage errors with exit code 2
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ParamError as exc:
        flag = _FIELD_TO_FLAG.get(exc.field, exc.field)
        print(f"error: invalid --{flag}: {exc}", file=sys.stderr)
        return 2
    except InvalidCountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
