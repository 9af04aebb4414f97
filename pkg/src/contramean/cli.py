"""
Command-line interface.

Subcommands:

compute   evaluate a weighted mean of two matrix JSON files
verify    evaluate the named properties on user-supplied operands and
          print one margin line per property
fuzz      run a randomized campaign over dimensions and properties,
          optionally writing a CSV/JSON report plus margin figures
selftest  cross-check the scalar grid-search values against the closed
          forms

Exit codes: 0 all checks passed, 1 a property was violated, 2 usage or
input/output error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import inequalities as ineq
from .campaign import (
    ALL_PROPERTIES,
    DEFAULT_NU_RANGE,
    EXTREME_NU_RANGE,
    EXTREME_TOL,
    CampaignConfig,
    fuzz_campaign,
    negated_residual,
    write_report,
)
from .errors import ContrameanError
from .inequalities import PropertyId
from .linalg import DEFAULT_TOL, op_norm
from .matrixio import load_hermitian_pd, load_matrix, matrix_to_obj, save_matrix
from .means import MATRIX_MEANS, equal_args_coefficient
from .scalar import (
    grid_search_contraharmonic,
    grid_search_weighted_contraharmonic,
    lehmer_mean,
    weighted_contraharmonic,
)

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _parse_dims(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        lo = hi = text
    try:
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a dimension range like 1..8, got {text!r}"
        ) from None


def _parse_properties(text: str) -> tuple[PropertyId, ...]:
    wanted = []
    for token in text.split(","):
        token = token.strip().upper()
        if not token:
            continue
        try:
            wanted.append(PropertyId(token))
        except ValueError:
            known = ",".join(str(p) for p in ALL_PROPERTIES)
            raise argparse.ArgumentTypeError(
                f"unknown property {token!r}; known: {known}"
            ) from None
    if not wanted:
        raise argparse.ArgumentTypeError("no properties given")
    # keep canonical order, drop duplicates
    return tuple(p for p in ALL_PROPERTIES if p in wanted)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contramean",
        description="Weighted contraharmonic matrix means and their property checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="evaluate a weighted matrix mean")
    p_compute.add_argument("--mean", choices=sorted(MATRIX_MEANS), required=True)
    p_compute.add_argument("--nu", type=float, required=True)
    p_compute.add_argument("--a", required=True, help="matrix JSON file")
    p_compute.add_argument("--b", required=True, help="matrix JSON file")
    p_compute.add_argument("--out", help="output matrix JSON file (default: stdout)")

    p_verify = sub.add_parser("verify", help="check the named properties on files")
    p_verify.add_argument("--all", action="store_true",
                          help="check every property (the default)")
    p_verify.add_argument("--properties", type=_parse_properties,
                          help="comma-separated property subset")
    p_verify.add_argument("--nu", type=float, required=True)
    p_verify.add_argument("--mu", type=float, default=0.5,
                          help="mixing weight for CONVEXITY_MIX/MIXED_MEAN (default 0.5)")
    p_verify.add_argument("--lambda", dest="lam", type=float, default=None,
                          help="weight for LAMBDA_FAMILY (default: nu)")
    p_verify.add_argument("--a", required=True, help="matrix JSON file")
    p_verify.add_argument("--b", required=True, help="matrix JSON file")
    p_verify.add_argument("--c", help="matrix JSON file (CONVEXITY_MIX)")
    p_verify.add_argument("--d", help="matrix JSON file (CONVEXITY_MIX)")
    p_verify.add_argument("--z", help="matrix JSON file (CONGRUENCE)")
    p_verify.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p_fuzz = sub.add_parser("fuzz", help="run a randomized property campaign")
    p_fuzz.add_argument("--dims", type=_parse_dims, default=(1, 8),
                        help="inclusive dimension range, e.g. 1..8 (default)")
    p_fuzz.add_argument("--trials", type=int, default=100,
                        help="trials per (dimension, property) (default 100)")
    p_fuzz.add_argument("--seed", type=int, default=42)
    p_fuzz.add_argument("--tol", type=float, default=None,
                        help=f"margin tolerance (default {DEFAULT_TOL:g})")
    p_fuzz.add_argument("--nu-extreme", action="store_true",
                        help="widen the weight window to (1e-3, 1-1e-3) and relax "
                             f"the default tolerance to {EXTREME_TOL:g}")
    p_fuzz.add_argument("--properties", type=_parse_properties, default=ALL_PROPERTIES)
    p_fuzz.add_argument("--cond-cap", type=float, default=1e6)
    p_fuzz.add_argument("--report", help="write per-trial report to this path")
    p_fuzz.add_argument("--format", choices=("csv", "json"), default="csv")
    p_fuzz.add_argument("--no-figures", action="store_true",
                        help="do not render margin figures next to the report")

    p_self = sub.add_parser("selftest", help="scalar grid-search cross-checks")
    p_self.add_argument("--pairs", type=int, default=1000)
    p_self.add_argument("--seed", type=int, default=42)
    p_self.add_argument("--grid-step", type=float, default=1e-4)

    return parser


def cmd_compute(args) -> int:
    a = load_hermitian_pd(args.a)
    b = load_hermitian_pd(args.b)
    result = MATRIX_MEANS[args.mean](args.nu, a, b)
    if args.out:
        save_matrix(args.out, result)
    else:
        print(json.dumps(matrix_to_obj(result)))
    return EXIT_PASS


def _verify_rows(args, a, b, c, d, z):
    """Yield (property, margin-or-None, note) for each requested property."""
    nu, mu, tol = args.nu, args.mu, args.tol
    lam = args.lam if args.lam is not None else nu
    for prop in args.properties or ALL_PROPERTIES:
        if prop is PropertyId.SYMMETRY:
            yield prop, negated_residual(ineq.check_symmetry(nu, a, b, tol).residual), ""
        elif prop is PropertyId.HOMOGENEITY:
            yield prop, negated_residual(ineq.check_homogeneity(nu, a, b, 2.0, tol).residual), "r=2"
        elif prop is PropertyId.SCALAR_EMBED:
            alpha, beta = op_norm(a), op_norm(b)
            margin = negated_residual(
                ineq.check_scalar_embedding(nu, alpha, beta, a.shape[0], tol).residual
            )
            yield prop, margin, f"alpha=||a||={alpha:.6g} beta=||b||={beta:.6g}"
        elif prop is PropertyId.BOUNDS_REMARK:
            lower, upper = ineq.check_bounds_remark(nu, a, b, tol)
            yield prop, min(lower.margin, upper.margin), ""
        elif prop is PropertyId.CONVEXITY_MIX:
            if c is None or d is None:
                yield prop, None, "needs --c and --d"
            else:
                yield prop, ineq.check_convexity_mix(nu, mu, a, b, c, d, tol).margin, f"mu={mu:g}"
        elif prop is PropertyId.CONGRUENCE:
            if z is None:
                yield prop, None, "needs --z"
            else:
                yield prop, negated_residual(ineq.check_congruence(nu, a, b, z, tol).residual), ""
        elif prop is PropertyId.MIXED_MEAN:
            yield prop, ineq.check_mixed_mean(nu, mu, a, b, tol).margin, f"mu={mu:g}"
        elif prop is PropertyId.FUNCTIONAL:
            weight = np.eye(a.shape[0], dtype=complex)
            yield prop, ineq.check_functional(nu, a, b, weight, tol).margin, "phi=trace"
        elif prop is PropertyId.NORM_LOWER:
            yield prop, ineq.check_norm_lower_bound(nu, a, b, tol).margin, ""
        elif prop is PropertyId.LAMBDA_FAMILY:
            margin = ineq.lambda_lower_bound(nu, lam, a, b, tol)[1].margin
            yield prop, margin, f"lambda={lam:g}"
        elif prop is PropertyId.CONTRACTION:
            check = ineq.check_contraction(nu, a, b, tol)
            yield prop, check.margin, f"norm={check.norm:.12g}"
        elif prop is PropertyId.REFINED_UPPER:
            yield prop, ineq.check_refined_upper(nu, a, b, tol).margin, ""


def cmd_verify(args) -> int:
    a = load_hermitian_pd(args.a)
    b = load_hermitian_pd(args.b)
    c = load_hermitian_pd(args.c) if args.c else None
    d = load_hermitian_pd(args.d) if args.d else None
    z = load_matrix(args.z) if args.z else None

    failures = 0
    for prop, margin, note in _verify_rows(args, a, b, c, d, z):
        if margin is None:
            status = "SKIP"
            margin_text = ""
        else:
            ok = margin >= -args.tol
            failures += not ok
            status = "PASS" if ok else "FAIL"
            margin_text = f"{margin: .6e}"
        note_text = f"  ({note})" if note else ""
        print(f"{str(prop):14s} {status:4s} margin={margin_text}{note_text}")
    return EXIT_VIOLATION if failures else EXIT_PASS


def cmd_fuzz(args) -> int:
    nu_range = EXTREME_NU_RANGE if args.nu_extreme else DEFAULT_NU_RANGE
    tol = args.tol if args.tol is not None else (
        EXTREME_TOL if args.nu_extreme else DEFAULT_TOL
    )
    config = CampaignConfig(
        dims=args.dims,
        trials=args.trials,
        seed=args.seed,
        tol=tol,
        nu_range=nu_range,
        cond_cap=args.cond_cap,
        properties=args.properties,
    )
    reports, summary = fuzz_campaign(config)

    for name, stats in summary["properties"].items():
        minimum = stats["min_margin"]
        minimum_text = "n/a" if minimum is None else f"{minimum: .3e}"
        print(
            f"{name:14s} trials={stats['trials']:6d} "
            f"failures={stats['failures']:4d} min_margin={minimum_text}"
        )
    total = summary["total"]
    print(f"total: {total['trials']} trials, {total['failures']} failures")

    if args.report:
        path = write_report(reports, summary, args.report, args.format)
        print(f"report written to {path}")
        if not args.no_figures:
            from .figures import figure_path_for, render_margin_figure

            figure = render_margin_figure(reports, config.tol, figure_path_for(path))
            if figure is not None:
                print(f"figure written to {figure}")

    return EXIT_PASS if summary["passed"] else EXIT_VIOLATION


def cmd_selftest(args) -> int:
    rng = np.random.default_rng(args.seed)
    failures = 0

    def check(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        failures += not ok
        suffix = f"  ({detail})" if detail else ""
        print(f"{name:34s} {'PASS' if ok else 'FAIL'}{suffix}")

    fixtures = [
        ("lehmer s=0 (4,2) = 8/3", lehmer_mean(0, 4, 2), 8.0 / 3.0),
        ("lehmer s=1 (4,2) = 3", lehmer_mean(1, 4, 2), 3.0),
        ("lehmer s=2 (3,6) = 5", lehmer_mean(2, 3, 6), 5.0),
        ("weighted C nu=1/2 (1,3) = 2.5", weighted_contraharmonic(0.5, 1, 3), 2.5),
        ("weighted C nu=1/3 (1,2) = 3.3", weighted_contraharmonic(1 / 3, 1, 2), 3.3),
    ]
    for nu in (0.25, 1 / 3, 0.5, 2 / 3):
        fixtures.append(
            (
                f"equal-args coefficient nu={nu:.4g}",
                weighted_contraharmonic(nu, 1.0, 1.0),
                equal_args_coefficient(nu),
            )
        )
    for name, got, want in fixtures:
        check(name, abs(got - want) <= 1e-12, f"got {got!r}")

    pairs = np.exp(rng.uniform(np.log(1e-2), np.log(1e2), size=(args.pairs, 2)))
    worst_plain = 0.0
    worst_weighted = 0.0
    for alpha, beta in pairs:
        nu = float(rng.uniform(0.05, 0.95))
        worst_plain = max(
            worst_plain,
            abs(grid_search_contraharmonic(alpha, beta, args.grid_step)
                - lehmer_mean(2, alpha, beta)),
        )
        worst_weighted = max(
            worst_weighted,
            abs(grid_search_weighted_contraharmonic(nu, alpha, beta, args.grid_step)
                - weighted_contraharmonic(nu, alpha, beta)),
        )
    check(
        f"grid search matches M_2 ({args.pairs} pairs)",
        worst_plain <= 1e-6,
        f"worst |diff| = {worst_plain:.3e}",
    )
    check(
        f"weighted grid search matches C ({args.pairs} pairs)",
        worst_weighted <= 1e-6,
        f"worst |diff| = {worst_weighted:.3e}",
    )
    return EXIT_VIOLATION if failures else EXIT_PASS


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "compute": cmd_compute,
        "verify": cmd_verify,
        "fuzz": cmd_fuzz,
        "selftest": cmd_selftest,
    }
    try:
        return handlers[args.command](args)
    except (ContrameanError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
