"""
Randomized property-testing campaigns.

A campaign evaluates a set of properties over a grid of dimensions, with
a fixed number of trials per (dimension, property) cell. Every trial
draws its randomness from a dedicated stream keyed by
(seed, dim, property index, trial), so results are reproducible
bit-for-bit regardless of execution order, and a campaign restricted to
a subset of properties replays exactly the trials the full campaign
would run for those properties.

Reports are written as CSV (fixed column order
``trial,dim,property,nu,mu,lambda,margin,pass``) or as JSON mirroring
the same records under a ``"reports"`` array plus a ``"summary"``
object. Floats are serialized with shortest round-trip decimals, so a
repeated run with the same configuration produces byte-identical files.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import inequalities as ineq
from .inequalities import PropertyId
from .means import witness_pair
from .sampling import gen_decomposition, gen_invertible, gen_pd, gen_psd_weight

ALL_PROPERTIES: tuple[PropertyId, ...] = tuple(PropertyId)

_PROPERTY_INDEX = {prop: index for index, prop in enumerate(ALL_PROPERTIES)}

#: Default weight window; the mean formulas contain nu^-1 and (1-nu)^-1,
#: and extreme weights inflate rounding error past a fixed tolerance.
DEFAULT_NU_RANGE = (0.05, 0.95)

#: Widened window selected by --nu-extreme, paired with a relaxed tolerance.
EXTREME_NU_RANGE = (1e-3, 1.0 - 1e-3)
EXTREME_TOL = 1e-6

CSV_COLUMNS = ("trial", "dim", "property", "nu", "mu", "lambda", "margin", "pass")


@dataclass(frozen=True)
class CampaignConfig:
    """Parameters of one campaign; validated on construction."""

    dims: tuple[int, int] = (1, 8)
    trials: int = 100
    seed: int = 42
    tol: float = 1e-9
    nu_range: tuple[float, float] = DEFAULT_NU_RANGE
    cond_cap: float = 1e6
    properties: tuple[PropertyId, ...] = ALL_PROPERTIES

    def __post_init__(self):
        lo, hi = self.dims
        if not (1 <= lo <= hi <= 16):
            raise ValueError(f"dims must satisfy 1 <= lo <= hi <= 16, got {self.dims}")
        if self.trials < 0:
            raise ValueError(f"trials must be >= 0, got {self.trials}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if not self.tol > 0.0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        nlo, nhi = self.nu_range
        if not (0.0 < nlo <= nhi < 1.0):
            raise ValueError(f"nu_range must lie inside (0, 1), got {self.nu_range}")
        if self.cond_cap < 1.0:
            raise ValueError(f"cond_cap must be >= 1, got {self.cond_cap}")
        if not self.properties:
            raise ValueError("properties must be non-empty")

    def dimensions(self) -> range:
        return range(self.dims[0], self.dims[1] + 1)


@dataclass
class PropertyReport:
    """One evaluated trial: parameters, margin and verdict.

    ``margin`` is the Loewner margin for order properties and minus the
    normalized residual for equality properties, so ``passed`` is always
    margin >= -tol.
    """

    trial: int
    dim: int
    property: PropertyId
    nu: float
    mu: float | None = None
    lam: float | None = None
    margin: float = 0.0
    passed: bool = True


def trial_rng(seed: int, dim: int, prop: PropertyId, trial: int) -> np.random.Generator:
    """Dedicated random stream for one (dim, property, trial) cell."""
    return np.random.default_rng((seed, dim, _PROPERTY_INDEX[prop], trial))


def _log_uniform(rng: np.random.Generator, lo: float, hi: float, size=None):
    return np.exp(rng.uniform(np.log(lo), np.log(hi), size=size))


def negated_residual(residual: float) -> float:
    """Margin of an equality check: -residual, with -0.0 normalized to 0.0."""
    return -float(residual) + 0.0


def run_property_trial(
    prop: PropertyId, dim: int, trial: int, config: CampaignConfig
) -> PropertyReport:
    """Draw inputs for one property and evaluate it.

    Draw order is fixed per property (nu, then any extra scalars, then
    matrices) so that reports are reproducible for a given seed.
    """
    rng = trial_rng(config.seed, dim, prop, trial)
    nu = float(rng.uniform(*config.nu_range))
    tol = config.tol
    report = PropertyReport(trial=trial, dim=dim, property=prop, nu=nu)

    if prop is PropertyId.SCALAR_EMBED:
        alpha, beta = _log_uniform(rng, 1e-2, 1e2, size=2)
        check = ineq.check_scalar_embedding(nu, float(alpha), float(beta), dim, tol)
        report.margin = negated_residual(check.residual)
    elif prop is PropertyId.HOMOGENEITY:
        r = float(_log_uniform(rng, 0.1, 10.0))
        a = gen_pd(dim, config.cond_cap, rng)
        b = gen_pd(dim, config.cond_cap, rng)
        report.margin = negated_residual(ineq.check_homogeneity(nu, a, b, r, tol).residual)
    elif prop is PropertyId.SYMMETRY:
        a = gen_pd(dim, config.cond_cap, rng)
        b = gen_pd(dim, config.cond_cap, rng)
        report.margin = negated_residual(ineq.check_symmetry(nu, a, b, tol).residual)
    elif prop is PropertyId.BOUNDS_REMARK:
        a = gen_pd(dim, config.cond_cap, rng)
        b = gen_pd(dim, config.cond_cap, rng)
        lower, upper = ineq.check_bounds_remark(nu, a, b, tol)
        report.margin = min(lower.margin, upper.margin)
    elif prop is PropertyId.CONVEXITY_MIX:
        mu = float(rng.uniform(*config.nu_range))
        report.mu = mu
        a, b, c, d = (gen_pd(dim, config.cond_cap, rng) for _ in range(4))
        report.margin = ineq.check_convexity_mix(nu, mu, a, b, c, d, tol).margin
    elif prop is PropertyId.CONGRUENCE:
        a = gen_pd(dim, config.cond_cap, rng)
        b = gen_pd(dim, config.cond_cap, rng)
        z = gen_invertible(dim, rng)
        report.margin = negated_residual(ineq.check_congruence(nu, a, b, z, tol).residual)
    elif prop is PropertyId.MIXED_MEAN:
        mu = float(rng.uniform(*config.nu_range))
        report.mu = mu
        a = gen_pd(dim, config.cond_cap, rng)
        b = gen_pd(dim, config.cond_cap, rng)
        report.margin = ineq.check_mixed_mean(nu, mu, a, b, tol).margin
    elif prop is PropertyId.FUNCTIONAL:
        a = gen_pd(dim, config.cond_cap, rng)
        b = gen_pd(dim, config.cond_cap, rng)
        weight = gen_psd_weight(dim, rng)
        report.margin = ineq.check_functional(nu, a, b, weight, tol).margin
    elif prop is PropertyId.NORM_LOWER:
        a = gen_pd(dim, config.cond_cap, rng)
        b = gen_pd(dim, config.cond_cap, rng)
        report.margin = ineq.check_norm_lower_bound(nu, a, b, tol).margin
    elif prop is PropertyId.LAMBDA_FAMILY:
        lam = float(rng.uniform(0.0, 1.0))
        report.lam = lam
        a = gen_pd(dim, config.cond_cap, rng)
        b = gen_pd(dim, config.cond_cap, rng)
        report.margin = ineq.lambda_lower_bound(nu, lam, a, b, tol)[1].margin
    elif prop is PropertyId.CONTRACTION:
        a = gen_pd(dim, config.cond_cap, rng)
        b = gen_pd(dim, config.cond_cap, rng)
        report.margin = ineq.check_contraction(nu, a, b, tol).margin
    elif prop is PropertyId.REFINED_UPPER:
        a = gen_pd(dim, config.cond_cap, rng)
        b = gen_pd(dim, config.cond_cap, rng)
        report.margin = ineq.check_refined_upper(nu, a, b, tol).margin
    else:  # pragma: no cover - enum is exhaustive
        raise ValueError(f"unhandled property {prop}")

    report.passed = bool(report.margin >= -tol)
    return report


def gen_variational_trial(dim: int, trial: int, config: CampaignConfig):
    """Inputs for one trial of the variational checks: (nu, a, b, decomposition).

    Streams are keyed like property trials but with an index one past the
    last property, so variational runs never share randomness with the
    campaign cells.
    """
    rng = np.random.default_rng((config.seed, dim, len(ALL_PROPERTIES), trial))
    nu = float(rng.uniform(*config.nu_range))
    a = gen_pd(dim, config.cond_cap, rng)
    b = gen_pd(dim, config.cond_cap, rng)
    decomposition = gen_decomposition(dim, witness_pair(nu, a, b), rng)
    return nu, a, b, decomposition


def fuzz_campaign(config: CampaignConfig):
    """Run every configured (dim, property, trial) cell.

    Returns (reports, summary): reports in deterministic
    (dim, property, trial) order, and a summary with pass/fail counts
    and the minimum margin per property.
    """
    reports: list[PropertyReport] = []
    for dim in config.dimensions():
        for prop in config.properties:
            for trial in range(config.trials):
                reports.append(run_property_trial(prop, dim, trial, config))
    return reports, summarize(reports, config)


def summarize(reports: list[PropertyReport], config: CampaignConfig) -> dict:
    """Per-property and total pass/fail counts plus minimum margins."""
    properties = {}
    for prop in config.properties:
        rows = [r for r in reports if r.property is prop]
        properties[str(prop)] = {
            "trials": len(rows),
            "failures": sum(not r.passed for r in rows),
            "min_margin": min((r.margin for r in rows), default=None),
        }
    total = {
        "trials": len(reports),
        "failures": sum(not r.passed for r in reports),
    }
    return {
        "properties": properties,
        "total": total,
        "passed": total["failures"] == 0,
    }


def _render_float(value: float | None) -> str:
    return "" if value is None else repr(float(value))


def render_csv(reports: list[PropertyReport]) -> str:
    """Render reports to CSV text with the fixed column order."""
    out = io.StringIO()
    out.write(",".join(CSV_COLUMNS) + "\n")
    for r in reports:
        row = (
            str(r.trial),
            str(r.dim),
            str(r.property),
            _render_float(r.nu),
            _render_float(r.mu),
            _render_float(r.lam),
            _render_float(r.margin),
            "true" if r.passed else "false",
        )
        out.write(",".join(row) + "\n")
    return out.getvalue()


def report_to_obj(report: PropertyReport) -> dict:
    return {
        "trial": report.trial,
        "dim": report.dim,
        "property": str(report.property),
        "nu": report.nu,
        "mu": report.mu,
        "lambda": report.lam,
        "margin": report.margin,
        "pass": report.passed,
    }


def render_json(reports: list[PropertyReport], summary: dict) -> str:
    """Render reports plus summary to JSON text."""
    payload = {"reports": [report_to_obj(r) for r in reports], "summary": summary}
    return json.dumps(payload, indent=2) + "\n"


def write_report(
    reports: list[PropertyReport], summary: dict, path, fmt: str = "csv"
) -> Path:
    """Write the campaign report to ``path`` in the requested format."""
    path = Path(path)
    if fmt == "csv":
        text = render_csv(reports)
    elif fmt == "json":
        text = render_json(reports, summary)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    path.write_text(text)
    return path
