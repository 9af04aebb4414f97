"""
Acceptance suite: every criterion at its stated tolerance, one printed
pass/fail line per criterion.

The variational criteria (1, 2, 3, 6) share one deterministic set of
trials: 500 per dimension in 1..8, weights uniform in [0.05, 0.95],
condition numbers capped at 1e6, seed 42. Criterion 4 runs the full
twelve-property campaign at the same scale. Criterion 7 exercises the
installed command line twice and compares report bytes.
"""

import subprocess
import sys
import time
from dataclasses import dataclass, field

import numpy as np
import pytest

from contramean import (
    CampaignConfig,
    PropertyId,
    check_attainment,
    check_contraction,
    check_gap_identity,
    check_product_identity,
    check_square_identity,
    contraharmonic_mean,
    equal_args_coefficient,
    fuzz_campaign,
    grid_search_contraharmonic,
    grid_search_weighted_contraharmonic,
    lehmer_mean,
    loewner_leq,
    objective,
    weighted_contraharmonic,
)
from contramean.campaign import gen_variational_trial

TOL = 1e-9
DIMS = (1, 8)
TRIALS = 500
SEED = 42

ACCEPTANCE_CONFIG = CampaignConfig(dims=DIMS, trials=TRIALS, seed=SEED, tol=TOL)


def announce(number: int, name: str, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"\nACCEPTANCE {number} {name}: {status} ({detail})")


@dataclass
class VariationalResults:
    elapsed: float = 0.0
    trials: int = 0
    objective_margins: list = field(default_factory=list)
    attainment_residuals: list = field(default_factory=list)
    gap_residuals: list = field(default_factory=list)
    product_residuals: list = field(default_factory=list)
    square_residuals: list = field(default_factory=list)
    contraction_norms: list = field(default_factory=list)
    contraction_residuals: list = field(default_factory=list)


@pytest.fixture(scope="module")
def variational() -> VariationalResults:
    results = VariationalResults()
    start = time.perf_counter()
    for dim in range(DIMS[0], DIMS[1] + 1):
        for trial in range(TRIALS):
            nu, a, b, decomposition = gen_variational_trial(dim, trial, ACCEPTANCE_CONFIG)
            c = contraharmonic_mean(nu, a, b)
            value = objective(nu, a, b, decomposition)
            results.objective_margins.append(loewner_leq(value, c, TOL).margin)
            results.attainment_residuals.append(check_attainment(nu, a, b, TOL).residual)
            results.gap_residuals.append(
                check_gap_identity(nu, a, b, decomposition, TOL).residual
            )
            results.product_residuals.append(
                check_product_identity(nu, a, b, TOL).residual
            )
            results.square_residuals.append(
                check_square_identity(nu, a, b, TOL).residual
            )
            contraction = check_contraction(nu, a, b, TOL)
            results.contraction_norms.append(contraction.norm)
            results.contraction_residuals.append(contraction.residual)
            results.trials += 1
    results.elapsed = time.perf_counter() - start
    return results


@pytest.fixture(scope="module")
def campaign():
    start = time.perf_counter()
    reports, summary = fuzz_campaign(ACCEPTANCE_CONFIG)
    return reports, summary, time.perf_counter() - start


def test_criterion_1_variational_characterization(variational):
    worst_margin = min(variational.objective_margins)
    worst_attainment = max(variational.attainment_residuals)
    ok = worst_margin >= -TOL and worst_attainment <= TOL
    announce(
        1,
        "variational characterization",
        ok,
        f"{variational.trials} trials, min margin {worst_margin:.3e}, "
        f"worst attainment residual {worst_attainment:.3e}, "
        f"shared loop {variational.elapsed:.1f}s",
    )
    assert worst_margin >= -TOL
    assert worst_attainment <= TOL


def test_criterion_2_gap_identity(variational):
    worst = max(variational.gap_residuals)
    ok = worst <= TOL
    announce(2, "gap identity", ok, f"worst residual {worst:.3e}")
    assert worst <= TOL


def test_criterion_3_proof_identities(variational):
    worst_product = max(variational.product_residuals)
    worst_square = max(variational.square_residuals)
    ok = worst_product <= TOL and worst_square <= TOL
    announce(
        3,
        "proof identities",
        ok,
        f"worst product residual {worst_product:.3e}, "
        f"worst squared-ratio residual {worst_square:.3e}",
    )
    assert worst_product <= TOL
    assert worst_square <= TOL


def test_criterion_4_inequality_suite(campaign):
    reports, summary, elapsed = campaign
    worst = min(report.margin for report in reports)
    failures = summary["total"]["failures"]

    tight = [
        report
        for report in reports
        if report.dim == 1
        and report.property in (PropertyId.NORM_LOWER, PropertyId.REFINED_UPPER)
    ]
    worst_tight = max(abs(report.margin) for report in tight)

    ok = failures == 0 and worst >= -TOL and worst_tight <= TOL
    announce(
        4,
        "inequality suite",
        ok,
        f"{summary['total']['trials']} trials, {failures} failures, "
        f"min margin {worst:.3e}, dim-1 tightness {worst_tight:.3e}, "
        f"campaign {elapsed:.1f}s",
    )
    assert failures == 0
    assert worst >= -TOL
    assert len(tight) == 2 * TRIALS
    assert worst_tight <= TOL


def test_criterion_5_scalar_oracles():
    rng = np.random.default_rng(SEED)
    worst_plain = 0.0
    worst_weighted = 0.0
    for _ in range(1000):
        alpha, beta = np.exp(rng.uniform(np.log(1e-2), np.log(1e2), size=2))
        nu = float(rng.uniform(0.05, 0.95))
        worst_plain = max(
            worst_plain,
            abs(grid_search_contraharmonic(alpha, beta) - lehmer_mean(2, alpha, beta)),
        )
        worst_weighted = max(
            worst_weighted,
            abs(
                grid_search_weighted_contraharmonic(nu, alpha, beta)
                - weighted_contraharmonic(nu, alpha, beta)
            ),
        )

    fixtures = [
        abs(lehmer_mean(2, 3, 6) - 5.0),
        abs(weighted_contraharmonic(0.5, 1, 3) - 2.5),
        abs(weighted_contraharmonic(1 / 3, 1, 2) - 3.3),
    ]
    for nu in (0.25, 1 / 3, 0.5, 2 / 3):
        fixtures.append(
            abs(weighted_contraharmonic(nu, 1.0, 1.0) - equal_args_coefficient(nu))
        )
    worst_fixture = max(fixtures)

    ok = worst_plain <= 1e-6 and worst_weighted <= 1e-6 and worst_fixture <= 1e-12
    announce(
        5,
        "scalar oracle agreement",
        ok,
        f"1000 pairs, grid-vs-closed-form {worst_plain:.3e} / "
        f"{worst_weighted:.3e}, fixtures {worst_fixture:.3e}",
    )
    assert worst_plain <= 1e-6
    assert worst_weighted <= 1e-6
    assert worst_fixture <= 1e-12


def test_criterion_6_contraction(variational):
    worst_norm = max(variational.contraction_norms)
    worst_residual = max(variational.contraction_residuals)
    ok = worst_norm <= 1.0 + TOL and worst_residual <= TOL
    announce(
        6,
        "contraction factorization",
        ok,
        f"max witness norm {worst_norm:.12f}, "
        f"worst reconstruction residual {worst_residual:.3e}",
    )
    assert worst_norm <= 1.0 + TOL
    assert worst_residual <= TOL


def test_criterion_7_determinism(tmp_path):
    def run(report_path):
        proc = subprocess.run(
            [
                sys.executable,
                "-m",
                "contramean",
                "fuzz",
                "--seed",
                "42",
                "--report",
                str(report_path),
                "--no-figures",
            ],
            capture_output=True,
            text=True,
            timeout=1800,
        )
        assert proc.returncode == 0, proc.stdout + proc.stderr
        return report_path.read_bytes()

    first = run(tmp_path / "first.csv")
    second = run(tmp_path / "second.csv")
    ok = first == second
    announce(
        7,
        "campaign determinism",
        ok,
        f"two `fuzz --seed 42` runs, {len(first)} report bytes each, "
        f"byte-identical: {ok}",
    )
    assert first == second
