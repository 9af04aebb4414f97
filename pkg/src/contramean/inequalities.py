"""
Named order and equality properties of the weighted contraharmonic mean.

Each member of ``PropertyId`` corresponds to exactly one statement about
C = contraharmonic_mean(nu, a, b), A = arithmetic_mean, H = harmonic_mean:

SYMMETRY        C_nu(a, b) = C_(1-nu)(b, a)
HOMOGENEITY     C_nu(r a, r b) = r C_nu(a, b) for r > 0
SCALAR_EMBED    C_nu(alpha e, beta e) = C_nu(alpha, beta) e
BOUNDS_REMARK   0 <= C_nu(a, b) <= A_nu(nu^-1 b, (1-nu)^-1 a)
CONVEXITY_MIX   C_nu(A_mu(a, b), A_mu(c, d)) <= A_mu(C_nu(a, c), C_nu(b, d))
CONGRUENCE      C_nu(z* a z, z* b z) = z* C_nu(a, b) z for invertible z
MIXED_MEAN      C_nu(a, A_mu(a, b)) <= A_mu(g a, C_nu(a, b)),
                g = (2 nu^2 - 2 nu + 1)/(nu - nu^2)
FUNCTIONAL      C_nu(phi(a), phi(b)) <= phi(C_nu(a, b)) for every nonzero
                positive linear functional phi(x) = trace(w x), w PSD
NORM_LOWER      A_nu(nu^-1 b, (1-nu)^-1 a) - A_nu(alpha^2 a, beta^2 b)
                <= C_nu(a, b), with alpha = ||b|| / A_nu(||b||, ||a||) and
                beta = ||a|| / A_nu(||b||, ||a||)
LAMBDA_FAMILY   (nu - t^2)/(1-nu) a + (2t - t^2 - nu)/nu b <= C_nu(a, b)
                for every t in [0, 1]
CONTRACTION     z = C^(-1/2) A_nu(b, a)^(1/2) satisfies ||z|| <= 1 and
                z* C z = A_nu(b, a)
REFINED_UPPER   C_nu(a, b) <= A_nu(nu^-1 b, (1-nu)^-1 a)
                - H_nu(min_eig(a), min_eig(b)) e

Order checks return a ``LoewnerVerdict`` whose margin is the smallest
eigenvalue of (rhs - lhs) over max(1, ||lhs||, ||rhs||); equality checks
return an ``EqualityReport`` with the residual normalized the same way.
A single default tolerance of 1e-9 applies to both.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

import numpy as np

from .errors import LambdaOutOfRangeError, SingularMatrixError, ZeroFunctionalError
from .linalg import (
    DEFAULT_TOL,
    EqualityReport,
    LoewnerVerdict,
    as_square_matrix,
    congruence,
    equality_report,
    hermitian_part,
    loewner_leq,
    matrix_inv_sqrt,
    matrix_sqrt,
    op_norm,
    require_hermitian,
    require_same_shape,
)
from .means import (
    arithmetic_mean,
    contraharmonic_mean,
    mixed_mean_coefficient,
    validate_mean_args,
)
from .scalar import (
    require_positive_pair,
    require_weight,
    weighted_arithmetic,
    weighted_contraharmonic,
    weighted_harmonic,
)

#: Relative threshold on the smallest singular value of a congruence factor.
INVERTIBILITY_RTOL = 1e-8

#: Permitted negative slack (relative) in the PSD check of a functional weight.
HERMITIAN_PSD_SLACK = 1e-12


class PropertyId(enum.Enum):
    """The checkable properties, one id per statement (see module docstring)."""

    SYMMETRY = "SYMMETRY"
    HOMOGENEITY = "HOMOGENEITY"
    SCALAR_EMBED = "SCALAR_EMBED"
    BOUNDS_REMARK = "BOUNDS_REMARK"
    CONVEXITY_MIX = "CONVEXITY_MIX"
    CONGRUENCE = "CONGRUENCE"
    MIXED_MEAN = "MIXED_MEAN"
    FUNCTIONAL = "FUNCTIONAL"
    NORM_LOWER = "NORM_LOWER"
    LAMBDA_FAMILY = "LAMBDA_FAMILY"
    CONTRACTION = "CONTRACTION"
    REFINED_UPPER = "REFINED_UPPER"

    def __str__(self) -> str:  # CSV / CLI rendering
        return self.value


class ContractionReport(NamedTuple):
    """Contraction check: operator norm of the witness and the normalized
    reconstruction residual of z* C z against A_nu(b, a). ``margin`` is
    min(1 - norm, -residual), so margin >= -tol means both parts hold."""

    holds: bool
    margin: float
    norm: float
    residual: float


def check_symmetry(nu, a, b, tol: float = DEFAULT_TOL) -> EqualityReport:
    """C_nu(a, b) = C_(1-nu)(b, a)."""
    nu, a, b = validate_mean_args(nu, a, b)
    return equality_report(
        contraharmonic_mean(nu, a, b), contraharmonic_mean(1.0 - nu, b, a), tol
    )


def check_homogeneity(nu, a, b, r: float, tol: float = DEFAULT_TOL) -> EqualityReport:
    """C_nu(r a, r b) = r C_nu(a, b) for r > 0."""
    nu, a, b = validate_mean_args(nu, a, b)
    r = float(r)
    if not r > 0.0:
        raise ValueError(f"scale factor must be positive, got {r}")
    return equality_report(
        contraharmonic_mean(nu, r * a, r * b), r * contraharmonic_mean(nu, a, b), tol
    )


def check_scalar_embedding(
    nu, alpha: float, beta: float, dim: int, tol: float = DEFAULT_TOL
) -> EqualityReport:
    """C_nu(alpha e, beta e) = C_nu(alpha, beta) e."""
    nu = require_weight(nu)
    alpha, beta = require_positive_pair(alpha, beta)
    eye = np.eye(int(dim), dtype=complex)
    matrix_side = contraharmonic_mean(nu, alpha * eye, beta * eye)
    scalar_side = weighted_contraharmonic(nu, alpha, beta) * eye
    return equality_report(matrix_side, scalar_side, tol)


def check_homogeneity_and_embedding(
    nu, a, b, r: float, alpha: float, beta: float, tol: float = DEFAULT_TOL
) -> EqualityReport:
    """Combined report: worst residual of the scaling identity on (a, b)
    and the scalar embedding identity at (alpha, beta)."""
    scaling = check_homogeneity(nu, a, b, r, tol)
    embed = check_scalar_embedding(nu, alpha, beta, as_square_matrix(a).shape[0], tol)
    residual = max(scaling.residual, embed.residual)
    return EqualityReport(bool(residual <= tol), residual)


def check_bounds_remark(
    nu, a, b, tol: float = DEFAULT_TOL
) -> tuple[LoewnerVerdict, LoewnerVerdict]:
    """0 <= C_nu(a, b) and C_nu(a, b) <= A_nu(nu^-1 b, (1-nu)^-1 a)."""
    nu, a, b = validate_mean_args(nu, a, b)
    c = contraharmonic_mean(nu, a, b)
    upper = arithmetic_mean(nu, b / nu, a / (1.0 - nu))
    lower = loewner_leq(np.zeros_like(c), c, tol)
    return lower, loewner_leq(c, upper, tol)


def check_convexity_mix(nu, mu, a, b, c, d, tol: float = DEFAULT_TOL) -> LoewnerVerdict:
    """C_nu(A_mu(a, b), A_mu(c, d)) <= A_mu(C_nu(a, c), C_nu(b, d))."""
    nu, a, b = validate_mean_args(nu, a, b)
    mu, c, d = validate_mean_args(mu, c, d)
    require_same_shape(a, b, c, d)
    lhs = contraharmonic_mean(nu, arithmetic_mean(mu, a, b), arithmetic_mean(mu, c, d))
    rhs = arithmetic_mean(
        mu, contraharmonic_mean(nu, a, c), contraharmonic_mean(nu, b, d)
    )
    return loewner_leq(lhs, rhs, tol)


def check_congruence(nu, a, b, z, tol: float = DEFAULT_TOL) -> EqualityReport:
    """C_nu(z* a z, z* b z) = z* C_nu(a, b) z for invertible z."""
    nu, a, b = validate_mean_args(nu, a, b)
    z = as_square_matrix(z)
    require_same_shape(z, a)
    singular_values = np.linalg.svd(z, compute_uv=False)
    if singular_values[-1] <= INVERTIBILITY_RTOL * singular_values[0]:
        raise SingularMatrixError(
            "congruence factor is numerically singular: "
            f"sigma_min/sigma_max = {singular_values[-1] / singular_values[0]:.3e}"
        )
    transformed = contraharmonic_mean(nu, congruence(z, a), congruence(z, b))
    return equality_report(transformed, congruence(z, contraharmonic_mean(nu, a, b)), tol)


def check_mixed_mean(nu, mu, a, b, tol: float = DEFAULT_TOL) -> LoewnerVerdict:
    """C_nu(a, A_mu(a, b)) <= A_mu(g a, C_nu(a, b)) with
    g = mixed_mean_coefficient(nu)."""
    nu, a, b = validate_mean_args(nu, a, b)
    mu = require_weight(mu)
    lhs = contraharmonic_mean(nu, a, arithmetic_mean(mu, a, b))
    rhs = arithmetic_mean(
        mu, mixed_mean_coefficient(nu) * a, contraharmonic_mean(nu, a, b)
    )
    return loewner_leq(lhs, rhs, tol)


def apply_functional(weight, m) -> float:
    """Evaluate the positive linear functional trace(weight . m).

    The weight must be Hermitian positive semidefinite with positive
    trace; every positive linear functional on a matrix algebra has this
    form.
    """
    w = require_hermitian(weight)
    m = as_square_matrix(m)
    require_same_shape(w, m)
    smallest = float(np.linalg.eigvalsh(hermitian_part(w))[0])
    if smallest < -HERMITIAN_PSD_SLACK * max(1.0, op_norm(w)):
        raise ZeroFunctionalError(
            f"weight is not positive semidefinite: min eigenvalue {smallest:.3e}"
        )
    if not float(np.trace(w).real) > 0.0:
        raise ZeroFunctionalError("functional weight has non-positive trace")
    return float(np.trace(w @ m).real)


def check_functional(nu, a, b, weight, tol: float = DEFAULT_TOL) -> LoewnerVerdict:
    """C_nu(phi(a), phi(b)) <= phi(C_nu(a, b)) as a 1x1 Loewner comparison."""
    nu, a, b = validate_mean_args(nu, a, b)
    lhs = weighted_contraharmonic(nu, apply_functional(weight, a), apply_functional(weight, b))
    rhs = apply_functional(weight, contraharmonic_mean(nu, a, b))
    return loewner_leq(np.array([[lhs]]), np.array([[rhs]]), tol)


def norm_lower_coefficients(nu, a, b, corrected: bool = True) -> tuple[float, float]:
    """Coefficients (alpha, beta) of the norm-based lower bound.

    With s = A_nu(||b||, ||a||): alpha = ||b|| / s always; beta = ||a|| / s
    when ``corrected`` (the choice that makes (1-nu) alpha + nu beta = 1
    hold identically), or beta = alpha when not, for diagnosing the
    alternative in which the premise fails whenever ||a|| != ||b||.
    """
    nu, a, b = validate_mean_args(nu, a, b)
    norm_a, norm_b = op_norm(a), op_norm(b)
    scale = weighted_arithmetic(nu, norm_b, norm_a)
    alpha = norm_b / scale
    beta = norm_a / scale if corrected else alpha
    return alpha, beta


def norm_lower_premise_residual(nu, a, b, corrected: bool = True) -> float:
    """|(1-nu) alpha + nu beta - 1| for the chosen coefficient convention."""
    alpha, beta = norm_lower_coefficients(nu, a, b, corrected)
    nu = require_weight(nu)
    return abs((1.0 - nu) * alpha + nu * beta - 1.0)


def check_norm_lower_bound(nu, a, b, tol: float = DEFAULT_TOL) -> LoewnerVerdict:
    """A_nu(nu^-1 b, (1-nu)^-1 a) - A_nu(alpha^2 a, beta^2 b) <= C_nu(a, b),
    an equality in dimension one."""
    nu, a, b = validate_mean_args(nu, a, b)
    alpha, beta = norm_lower_coefficients(nu, a, b, corrected=True)
    upper = arithmetic_mean(nu, b / nu, a / (1.0 - nu))
    lower = hermitian_part(upper - arithmetic_mean(nu, alpha**2 * a, beta**2 * b))
    return loewner_leq(lower, contraharmonic_mean(nu, a, b), tol)


def lambda_lower_bound(
    nu, lam: float, a, b, tol: float = DEFAULT_TOL
) -> tuple[np.ndarray, LoewnerVerdict]:
    """Lower bound (nu - t^2)/(1-nu) a + (2t - t^2 - nu)/nu b <= C_nu(a, b)
    for t in [0, 1]; returns the bound and the verdict.

    Special cases: t = nu gives A_nu(b, a); t = sqrt(nu) gives
    2 (nu^(-1/2) - 1) b; t = 1 - sqrt(1-nu) gives 2 ((1-nu)^(-1/2) - 1) a.
    """
    nu, a, b = validate_mean_args(nu, a, b)
    lam = float(lam)
    if not (0.0 <= lam <= 1.0):
        raise LambdaOutOfRangeError(f"lambda must lie in [0, 1], got {lam}")
    bound = hermitian_part(
        (nu - lam**2) / (1.0 - nu) * a + (2.0 * lam - lam**2 - nu) / nu * b
    )
    verdict = loewner_leq(bound, contraharmonic_mean(nu, a, b), tol)
    return bound, verdict


def contraction_witness(nu, a, b) -> np.ndarray:
    """Contraction z = C_nu(a, b)^(-1/2) A_nu(b, a)^(1/2) carrying the
    swapped arithmetic mean into the contraharmonic mean: z* C z = A_nu(b, a)."""
    nu, a, b = validate_mean_args(nu, a, b)
    c = contraharmonic_mean(nu, a, b)
    swapped = arithmetic_mean(nu, b, a)
    return matrix_inv_sqrt(c) @ matrix_sqrt(swapped)


def check_contraction(nu, a, b, tol: float = DEFAULT_TOL) -> ContractionReport:
    """Norm and reconstruction check of the contraction witness."""
    nu, a, b = validate_mean_args(nu, a, b)
    z = contraction_witness(nu, a, b)
    c = contraharmonic_mean(nu, a, b)
    swapped = arithmetic_mean(nu, b, a)
    norm = op_norm(z)
    recon = equality_report(congruence(z, c), swapped, tol)
    margin = min(1.0 - norm, -recon.residual)
    return ContractionReport(bool(margin >= -tol), margin, norm, recon.residual)


def check_refined_upper(nu, a, b, tol: float = DEFAULT_TOL) -> LoewnerVerdict:
    """C_nu(a, b) <= A_nu(nu^-1 b, (1-nu)^-1 a)
    - H_nu(min_eig(a), min_eig(b)) e, which sharpens the plain upper bound
    by a positive multiple of the identity (min_eig(a) = ||a^-1||^-1)."""
    nu, a, b = validate_mean_args(nu, a, b)
    floor_a = float(np.linalg.eigvalsh(a)[0])
    floor_b = float(np.linalg.eigvalsh(b)[0])
    shift = weighted_harmonic(nu, floor_a, floor_b)
    upper = arithmetic_mean(nu, b / nu, a / (1.0 - nu))
    refined = hermitian_part(upper - shift * np.eye(a.shape[0], dtype=complex))
    return loewner_leq(contraharmonic_mean(nu, a, b), refined, tol)
