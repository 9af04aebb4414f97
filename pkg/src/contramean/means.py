"""
Weighted operator means on Hermitian positive-definite matrices and the
variational machinery of the weighted contraharmonic mean.

For a weight nu in (0, 1) and positive-definite a, b:

    arithmetic      A(a, b) = (1-nu) a + nu b
    harmonic        H(a, b) = ((1-nu) a^-1 + nu b^-1)^-1
    geometric       G(a, b) = a^(1/2) (a^(-1/2) b a^(-1/2))^nu a^(1/2)
    contraharmonic  C(a, b) = (1-nu)/nu b + nu/(1-nu) a - H(a, b)

The contraharmonic mean is the maximum, over all decompositions
x + y = e of the identity, of the quadratic objective

    F(x, y) = (nu a - x* a x)/(1-nu) + ((1-nu) b - y* b y)/nu,

attained at the explicit witness

    z = (1-nu)/nu (a + (1-nu)/nu b)^-1 b,    w = e - z.

For an arbitrary decomposition the shortfall C - F(x, y) equals
(1-nu)^-1 a^(1/2) h* h a^(1/2), where with r = (1-nu)/nu
a^(-1/2) b a^(-1/2) and s = e + r,

    h = s^(1/2) a^(1/2) x a^(-1/2) - r s^(-1/2).

This module exposes the means, the witness, the objective, the shortfall
factor h, and normalized equality checks for the two product/ratio
identities underlying the attainment argument. Check-side expressions
are accumulated in extended precision so the reports measure the library
outputs, not checker rounding.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import DecompositionInvalidError
from .linalg import (
    DEFAULT_TOL,
    EqualityReport,
    as_square_matrix,
    equality_report,
    hermitian_part,
    matrix_inverse,
    matrix_power,
    matrix_sqrt,
    op_norm,
    prod_ld,
    require_hermitian_pd,
    require_same_shape,
)
from .scalar import require_weight

#: Relative tolerance for the x + y = e constraint of a decomposition.
DECOMPOSITION_RTOL = 1e-10

_LD = np.clongdouble


class WitnessPair(NamedTuple):
    """Maximizing decomposition (z, w) with z + w = e."""

    z: np.ndarray
    w: np.ndarray


class Decomposition(NamedTuple):
    """A pair (x, y) of matrices constrained by x + y = e."""

    x: np.ndarray
    y: np.ndarray


def validate_mean_args(nu, a, b) -> tuple[float, np.ndarray, np.ndarray]:
    """Validate a weight and a pair of same-dimension HPD matrices."""
    nu = require_weight(nu)
    a = require_hermitian_pd(a)
    b = require_hermitian_pd(b)
    require_same_shape(a, b)
    return nu, a, b


def arithmetic_mean(nu, a, b) -> np.ndarray:
    """(1-nu) a + nu b."""
    nu, a, b = validate_mean_args(nu, a, b)
    return hermitian_part((1.0 - nu) * a + nu * b)


def harmonic_mean(nu, a, b) -> np.ndarray:
    """((1-nu) a^-1 + nu b^-1)^-1."""
    nu, a, b = validate_mean_args(nu, a, b)
    blend = hermitian_part((1.0 - nu) * matrix_inverse(a) + nu * matrix_inverse(b))
    return matrix_inverse(blend)


def geometric_mean(nu, a, b) -> np.ndarray:
    """a^(1/2) (a^(-1/2) b a^(-1/2))^nu a^(1/2)."""
    nu, a, b = validate_mean_args(nu, a, b)
    a_half = matrix_sqrt(a)
    a_mhalf = matrix_inverse(a_half)
    inner = hermitian_part(a_mhalf @ b @ a_mhalf)
    return hermitian_part(a_half @ matrix_power(inner, nu) @ a_half)


def contraharmonic_mean(nu, a, b) -> np.ndarray:
    """(1-nu)/nu b + nu/(1-nu) a - harmonic_mean(nu, a, b).

    Positive definite: it dominates (1-nu) b + nu a in the Loewner order.
    """
    nu, a, b = validate_mean_args(nu, a, b)
    hm = harmonic_mean(nu, a, b)
    return hermitian_part((1.0 - nu) / nu * b + nu / (1.0 - nu) * a - hm)


MATRIX_MEANS = {
    "arithmetic": arithmetic_mean,
    "harmonic": harmonic_mean,
    "geometric": geometric_mean,
    "contraharmonic": contraharmonic_mean,
}


def equal_args_coefficient(nu) -> float:
    """Value of C(a, a) / a: (3 nu^2 - 3 nu + 1) / (nu - nu^2), always >= 1."""
    nu = require_weight(nu)
    return (3.0 * nu * nu - 3.0 * nu + 1.0) / (nu - nu * nu)


def mixed_mean_coefficient(nu) -> float:
    """Coefficient (2 nu^2 - 2 nu + 1) / (nu - nu^2) of the mixed-mean
    upper bound; always >= 2."""
    nu = require_weight(nu)
    return (2.0 * nu * nu - 2.0 * nu + 1.0) / (nu - nu * nu)


def witness_pair(nu, a, b) -> WitnessPair:
    """Maximizing decomposition of the variational formula.

    z = (1-nu)/nu (a + (1-nu)/nu b)^-1 b and w = e - z. The complement is
    formed by subtraction so the constraint holds to the last bit; the
    closed form w = (a + (1-nu)/nu b)^-1 a agrees with it to rounding.
    """
    nu, a, b = validate_mean_args(nu, a, b)
    k = (1.0 - nu) / nu
    minv = matrix_inverse(hermitian_part(a + k * b))
    z = k * (minv @ b)
    w = np.eye(a.shape[0], dtype=complex) - z
    return WitnessPair(z, w)


def validate_decomposition(d, dim: int) -> Decomposition:
    """Check x + y = e within DECOMPOSITION_RTOL (relative)."""
    x = as_square_matrix(d[0])
    y = as_square_matrix(d[1])
    require_same_shape(x, y)
    if x.shape[0] != dim:
        raise DecompositionInvalidError(
            f"decomposition dimension {x.shape[0]} does not match operands ({dim})"
        )
    defect = op_norm(x + y - np.eye(dim)) / max(1.0, op_norm(x), op_norm(y))
    if defect > DECOMPOSITION_RTOL:
        raise DecompositionInvalidError(
            f"x + y deviates from the identity: relative defect {defect:.3e}"
        )
    return Decomposition(x, y)


def objective(nu, a, b, decomposition) -> np.ndarray:
    """Variational objective (nu a - x* a x)/(1-nu) + ((1-nu) b - y* b y)/nu.

    Hermitian but in general indefinite; never exceeds the contraharmonic
    mean in the Loewner order. The quadratics are accumulated in extended
    precision: near the maximizer the objective agrees with the mean to
    ~1e-12 even at condition 1e6, which the identity checks rely on.
    """
    nu, a, b = validate_mean_args(nu, a, b)
    x, y = validate_decomposition(decomposition, a.shape[0])
    al, bl = a.astype(_LD), b.astype(_LD)
    xl, yl = x.astype(_LD), y.astype(_LD)
    value = (nu * al - xl.conj().T @ al @ xl) / (1.0 - nu) + (
        (1.0 - nu) * bl - yl.conj().T @ bl @ yl
    ) / nu
    return hermitian_part(np.asarray(value, dtype=complex))


def _whitened_ratio_factors(nu, a, b):
    """Shared spectral ingredients: a^(1/2), a^(-1/2), r = (1-nu)/nu
    a^(-1/2) b a^(-1/2) kept in extended precision, and s = e + r."""
    k = (1.0 - nu) / nu
    a_half = matrix_sqrt(a)
    a_mhalf = matrix_inverse(a_half)
    rho_ld = k * prod_ld(a_mhalf, b, a_mhalf)
    rho_ld = 0.5 * (rho_ld + rho_ld.conj().T)
    rho = hermitian_part(np.asarray(rho_ld, dtype=complex))
    # sqrt(e + rho) seeded spectrally, then one Sylvester polish against
    # the extended-precision e + rho_ld
    w, v = np.linalg.eigh(rho)
    s = np.sqrt(1.0 + w)
    s_half = hermitian_part((v * s) @ v.conj().T)
    resid = (np.eye(rho.shape[0], dtype=_LD) + rho_ld) - prod_ld(s_half, s_half)
    rv = v.conj().T @ np.asarray(resid, dtype=complex) @ v
    s_half = hermitian_part(s_half + v @ (rv / (s[:, None] + s[None, :])) @ v.conj().T)
    s_mhalf = matrix_inverse(s_half)
    return a_half, a_mhalf, rho_ld, rho, s_half, s_mhalf


def residual_h(nu, a, b, decomposition) -> np.ndarray:
    """Shortfall factor h with C - F(x, y) = (1-nu)^-1 a^(1/2) h* h a^(1/2).

    h = s^(1/2) a^(1/2) x a^(-1/2) - r s^(-1/2), assembled in extended
    precision; vanishes exactly at the maximizing decomposition.
    """
    nu, a, b = validate_mean_args(nu, a, b)
    x, _ = validate_decomposition(decomposition, a.shape[0])
    a_half, a_mhalf, rho_ld, _, s_half, s_mhalf = _whitened_ratio_factors(nu, a, b)
    h_ld = prod_ld(s_half, a_half, x, a_mhalf) - rho_ld @ s_mhalf.astype(_LD)
    return np.asarray(h_ld, dtype=complex)


def check_gap_identity(nu, a, b, decomposition, tol: float = DEFAULT_TOL) -> EqualityReport:
    """Verify C = F(x, y) + (1-nu)^-1 a^(1/2) h* h a^(1/2) as a normalized
    equality of its two sides."""
    nu, a, b = validate_mean_args(nu, a, b)
    d = validate_decomposition(decomposition, a.shape[0])
    c = contraharmonic_mean(nu, a, b)
    f = objective(nu, a, b, d)
    h = residual_h(nu, a, b, d)
    a_half = matrix_sqrt(a)
    m = prod_ld(h, a_half)
    sandwich = (m.conj().T @ m) / (1.0 - nu)
    side = np.asarray(f.astype(_LD) + sandwich, dtype=complex)
    return equality_report(c, side, tol)


def check_attainment(nu, a, b, tol: float = DEFAULT_TOL) -> EqualityReport:
    """Verify that the objective at the witness equals the contraharmonic mean."""
    nu, a, b = validate_mean_args(nu, a, b)
    c = contraharmonic_mean(nu, a, b)
    f = objective(nu, a, b, witness_pair(nu, a, b))
    return equality_report(f, c, tol)


def _inverse_ld(m: np.ndarray) -> np.ndarray:
    """Check-side inverse kept in extended precision (spectral seed plus
    two Newton steps)."""
    w, v = np.linalg.eigh(hermitian_part(m))
    x = ((v / w) @ v.conj().T).astype(_LD)
    ml = m.astype(_LD)
    eye = np.eye(m.shape[0], dtype=_LD)
    for _ in range(2):
        x = x @ (2.0 * eye - ml @ x)
    return 0.5 * (x + x.conj().T)


def check_product_identity(nu, a, b, tol: float = DEFAULT_TOL) -> EqualityReport:
    """Verify a (a + (1-nu)/nu b)^-1 b = nu H(a, b) = b (a + (1-nu)/nu b)^-1 a.

    Both orderings are compared against nu times the library harmonic
    mean; the reported residual is the larger of the two.
    """
    nu, a, b = validate_mean_args(nu, a, b)
    k = (1.0 - nu) / nu
    minv = _inverse_ld(hermitian_part(a + k * b))
    rhs = nu * harmonic_mean(nu, a, b)
    first = equality_report(np.asarray(a.astype(_LD) @ minv @ b.astype(_LD),
                                       dtype=complex), rhs, tol)
    second = equality_report(np.asarray(b.astype(_LD) @ minv @ a.astype(_LD),
                                        dtype=complex), rhs, tol)
    residual = max(first.residual, second.residual)
    return EqualityReport(bool(residual <= tol), residual)


def check_square_identity(nu, a, b, tol: float = DEFAULT_TOL) -> EqualityReport:
    """Verify the squared-ratio identity

        r - (e + nu/(1-nu) a^(1/2) b^-1 a^(1/2))^-1
            = (e + r)^(-1/2) r^2 (e + r)^(-1/2)

    with r = (1-nu)/nu a^(-1/2) b a^(-1/2). The left side goes through
    b^-1 directly, the right side through the spectrum of r, so the two
    numerical routes are independent.
    """
    nu, a, b = validate_mean_args(nu, a, b)
    k = (1.0 - nu) / nu
    a_half, _, rho_ld, _, _, s_mhalf = _whitened_ratio_factors(nu, a, b)
    binv = matrix_inverse(b)
    inner = hermitian_part(
        np.eye(a.shape[0], dtype=complex) + (1.0 / k) * (a_half @ binv @ a_half)
    )
    lhs = rho_ld - matrix_inverse(inner).astype(_LD)
    rhs = s_mhalf.astype(_LD) @ rho_ld @ rho_ld @ s_mhalf.astype(_LD)
    return equality_report(np.asarray(lhs, dtype=complex),
                           np.asarray(rhs, dtype=complex), tol)
