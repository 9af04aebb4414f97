"""
Random instance generation for the property-testing harness.

All generators take an explicit ``numpy.random.Generator`` so that every
trial of a campaign can run on its own stream keyed by
(seed, dim, property, trial); nothing here touches global RNG state.
"""

from __future__ import annotations

import numpy as np

from .inequalities import INVERTIBILITY_RTOL
from .linalg import hermitian_part
from .means import Decomposition, WitnessPair

#: Condition-number cap applied to random congruence factors so that the
#: transformed operands stay within the precision budget of the checks.
CONGRUENCE_COND_CAP = 100.0


def complex_gaussian(dim: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """Matrix with independent standard complex Gaussian entries times scale."""
    return scale * (
        rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    )


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Approximately Haar-distributed unitary via QR of a complex Gaussian."""
    q, r = np.linalg.qr(complex_gaussian(dim, rng))
    d = np.diag(r)
    return q * (d / np.abs(d))


def gen_pd(dim: int, cond_cap: float, rng: np.random.Generator) -> np.ndarray:
    """Random Hermitian positive-definite matrix with condition <= cond_cap.

    Q diag(lam) Q* with Q unitary (QR of a complex Gaussian) and the
    eigenvalues log-uniform on [cond_cap^(-1/2), cond_cap^(1/2)].
    Deterministic for a given generator state.
    """
    dim = int(dim)
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    cond_cap = float(cond_cap)
    if cond_cap < 1.0:
        raise ValueError(f"condition cap must be >= 1, got {cond_cap}")
    q = haar_unitary(dim, rng)
    half_span = 0.5 * np.log(cond_cap)
    lam = np.exp(rng.uniform(-half_span, half_span, size=dim))
    return hermitian_part((q * lam) @ q.conj().T)


#: Interpolation weights mixing the maximizing decomposition with a pure
#: Gaussian one; pure Gaussians rarely land near the maximizer, so the
#: small weights exercise the near-equality regime of the upper bound.
DECOMPOSITION_MIX_WEIGHTS = (0.0, 0.01, 0.1, 0.5, 1.0)


def gen_decomposition(
    dim: int, witness: WitnessPair, rng: np.random.Generator
) -> Decomposition:
    """Random decomposition x + y = e, mixed between the witness and a
    complex Gaussian with entries scaled by 1/sqrt(dim).

    x = (1 - t) z + t g for t drawn uniformly from
    ``DECOMPOSITION_MIX_WEIGHTS``; y = e - x exactly, so the constraint
    holds to the last bit.
    """
    t = float(rng.choice(DECOMPOSITION_MIX_WEIGHTS))
    g = complex_gaussian(dim, rng, scale=1.0 / np.sqrt(2.0 * dim))
    x = (1.0 - t) * witness.z + t * g
    y = np.eye(dim, dtype=complex) - x
    return Decomposition(x, y)


def gen_invertible(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Random complex matrix, regenerated until comfortably invertible
    (sigma_min > sigma_max / CONGRUENCE_COND_CAP, far above the
    INVERTIBILITY_RTOL rejection threshold)."""
    while True:
        z = complex_gaussian(dim, rng)
        sv = np.linalg.svd(z, compute_uv=False)
        if sv[-1] > sv[0] / CONGRUENCE_COND_CAP and sv[-1] > INVERTIBILITY_RTOL * sv[0]:
            return z


def gen_psd_weight(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Random weight of a positive linear functional.

    Cycles through three shapes: g* g for a complex Gaussian g, the
    identity (the trace functional), and a rank-one projector.
    """
    kind = int(rng.integers(3))
    if kind == 0:
        g = complex_gaussian(dim, rng)
        return hermitian_part(g.conj().T @ g)
    if kind == 1:
        return np.eye(dim, dtype=complex)
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    v = v / np.linalg.norm(v)
    return hermitian_part(np.outer(v, v.conj()))
