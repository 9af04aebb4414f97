"""
Scalar mean family and grid-search cross-checks.

The scalar layer is deliberately independent of the matrix code: the
weighted means are written out in closed form, and the two variational
values are found by plain grid search (no calculus, no shared code
paths), so they can serve as oracles for the 1x1 and diagonal matrix
cases.
"""

from __future__ import annotations

import math

import numpy as np


def require_weight(nu: float) -> float:
    """Validate a weight strictly inside (0, 1)."""
    nu = float(nu)
    if not (0.0 < nu < 1.0) or not math.isfinite(nu):
        raise ValueError(f"weight must lie strictly between 0 and 1, got {nu}")
    return nu


def require_positive_pair(alpha: float, beta: float) -> tuple[float, float]:
    """Validate a pair of strictly positive finite scalars."""
    alpha, beta = float(alpha), float(beta)
    for name, value in (("alpha", alpha), ("beta", beta)):
        if not (value > 0.0 and math.isfinite(value)):
            raise ValueError(f"{name} must be positive and finite, got {value}")
    return alpha, beta


def lehmer_mean(s: float, alpha: float, beta: float) -> float:
    """Two-parameter power-ratio mean (alpha^s + beta^s) / (alpha^(s-1) + beta^(s-1)).

    s = 0, 1/2, 1, 2 give the harmonic, geometric, arithmetic and
    contraharmonic means respectively.
    """
    alpha, beta = require_positive_pair(alpha, beta)
    return (alpha**s + beta**s) / (alpha ** (s - 1) + beta ** (s - 1))


def weighted_arithmetic(nu: float, alpha: float, beta: float) -> float:
    """(1-nu) * alpha + nu * beta."""
    nu = require_weight(nu)
    alpha, beta = require_positive_pair(alpha, beta)
    return (1.0 - nu) * alpha + nu * beta


def weighted_harmonic(nu: float, alpha: float, beta: float) -> float:
    """((1-nu)/alpha + nu/beta)^(-1)."""
    nu = require_weight(nu)
    alpha, beta = require_positive_pair(alpha, beta)
    return 1.0 / ((1.0 - nu) / alpha + nu / beta)


def weighted_geometric(nu: float, alpha: float, beta: float) -> float:
    """alpha^(1-nu) * beta^nu."""
    nu = require_weight(nu)
    alpha, beta = require_positive_pair(alpha, beta)
    return alpha ** (1.0 - nu) * beta**nu


def weighted_contraharmonic(nu: float, alpha: float, beta: float) -> float:
    """(1-nu)/nu * beta + nu/(1-nu) * alpha - weighted harmonic mean."""
    nu = require_weight(nu)
    alpha, beta = require_positive_pair(alpha, beta)
    return (
        (1.0 - nu) / nu * beta
        + nu / (1.0 - nu) * alpha
        - weighted_harmonic(nu, alpha, beta)
    )


SCALAR_MEANS = {
    "arithmetic": weighted_arithmetic,
    "harmonic": weighted_harmonic,
    "geometric": weighted_geometric,
    "contraharmonic": weighted_contraharmonic,
}


def scalar_weighted_mean(kind: str, nu: float, alpha: float, beta: float) -> float:
    """Dispatch on the mean kind: arithmetic, harmonic, geometric or contraharmonic."""
    try:
        fn = SCALAR_MEANS[kind]
    except KeyError:
        raise ValueError(f"unknown mean kind {kind!r}") from None
    return fn(nu, alpha, beta)


def _require_grid_step(grid_step: float) -> float:
    grid_step = float(grid_step)
    if not (0.0 < grid_step <= 0.01):
        raise ValueError(f"grid_step must lie in (0, 0.01], got {grid_step}")
    return grid_step


def _grid_max(f, lo: float, hi: float, step: float) -> float:
    """Maximize f over a uniform grid on [lo, hi], then once more on a
    refined grid bracketing the coarse argmax. Pure grid search; the
    refinement keeps the result well inside the stated O(step^2) error
    without any use of derivatives."""
    grid = np.arange(lo, hi + step, step)
    values = f(grid)
    best = int(np.argmax(values))
    lo2 = grid[max(best - 1, 0)]
    hi2 = grid[min(best + 1, len(grid) - 1)]
    fine = np.linspace(lo2, hi2, 2001)
    return float(np.max(f(fine)))


def grid_search_contraharmonic(
    alpha: float, beta: float, grid_step: float = 1e-4
) -> float:
    """Contraharmonic mean as the grid-searched maximum of
    s -> alpha - 2*alpha*s^2 + beta - 2*beta*(1-s)^2 over s in [-1, 2].

    The maximizer lies at beta/(alpha+beta), always inside (0, 1), so the
    search window brackets it for any positive pair.
    """
    alpha, beta = require_positive_pair(alpha, beta)
    grid_step = _require_grid_step(grid_step)

    def value(s):
        return alpha - 2.0 * alpha * s**2 + beta - 2.0 * beta * (1.0 - s) ** 2

    return _grid_max(value, -1.0, 2.0, grid_step)


def grid_search_weighted_contraharmonic(
    nu: float, alpha: float, beta: float, grid_step: float = 1e-4
) -> float:
    """Weighted contraharmonic mean as the grid-searched maximum of
    s -> (nu*alpha - s^2*alpha)/(1-nu) + ((1-nu)*beta - (1-s)^2*beta)/nu
    over s in [-1, 2]."""
    nu = require_weight(nu)
    alpha, beta = require_positive_pair(alpha, beta)
    grid_step = _require_grid_step(grid_step)

    def value(s):
        return (nu * alpha - s**2 * alpha) / (1.0 - nu) + (
            (1.0 - nu) * beta - (1.0 - s) ** 2 * beta
        ) / nu

    return _grid_max(value, -1.0, 2.0, grid_step)
