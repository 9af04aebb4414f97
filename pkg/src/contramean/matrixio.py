"""
Matrix JSON file format.

A matrix is stored as ``{"n": <int>, "re": [[..]], "im": [[..]]}`` with
row-major n x n arrays; ``"im"`` may be omitted for a real matrix.
Serialization uses shortest round-trip decimal (up to 17 significant
digits), so write-then-read reproduces every entry exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .linalg import as_square_matrix, require_hermitian, require_hermitian_pd


def matrix_to_obj(m) -> dict:
    """JSON-serializable object for a square complex matrix."""
    a = as_square_matrix(m)
    obj = {"n": int(a.shape[0]), "re": a.real.tolist()}
    if np.any(a.imag != 0.0):
        obj["im"] = a.imag.tolist()
    return obj


def matrix_from_obj(obj: dict) -> np.ndarray:
    """Parse the matrix JSON object; validates shape and finiteness."""
    if not isinstance(obj, dict) or "n" not in obj or "re" not in obj:
        raise ValueError('matrix JSON must contain "n" and "re"')
    n = int(obj["n"])
    if n < 1:
        raise ValueError(f'"n" must be >= 1, got {n}')
    re = np.asarray(obj["re"], dtype=float)
    im = np.asarray(obj.get("im", np.zeros((n, n))), dtype=float)
    if re.shape != (n, n) or im.shape != (n, n):
        raise ValueError(
            f'matrix JSON arrays must be {n}x{n}, got re {re.shape} and im {im.shape}'
        )
    return as_square_matrix(re + 1j * im)


def save_matrix(path, m) -> None:
    """Write a matrix JSON file."""
    Path(path).write_text(json.dumps(matrix_to_obj(m)) + "\n")


def load_matrix(path) -> np.ndarray:
    """Read a matrix JSON file (no symmetry requirement)."""
    return matrix_from_obj(json.loads(Path(path).read_text()))


def load_hermitian(path) -> np.ndarray:
    """Read a matrix JSON file, rejecting non-Hermitian content."""
    return require_hermitian(load_matrix(path))


def load_hermitian_pd(path) -> np.ndarray:
    """Read a matrix JSON file, rejecting anything but Hermitian PD content."""
    return require_hermitian_pd(load_matrix(path))
