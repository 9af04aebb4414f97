import json

import numpy as np
import pytest

from contramean import (
    NotHermitianError,
    NotPositiveDefiniteError,
    load_hermitian_pd,
    load_matrix,
    matrix_from_obj,
    matrix_to_obj,
    save_matrix,
)


def test_roundtrip_is_exact(tmp_path, rng):
    m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    m *= np.exp(rng.uniform(-20, 20, size=(4, 4)))
    path = tmp_path / "m.json"
    save_matrix(path, m)
    back = load_matrix(path)
    assert np.array_equal(back, m)


def test_im_defaults_to_zero(tmp_path):
    path = tmp_path / "real.json"
    path.write_text(json.dumps({"n": 2, "re": [[1, 0], [0, 2]]}))
    m = load_matrix(path)
    assert np.array_equal(m, np.diag([1.0 + 0j, 2.0 + 0j]))


def test_real_matrix_serializes_without_im():
    obj = matrix_to_obj(np.eye(2))
    assert "im" not in obj
    obj = matrix_to_obj(np.eye(2) * 1j + np.eye(2))
    assert "im" in obj


def test_rejects_malformed_objects():
    with pytest.raises(ValueError):
        matrix_from_obj({"re": [[1]]})
    with pytest.raises(ValueError):
        matrix_from_obj({"n": 0, "re": []})
    with pytest.raises(ValueError):
        matrix_from_obj({"n": 2, "re": [[1, 2]]})
    with pytest.raises(ValueError):
        matrix_from_obj({"n": 1, "re": [[float("inf")]]})


def test_hermitian_gate(tmp_path):
    path = tmp_path / "m.json"
    save_matrix(path, np.array([[1.0, 1.0], [0.0, 1.0]]))
    with pytest.raises(NotHermitianError):
        load_hermitian_pd(path)

    save_matrix(path, np.diag([1.0, -1.0]))
    with pytest.raises(NotPositiveDefiniteError):
        load_hermitian_pd(path)

    save_matrix(path, np.diag([1.0, 2.0]))
    m = load_hermitian_pd(path)
    assert np.array_equal(m, np.diag([1.0 + 0j, 2.0 + 0j]))
