import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contramean import (
    grid_search_contraharmonic,
    grid_search_weighted_contraharmonic,
    lehmer_mean,
    scalar_weighted_mean,
    weighted_contraharmonic,
    weighted_harmonic,
)
from contramean.means import equal_args_coefficient

positive = st.floats(min_value=1e-2, max_value=1e2, allow_nan=False)
weights = st.floats(min_value=0.05, max_value=0.95, allow_nan=False)


def test_lehmer_fixtures():
    assert lehmer_mean(0, 4, 2) == pytest.approx(8 / 3, abs=1e-15)
    assert lehmer_mean(1, 4, 2) == pytest.approx(3.0, abs=1e-15)
    assert lehmer_mean(2, 3, 6) == pytest.approx(5.0, abs=1e-15)


def test_lehmer_rejects_nonpositive():
    with pytest.raises(ValueError):
        lehmer_mean(2, -1, 2)
    with pytest.raises(ValueError):
        lehmer_mean(2, 1, 0)


@given(positive, positive)
def test_lehmer_ordering(alpha, beta):
    values = [lehmer_mean(s, alpha, beta) for s in (0, 0.5, 1, 2)]
    for low, high in zip(values, values[1:]):
        assert low <= high + 1e-12 * max(1.0, high)


def test_weighted_fixtures():
    assert scalar_weighted_mean("contraharmonic", 0.5, 1, 3) == pytest.approx(2.5, abs=1e-12)
    assert scalar_weighted_mean("contraharmonic", 1 / 3, 1, 2) == pytest.approx(3.3, abs=1e-12)
    assert scalar_weighted_mean("harmonic", 0.5, 1, 3) == pytest.approx(1.5, abs=1e-15)
    assert weighted_harmonic(1 / 3, 1, 2) == pytest.approx(1.2, abs=1e-15)
    assert scalar_weighted_mean("arithmetic", 0.25, 4, 8) == pytest.approx(5.0)
    assert scalar_weighted_mean("geometric", 0.5, 1, 9) == pytest.approx(3.0)


@given(weights, positive)
def test_harmonic_fixed_point(nu, value):
    assert weighted_harmonic(nu, value, value) == pytest.approx(value, rel=1e-14)


@given(weights, positive, positive)
def test_weighted_symmetry(nu, alpha, beta):
    left = weighted_contraharmonic(nu, alpha, beta)
    right = weighted_contraharmonic(1.0 - nu, beta, alpha)
    assert left == pytest.approx(right, rel=1e-12)


def test_unknown_kind():
    with pytest.raises(ValueError):
        scalar_weighted_mean("median", 0.5, 1, 2)


class TestGridSearch:
    def test_symmetric_fixture(self):
        assert grid_search_contraharmonic(1, 1) == pytest.approx(1.0, abs=1e-9)

    def test_matches_lehmer(self):
        assert grid_search_contraharmonic(3, 6) == pytest.approx(5.0, abs=1e-6)
        assert grid_search_contraharmonic(1, 3) == pytest.approx(2.5, abs=1e-6)

    def test_weighted_fixtures(self):
        assert grid_search_weighted_contraharmonic(0.5, 1, 3) == pytest.approx(
            2.5, abs=1e-6
        )
        assert grid_search_weighted_contraharmonic(1 / 3, 1, 2) == pytest.approx(
            3.3, abs=1e-6
        )

    def test_equal_arguments_coefficient(self):
        for c in (0.3, 1.0, 7.5):
            got = grid_search_weighted_contraharmonic(1 / 3, c, c)
            assert got == pytest.approx(1.5 * c, abs=1e-6 * max(1.0, c))
            assert got == pytest.approx(equal_args_coefficient(1 / 3) * c, rel=1e-7)

    def test_step_validation(self):
        with pytest.raises(ValueError):
            grid_search_contraharmonic(1, 2, grid_step=0.5)
        with pytest.raises(ValueError):
            grid_search_contraharmonic(1, 2, grid_step=0.0)

    @settings(max_examples=60, deadline=None)
    @given(positive, positive)
    def test_agreement_plain(self, alpha, beta):
        got = grid_search_contraharmonic(alpha, beta)
        assert got == pytest.approx(lehmer_mean(2, alpha, beta), abs=1e-6)

    @settings(max_examples=60, deadline=None)
    @given(weights, positive, positive)
    def test_agreement_weighted(self, nu, alpha, beta):
        got = grid_search_weighted_contraharmonic(nu, alpha, beta)
        assert got == pytest.approx(weighted_contraharmonic(nu, alpha, beta), abs=1e-6)

    def test_agreement_sampled(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            alpha, beta = np.exp(rng.uniform(np.log(1e-2), np.log(1e2), size=2))
            nu = float(rng.uniform(0.05, 0.95))
            assert abs(
                grid_search_contraharmonic(alpha, beta) - lehmer_mean(2, alpha, beta)
            ) <= 1e-6
            assert abs(
                grid_search_weighted_contraharmonic(nu, alpha, beta)
                - weighted_contraharmonic(nu, alpha, beta)
            ) <= 1e-6
