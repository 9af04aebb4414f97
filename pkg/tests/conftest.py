import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)


def diag(*entries):
    return np.diag(np.asarray(entries, dtype=complex))
