import numpy as np
import pytest

from wavefall import Grid, PhysicalParams, make_gaussian


@pytest.fixture
def params():
    return PhysicalParams(hbar=1.0, m=1.0, g=1.0, c=10.0)


@pytest.fixture
def grid():
    # canonical lattice used throughout: wide enough for t up to ~2
    return Grid(x_min=-20.0, x_max=20.0, n=256)


@pytest.fixture
def psi0(grid, params):
    return make_gaussian(grid, 0.0, 0.0, 1.0, params)


@pytest.fixture
def rng():
    return np.random.default_rng(20260817)
