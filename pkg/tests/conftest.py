import numpy as np
import pytest

from catgate import Grid, default_grid, make_vacuum


@pytest.fixture(scope="session")
def grid():
    return default_grid()


@pytest.fixture(scope="session")
def odd_grid():
    """Same window as the default grid but with a node exactly at x = 0."""
    return Grid(-16.0, 16.0, 4097)


@pytest.fixture(scope="session")
def vacuum(grid):
    return make_vacuum(grid)


@pytest.fixture(scope="session")
def odd_vacuum(odd_grid):
    return make_vacuum(odd_grid)


def pointwise_max_diff(a, b):
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))
