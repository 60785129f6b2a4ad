import numpy as np
import pytest

from cohosc.oracle import gauss_hermite


@pytest.fixture(scope="session")
def gh96():
    return gauss_hermite(96)


@pytest.fixture(scope="session")
def gh128():
    return gauss_hermite(128)


@pytest.fixture(scope="session")
def grid21():
    axis = np.linspace(-3.0, 3.0, 21)
    return np.meshgrid(axis, axis, indexing="ij")
