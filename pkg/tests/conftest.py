import math

import pytest

from spinboson import SimConfig, coherent

NBAR = 50.0
PHI = math.pi / 6.0
NMAX = 150


@pytest.fixture(scope="session")
def cfg50():
    return SimConfig(nbar=NBAR, phi=PHI, n_max=NMAX)


@pytest.fixture(scope="session")
def field50():
    return coherent(NBAR, PHI, NMAX)
