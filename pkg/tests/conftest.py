""" Shared fixtures for the qcorr test suite """

# Import necessary libraries
import math
import pytest
import numpy as np

# Import custom modules
from config.settings import RuntimeSettings
from fock_majorana.fock_algebra import buildFock

@pytest.fixture
def rng():
    return np.random.default_rng(20240607)

@pytest.fixture
def fock4():
    return buildFock(4)

@pytest.fixture
def bell():
    """ (|00> + |11>)/sqrt 2 """
    psi = np.zeros(4, dtype=complex)
    psi[0] = psi[3] = 1 / math.sqrt(2)
    return psi

@pytest.fixture
def bellDensity(bell):
    return np.outer(bell, bell.conj())

@pytest.fixture(autouse=True)
def freshSettings(monkeypatch):
    monkeypatch.delenv("QCORR_THREADS", raising=False)
    RuntimeSettings.reset()
    yield
    RuntimeSettings.reset()
