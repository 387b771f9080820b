""" Majorana operators, the tilde map and fermionic Gaussian states """

# Import necessary libraries
import pytest
import numpy as np

# Import custom modules
from utils.errors import ContractError, UsageError
from linalg_core.operators import numericRank
from fock_majorana.fock_algebra import FockAlgebra, buildFock
from fock_majorana.tilde import sectorTheta, thetaConjugate, thetaOperator, tilde
from fock_majorana.gaussian_states import a8State, a8Vector, correlationMatrix, randomPureGaussian

def _randomEvenHermitian(alg, rng):
    g = rng.standard_normal((alg.dim, alg.dim)) + 1j * rng.standard_normal((alg.dim, alg.dim))
    h = (g + g.conj().T) / 2
    return alg.P_plus @ h @ alg.P_plus + alg.P_minus @ h @ alg.P_minus

def test_majoranas_anticommute(fock4):
    eye = np.eye(fock4.dim)
    for i in range(1, 9):
        for j in range(1, 9):
            ci, cj = fock4.majorana(i), fock4.majorana(j)
            expected = 2 * eye if i == j else 0 * eye
            np.testing.assert_allclose(ci @ cj + cj @ ci, expected, atol=1e-12)

def test_majorana_index_range(fock4):
    with pytest.raises(UsageError):
        fock4.majorana(9)

def test_mode_limit():
    with pytest.raises(UsageError):
        FockAlgebra(0)

def test_build_fock_is_shared():
    assert buildFock(3) is buildFock(3)

def test_sectors_split_the_space(fock4):
    assert fock4.sectorIndices('+').size == 8
    assert fock4.sectorIndices('-').size == 8
    W = fock4.sectorIsometry('+')
    np.testing.assert_allclose(W.conj().T @ W, np.eye(8))

def test_tilde_flips_quadratic_monomials(fock4):
    B = fock4.hermitianMonomial((1, 2))
    np.testing.assert_allclose(tilde(B, fock4), -B, atol=1e-12)
    Q4 = fock4.hermitianMonomial((1, 2, 3, 4))
    np.testing.assert_allclose(tilde(Q4, fock4), Q4, atol=1e-12)

def test_tilde_is_an_involution(fock4, rng):
    x = _randomEvenHermitian(fock4, rng)
    np.testing.assert_allclose(tilde(tilde(x, fock4), fock4), x, atol=1e-10)

def test_tilde_rejects_odd_operators(fock4):
    with pytest.raises(ContractError):
        tilde(fock4.majorana(1), fock4)

def test_theta_realizes_tilde(fock4, rng):
    T = thetaOperator(fock4)
    np.testing.assert_allclose(T @ T, np.eye(fock4.dim), atol=1e-12)
    x = _randomEvenHermitian(fock4, rng)
    np.testing.assert_allclose(thetaConjugate(T, x), tilde(x, fock4), atol=1e-10)
    assert sectorTheta(fock4, '+').shape == (8, 8)

def test_theta_needs_multiple_of_four_modes():
    with pytest.raises(UsageError):
        thetaOperator(buildFock(2))

def test_vacuum_correlation_matrix(fock4):
    vac = fock4.vacuum()
    corr = correlationMatrix(np.outer(vac, vac.conj()), fock4, checkPure=True)
    assert corr.pure
    assert corr.m[0, 1] == pytest.approx(1.0)
    np.testing.assert_allclose(corr.m, -corr.m.T)

@pytest.mark.parametrize("parity", ['+', '-'])
def test_random_gaussian_is_pure_gaussian(parity):
    alg = buildFock(3)
    psi = randomPureGaussian(alg, parity, seed=5)
    rho = np.outer(psi, psi.conj())
    corr = correlationMatrix(rho, alg, checkPure=True)
    assert corr.pure
    Q = np.real(np.vdot(psi, alg.Q @ psi))
    assert Q == pytest.approx(1.0 if parity == '+' else -1.0)

def test_correlation_matrix_rejects_odd_states(fock4):
    psi = (fock4.vacuum() + fock4.basisState([1])) / np.sqrt(2)
    with pytest.raises(ContractError):
        correlationMatrix(np.outer(psi, psi.conj()), fock4)

def test_a8_is_an_even_pure_state(fock4):
    rho = a8State(fock4)
    assert np.trace(rho).real == pytest.approx(1.0)
    assert numericRank(rho) == 1
    v = a8Vector(fock4)
    np.testing.assert_allclose(np.outer(v, v.conj()), rho, atol=1e-10)
    np.testing.assert_allclose(fock4.Q @ v, v, atol=1e-10)

def test_a8_is_not_gaussian(fock4):
    corr = correlationMatrix(a8State(fock4), fock4, checkPure=True)
    assert not corr.pure
