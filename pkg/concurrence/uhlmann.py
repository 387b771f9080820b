""" Uhlmann-Wootters concurrences for antiunitary conjugations """

# Import necessary libraries
import logging
import numpy as np
from scipy.linalg import eigvals

# Import custom modules
from config.config import ConjugationSpec
from config.constants import CLAMP_TOL, IMAG_FAIL_TOL
from utils.errors import ContractError, NumericalError, UsageError
from linalg_core.operators import asMatrix
from fock_majorana.fock_algebra import FockAlgebra
from fock_majorana.tilde import sectorTheta, tilde

# Configure logging
logger = logging.getLogger(__name__)

SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)

def basisConjugation(T: np.ndarray) -> ConjugationSpec:
    """ theta(v) = T conj(v) for a unitary T with T conj(T) = I """
    T = np.asarray(T, dtype=complex)
    if T.ndim != 2 or T.shape[0] != T.shape[1]:
        raise ContractError(f"Conjugation matrix must be square, got shape {T.shape}")
    if not np.allclose(T @ T.conj().T, np.eye(T.shape[0]), atol=1e-10):
        raise ContractError("Conjugation matrix must be unitary")
    return ConjugationSpec(kind='basis', T=T)

def spinFlip() -> ConjugationSpec:
    """ Two-qubit spin flip sigma_y (x) sigma_y """
    return basisConjugation(np.kron(SIGMA_Y, SIGMA_Y))

def majoranaTilde(alg: FockAlgebra, sector: str = '+') -> ConjugationSpec:
    """ rho -> rho~ through the Majorana coefficient flip, read on one parity sector """
    if sector not in ('+', '-'):
        raise UsageError(f"Sector must be '+' or '-', got {sector!r}")
    return ConjugationSpec(kind='tilde', algebra=alg, sector=sector)

def conjugatedState(rho: np.ndarray, conj: ConjugationSpec) -> np.ndarray:
    """
        rho~ = theta rho theta^-1

        Args:
            rho (np.ndarray): Operator on the conjugation's space; for kind 'tilde'
                either the full Fock space or the sector block
            conj (ConjugationSpec): Conjugation

        Returns:
            np.ndarray: rho~ in the same coordinates as rho
    """
    if conj.kind == 'basis':
        if rho.shape != conj.T.shape:
            raise ContractError(f"State of shape {rho.shape} does not match conjugation of dim {conj.T.shape[0]}")
        return conj.T @ np.conj(rho) @ conj.T.conj().T
    if conj.kind == 'tilde':
        alg = conj.algebra
        W = alg.sectorIsometry(conj.sector)
        if rho.shape == (alg.dim, alg.dim):
            return tilde(rho, alg)
        if rho.shape == (W.shape[1], W.shape[1]):
            return W.conj().T @ tilde(W @ rho @ W.conj().T, alg) @ W
        raise ContractError(f"State of shape {rho.shape} lives neither on Fock space nor on its sector")
    raise UsageError(f"Unknown conjugation kind {conj.kind!r}")

def conjugateVector(v: np.ndarray, conj: ConjugationSpec) -> np.ndarray:
    """ theta(v); the tilde kind is realized as T K on its sector """
    if conj.kind == 'basis':
        return conj.T @ np.conj(v)
    return sectorTheta(conj.algebra, conj.sector) @ np.conj(v)

def rootSpectrum(rho: np.ndarray, rhoTilde: np.ndarray) -> np.ndarray:
    """
        Square roots of the eigenvalues of rho rho~, non-increasing

        rho rho~ is similar to a positive operator, so imaginary parts up to
        CLAMP_TOL and negatives down to -CLAMP_TOL are numerical and set to zero.
    """
    values = eigvals(rho @ rhoTilde)
    scale = max(1.0, float(np.max(np.abs(values)))) if values.size else 1.0
    worst = float(np.max(np.abs(values.imag))) if values.size else 0.0
    if worst > IMAG_FAIL_TOL * scale:
        raise NumericalError(f"rho rho~ has an eigenvalue with imaginary part {worst:.3e}")
    if worst > CLAMP_TOL:
        logger.warning(f"Discarding imaginary eigenvalue residue {worst:.3e}")
    real = values.real
    if float(np.min(real, initial=0.0)) < -CLAMP_TOL:
        logger.warning(f"Clamping negative eigenvalue {float(np.min(real)):.3e} of rho rho~")
    real = np.clip(real, 0.0, None)
    return np.sort(np.sqrt(real))[::-1]

def concurrenceMargin(rho, conj: ConjugationSpec) -> float:
    """ lambda_1 - sum_{k >= 2} lambda_k without the clip at zero; negative for undetected states """
    m = asMatrix(rho)
    if float(np.max(np.abs(m - m.conj().T))) > 1e-10:
        raise ContractError("Concurrence needs a Hermitian operator")
    lam = rootSpectrum(m, conjugatedState(m, conj))
    return float(lam[0] - np.sum(lam[1:]))

def uwConcurrence(rho, conj: ConjugationSpec) -> float:
    """
        max{0, lambda_1 - sum_{k >= 2} lambda_k} over the root spectrum of rho rho~

        Args:
            rho: Positive operator (density matrix or an unnormalized sector block)
            conj (ConjugationSpec): Antiunitary conjugation

        Returns:
            float: Concurrence
    """
    return max(0.0, concurrenceMargin(rho, conj))

def pureConcurrence(psi: np.ndarray, conj: ConjugationSpec) -> float:
    """ |<psi|theta psi>| """
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    return float(abs(np.vdot(psi, conjugateVector(psi, conj))))

def wootters2q(rho) -> float:
    """
        Two-qubit concurrence with rho~ = (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)

        Args:
            rho: 4 x 4 density matrix

        Returns:
            float: Wootters concurrence
    """
    m = asMatrix(rho)
    if m.shape != (4, 4):
        raise ContractError(f"Two-qubit concurrence needs a 4 x 4 matrix, got {m.shape}")
    return uwConcurrence(m, spinFlip())

def isInvolution(conj: ConjugationSpec, dim: int, rng: np.random.Generator, samples: int = 20) -> bool:
    """ theta^2 = identity within 1e-10 on random vectors """
    for _ in range(samples):
        v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        if np.linalg.norm(conjugateVector(conjugateVector(v, conj), conj) - v) > 1e-10 * np.linalg.norm(v):
            return False
    return True

def singlet() -> np.ndarray:
    return np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)

def wernerState(p: float) -> np.ndarray:
    """ (1 - p)|Psi-><Psi-| + p I/4 """
    psi = singlet()
    return (1 - p) * np.outer(psi, psi.conj()) + p * np.eye(4) / 4
