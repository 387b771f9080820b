""" Convex-Gaussian decision, generalized Schmidt decomposition and Gaussian fidelity on four modes """

# Import necessary libraries
import math
import logging
import numpy as np
from typing import Dict, Tuple

# Import custom modules
from config.config import ConjugationSpec, StateVector
from config.constants import DETECTION_THRESHOLD
from utils.errors import ContractError, UsageError
from linalg_core.operators import asMatrix, stateVector
from fock_majorana.fock_algebra import FockAlgebra, buildFock
from fock_majorana.tilde import sectorTheta
from concurrence.uhlmann import basisConjugation, conjugateVector, majoranaTilde, uwConcurrence

# Configure logging
logger = logging.getLogger(__name__)

# A convex-Gaussian four-mode state mixes at most this many pure Gaussian states
MAX_GAUSSIAN_TERMS = 16

def _checkAlgebra(alg: FockAlgebra) -> FockAlgebra:
    alg = alg if alg is not None else buildFock(4)
    if alg.d != 4:
        raise UsageError(f"The four-mode decision needs d = 4, got d={alg.d}")
    return alg

def thetaPlus(alg: FockAlgebra = None) -> ConjugationSpec:
    """ theta_+ = T K on Fock_+ with T = c_2 c_4 c_6 c_8 restricted to the even sector """
    alg = _checkAlgebra(alg)
    return basisConjugation(sectorTheta(alg, '+'))

def thetaMinus(alg: FockAlgebra = None) -> ConjugationSpec:
    alg = _checkAlgebra(alg)
    return basisConjugation(sectorTheta(alg, '-'))

def sectorBlocks(rho, alg: FockAlgebra) -> Tuple[np.ndarray, np.ndarray]:
    """ (P_+ rho P_+, P_- rho P_-) as unnormalized 8 x 8 blocks """
    m = asMatrix(rho)
    if m.shape != (alg.dim, alg.dim):
        raise ContractError(f"State of shape {m.shape} does not live on {alg.d} modes")
    if not alg.isEven(m):
        raise ContractError("The four-mode decision needs an even (parity-commuting) state")
    blocks = []
    for parity in ('+', '-'):
        idx = alg.sectorIndices(parity)
        blocks.append(m[np.ix_(idx, idx)])
    return blocks[0], blocks[1]

def gaussConcurrences(rho, alg: FockAlgebra = None) -> Tuple[float, float]:
    """
        (C_+, C_-) of an even four-mode state

        Args:
            rho: 16 x 16 even density matrix
            alg (FockAlgebra, optional): Four-mode algebra

        Returns:
            Tuple[float, float]: Uhlmann-Wootters concurrences of the sector blocks under tilde
    """
    alg = _checkAlgebra(alg)
    plus, minus = sectorBlocks(rho, alg)
    c_plus = uwConcurrence(plus, majoranaTilde(alg, '+'))
    c_minus = uwConcurrence(minus, majoranaTilde(alg, '-'))
    return c_plus, c_minus

def convexGaussian(rho, alg: FockAlgebra = None) -> Tuple[bool, Dict[str, object]]:
    """
        Decide whether an even four-mode state is a mixture of pure Gaussian states

        Args:
            rho: 16 x 16 even density matrix
            alg (FockAlgebra, optional): Four-mode algebra

        Returns:
            Tuple[bool, dict]: Verdict and a report with both concurrences
    """
    c_plus, c_minus = gaussConcurrences(rho, alg)
    verdict = bool(c_plus <= DETECTION_THRESHOLD and c_minus <= DETECTION_THRESHOLD)
    report = {
        "C_plus": float(c_plus),
        "C_minus": float(c_minus),
        "convex_gaussian": verdict,
        "max_terms": MAX_GAUSSIAN_TERMS,
    }
    logger.debug(f"Four-mode decision: C+={c_plus:.3e}, C-={c_minus:.3e}, convex={verdict}")
    return verdict, report

def _sectorVector(psi, alg: FockAlgebra) -> np.ndarray:
    v = np.asarray(psi.amplitudes if isinstance(psi, StateVector) else psi, dtype=complex).reshape(-1)
    if v.size == alg.dim:
        if np.linalg.norm(alg.P_minus @ v) > 1e-10:
            raise ContractError("Generalized Schmidt decomposition needs an even state")
        v = v[alg.sectorIndices('+')]
    if v.size != alg.dim // 2:
        raise ContractError(f"Expected an even-sector vector of length {alg.dim // 2}, got {v.size}")
    if abs(np.linalg.norm(v) - 1) > 1e-9:
        raise ContractError("Generalized Schmidt decomposition needs a normalized state")
    return v

def _fixedDirectionOrthogonalTo(x: np.ndarray, conj: ConjugationSpec) -> np.ndarray:
    # theta-fixed vectors with real Gram-Schmidt coefficients stay theta-fixed
    for j in range(x.size):
        for phase in (1.0, 1j):
            e = np.zeros(x.size, dtype=complex)
            e[j] = phase
            v = (e + conjugateVector(e, conj)) / 2
            v = v - np.real(np.vdot(x, v)) * x
            norm = np.linalg.norm(v)
            if norm > 1e-6:
                return v / norm
    raise ContractError("No theta-fixed direction orthogonal to the given vector")

def generalizedSchmidt(psi, alg: FockAlgebra = None) -> Tuple[float, StateVector, complex]:
    """
        psi = phase (sqrt(1 - p^2) psi_G + p theta_+ psi_G) with psi_G Gaussian

        Args:
            psi: Normalized even state, 8 sector amplitudes or 16 Fock amplitudes
            alg (FockAlgebra, optional): Four-mode algebra

        Returns:
            Tuple[float, StateVector, complex]: p in [0, 1/sqrt 2], psi_G on the
            even sector, and the global phase of the reconstruction
    """
    alg = _checkAlgebra(alg)
    conj = thetaPlus(alg)
    v = _sectorVector(psi, alg)

    z = np.vdot(v, conjugateVector(v, conj))
    phi = np.angle(z) / 2 if abs(z) > 1e-15 else 0.0
    shifted = np.exp(1j * phi) * v
    flipped = conjugateVector(shifted, conj)
    x = (shifted + flipped) / 2
    y = (shifted - flipped) / 2j
    nx, ny = np.linalg.norm(x), np.linalg.norm(y)
    x_hat = x / nx
    y_hat = y / ny if ny > 1e-12 else _fixedDirectionOrthogonalTo(x_hat, conj)

    p = float(np.clip((nx - ny) / math.sqrt(2), 0.0, 1 / math.sqrt(2)))
    gaussian = (x_hat + 1j * y_hat) / math.sqrt(2)
    gaussian = gaussian / np.linalg.norm(gaussian)
    return p, stateVector(gaussian, normalized=True), complex(np.exp(-1j * phi))

def schmidtCombination(psiG, p: float, alg: FockAlgebra = None, phase: complex = 1.0) -> np.ndarray:
    """ phase (sqrt(1 - p^2) psi_G + p theta_+ psi_G), the inverse of generalizedSchmidt """
    alg = _checkAlgebra(alg)
    if not 0 <= p <= 1 / math.sqrt(2) + 1e-12:
        raise UsageError(f"p must lie in [0, 1/sqrt 2], got {p}")
    g = np.asarray(psiG.amplitudes if isinstance(psiG, StateVector) else psiG, dtype=complex)
    return phase * (math.sqrt(1 - p * p) * g + p * conjugateVector(g, thetaPlus(alg)))

def schmidtConcurrence(p: float) -> float:
    """ C_+ = 2 p sqrt(1 - p^2) """
    return 2 * p * math.sqrt(max(0.0, 1 - p * p))

def gaussFidelity(rho, alg: FockAlgebra = None) -> Dict[str, float]:
    """
        Largest fidelity to a pure Gaussian state and the implied trace-distance interval

        Args:
            rho: Even state supported on the even sector
            alg (FockAlgebra, optional): Four-mode algebra

        Returns:
            dict: F = 1/2 + 1/2 sqrt(1 - C_+^2), with [1 - sqrt F, sqrt(1 - F)]
    """
    alg = _checkAlgebra(alg)
    m = asMatrix(rho)
    if m.ndim == 1:
        m = np.outer(m, m.conj())
    plus, minus = sectorBlocks(m, alg)
    if np.linalg.norm(minus) > 1e-10:
        raise ContractError("Gaussian fidelity needs a state supported on the even sector")
    c_plus = uwConcurrence(plus, majoranaTilde(alg, '+'))
    F = 0.5 + 0.5 * math.sqrt(max(0.0, 1 - c_plus * c_plus))
    return {
        "C_plus": float(c_plus),
        "fidelity": F,
        "trace_distance_lower": 1 - math.sqrt(F),
        "trace_distance_upper": math.sqrt(1 - F),
    }
