""" Majorana-coefficient conjugation x -> x~ and its antiunitary realization """

# Import necessary libraries
import logging
import numpy as np
from typing import Dict, Tuple

# Import custom modules
from utils.errors import ContractError, UsageError
from fock_majorana.fock_algebra import FockAlgebra

# Configure logging
logger = logging.getLogger(__name__)

def monomialCoefficients(x: np.ndarray, alg: FockAlgebra) -> Dict[Tuple[int, ...], complex]:
    """ beta_S = tr(x B_S) / 2^d over even-sized S """
    coeffs = {}
    for S in alg.evenSubsets():
        beta = np.trace(x @ alg.hermitianMonomial(S)) / alg.dim
        if abs(beta) > 1e-15:
            coeffs[S] = complex(beta)
    return coeffs

def tilde(x: np.ndarray, alg: FockAlgebra) -> np.ndarray:
    """
        Expand x over the Hermitian monomials B_S and flip the sign of every
        coefficient with |S| = 2 mod 4.

        Args:
            x (np.ndarray): Even operator on Fock space
            alg (FockAlgebra): Algebra

        Returns:
            np.ndarray: x~
    """
    x = np.asarray(x, dtype=complex)
    if x.shape != (alg.dim, alg.dim):
        raise ContractError(f"Operator of shape {x.shape} does not live on {alg.d} modes")
    odd = (x - alg.Q @ x @ alg.Q) / 2
    if float(np.max(np.abs(odd))) > 1e-10:
        raise ContractError("tilde needs an even operator")

    out = np.zeros_like(x)
    for S, beta in monomialCoefficients(x, alg).items():
        sign = -1.0 if (len(S) // 2) % 2 else 1.0
        out += sign * beta * alg.hermitianMonomial(S)
    return out

def thetaOperator(alg: FockAlgebra) -> np.ndarray:
    """
        Unitary part T of the antiunitary theta = T K with theta x theta^-1 = x~.

        T = c_2 c_4 ... c_2d is real in the occupation basis, so theta^2 = T^2,
        which is the identity when d is a multiple of four.
    """
    if alg.d % 4:
        raise UsageError(f"theta = T K realizes the tilde map for d = 0 mod 4, got d={alg.d}")
    return alg.monomial(tuple(range(2, 2 * alg.d + 1, 2))).copy()

def thetaApply(T: np.ndarray, v: np.ndarray) -> np.ndarray:
    """ theta(v) = T conj(v) """
    return T @ np.conj(v)

def thetaConjugate(T: np.ndarray, x: np.ndarray) -> np.ndarray:
    """ theta x theta^-1 = T conj(x) T^dagger """
    return T @ np.conj(x) @ T.conj().T

def sectorTheta(alg: FockAlgebra, parity: str = '+') -> np.ndarray:
    """ T restricted to one parity sector (T is even, so it preserves both) """
    idx = alg.sectorIndices(parity)
    return thetaOperator(alg)[np.ix_(idx, idx)]
