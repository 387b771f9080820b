""" Closed-form Haar averages of witness expectations over unitary orbits """

# Import necessary libraries
import logging
import numpy as np
from fractions import Fraction
from typing import Union

# Import custom modules
from config.config import ClassOperator, ClassParams, Witness
from utils.errors import ContractError, UsageError
from coherent_classes.class_operators import symDim

# Configure logging
logger = logging.getLogger(__name__)

def _density(x) -> np.ndarray:
    m = np.asarray(getattr(x, "matrix", x), dtype=complex)
    if m.ndim == 1:
        m = np.outer(m, m.conj())
    return m

def _alphaBeta(w: Union[Witness, ClassParams]):
    if w.alpha is None or w.beta is None:
        raise ContractError("Witness carries no alpha/beta; its class operator trace is unknown")
    return float(w.alpha), float(w.beta)

def haarAverageBilinear(w: Union[Witness, ClassParams], rho1, rho2) -> float:
    """
        E_U tr((U rho1 U^dag (x) U rho2 U^dag) V) = (alpha + beta)/2 + ((alpha - beta)/2) tr(rho1 rho2)

        Args:
            w: Two-copy witness or class parameters carrying alpha and beta
            rho1: Density matrix or pure-state vector
            rho2: Same, on the same space

        Returns:
            float: Haar average
    """
    if getattr(w, "k", 2) != 2:
        raise UsageError(f"The bilinear average needs k = 2, got k={w.k}")
    alpha, beta = _alphaBeta(w)
    a, b = _density(rho1), _density(rho2)
    if a.shape != b.shape:
        raise ContractError(f"States of shapes {a.shape} and {b.shape} differ")
    overlap = float(np.real(np.trace(a @ b)))
    return (alpha + beta) / 2 + (alpha - beta) / 2 * overlap

def symOverlap(rho, psi: np.ndarray, k: int) -> float:
    """ tr((rho (x) (psi psi^dag)^{(x)(k-1)}) P^{sym,k}) = (1 + (k - 1)<psi|rho|psi>)/k """
    m = _density(rho)
    v = np.asarray(psi, dtype=complex).reshape(-1)
    inner = float(np.real(np.vdot(v, m @ v)))
    return (1 + (k - 1) * inner) / k

def haarAverageKlinear(op: ClassOperator, rho, psi: np.ndarray) -> float:
    """
        E_U tr((U rho U^dag (x) (U psi psi^dag U^dag)^{(x)(k-1)}) V) for V = A - (k-1)(I - P^{sym,k})

        Equal to -(k - 1) + ((k - 1) + tr A / dim Sym^k) times the sym-overlap of
        (rho, psi).

        Args:
            op (ClassOperator): Class operator with its exact trace
            rho: Density matrix on the carrier
            psi (np.ndarray): Unit vector on the carrier

        Returns:
            float: Haar average
    """
    if op.traceA is None:
        raise ContractError("Class operator carries no exact trace")
    k = op.k
    X = Fraction(op.traceA) / symDim(op.carrier_dim, k)
    return -(k - 1) + ((k - 1) + float(X)) * symOverlap(rho, psi, k)

def optimalKlinearAverage(op: ClassOperator, pmax: float) -> float:
    """ The k-linear average with psi the top eigenvector: sym-overlap ((k - 1) p_max + 1)/k """
    k = op.k
    X = Fraction(op.traceA) / symDim(op.carrier_dim, k)
    return -(k - 1) + ((k - 1) + float(X)) * ((k - 1) * pmax + 1) / k
