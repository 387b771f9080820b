""" Schmidt decomposition and the Schmidt-rank characterization A_n = P_A^asym (x) P_B^asym """

# Import necessary libraries
import math
import logging
import numpy as np
from itertools import combinations
from typing import Tuple

# Import custom modules
from config.config import ClassOperator, ClassSpec
from utils.errors import ContractError, UsageError
from linalg_core.symmetrizers import productOf, subsetSymmetrizer

# Configure logging
logger = logging.getLogger(__name__)

def schmidtDecompose(psi: np.ndarray, dA: int, dB: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
        Schmidt decomposition psi = sum_i lambda_i u_i (x) v_i

        Args:
            psi (np.ndarray): Normalized vector on C^dA (x) C^dB
            dA (int): Dimension of the first factor
            dB (int): Dimension of the second factor

        Returns:
            Tuple: (lambda non-increasing of length min(dA, dB), U with columns u_i, V with columns v_i)
    """
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if psi.size != dA * dB:
        raise ContractError(f"Vector of length {psi.size} does not live on {dA}x{dB}")
    u, s, vh = np.linalg.svd(psi.reshape(dA, dB), full_matrices=False)
    return s, u, vh.T

def schmidtRank(psi: np.ndarray, dA: int, dB: int, tol: float = 1e-9) -> int:
    s, _, _ = schmidtDecompose(psi, dA, dB)
    return int(np.sum(s > tol))

def elementarySymmetric(values, r: int) -> float:
    """ e_r(values) = sum over r-subsets of products """
    return float(sum(np.prod(c) for c in combinations(values, r))) if r <= len(values) else 0.0

def schmidtInvariant(psi: np.ndarray, dA: int, dB: int, n: int) -> float:
    """ <psi^{n+1}|A_n|psi^{n+1}> = e_{n+1}(lambda^2) from the Schmidt coefficients """
    s, _, _ = schmidtDecompose(psi, dA, dB)
    return elementarySymmetric(s ** 2, n + 1)

def schmidtSlots(dA: int, dB: int, k: int) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
    """ Slot dims (dA, dB) per copy, followed by the A slots and the B slots """
    return (dA, dB) * k, tuple(range(0, 2 * k, 2)), tuple(range(1, 2 * k, 2))

def schmidtOperator(n: int, dA: int, dB: int) -> ClassOperator:
    """
        A_n on (C^dA (x) C^dB)^{n+1}; vanishes on psi^{n+1} exactly when rank(psi) <= n

        Args:
            n (int): Schmidt-rank bound
            dA (int): First local dimension
            dB (int): Second local dimension

        Returns:
            ClassOperator: k = n + 1 copies, with the exact trace C(dA, n+1) C(dB, n+1)
    """
    if not 1 <= n <= min(dA, dB):
        raise UsageError(f"Schmidt bound must satisfy 1 <= n <= min(dA, dB), got n={n}")
    k = n + 1
    slot_dims, a_slots, b_slots = schmidtSlots(dA, dB, k)
    A = productOf([
        subsetSymmetrizer(slot_dims, a_slots, anti=True),
        subsetSymmetrizer(slot_dims, b_slots, anti=True),
    ])
    spec = ClassSpec(tag='schmidt', dims=(dA, dB), n=n)
    trace = A.exactTrace()
    expected = math.comb(dA, k) * math.comb(dB, k)
    if trace != expected:
        raise ContractError(f"Schmidt operator trace {trace} differs from C(dA,k)C(dB,k) = {expected}")
    return ClassOperator(spec=spec, k=k, A=A, carrier_dim=dA * dB, traceA=trace)
