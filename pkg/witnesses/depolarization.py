""" Depolarized two-fermion states and their exact detection threshold """

# Import necessary libraries
import logging
import numpy as np
from fractions import Fraction
from typing import Sequence, Union

# Import custom modules
from utils.errors import UsageError

# Configure logging
logger = logging.getLogger(__name__)

def twoFermionState(d: int, lambdas: Sequence[float]) -> np.ndarray:
    """
        psi = sum_i lambda_i e_{2i-1} ∧ e_{2i} in carrier coordinates of ∧^2(C^d)

        Args:
            d (int): Number of modes
            lambdas (Sequence[float]): At most d/2 coefficients, renormalized to unit norm

        Returns:
            np.ndarray: Unit vector of length C(d, 2)
    """
    if len(lambdas) == 0 or 2 * len(lambdas) > d:
        raise UsageError(f"Need 1..{d // 2} coefficients for {d} modes, got {len(lambdas)}")
    pairs = {(a, b): j for j, (a, b) in enumerate((a, b) for a in range(d) for b in range(a + 1, d))}
    psi = np.zeros(len(pairs), dtype=complex)
    for i, lam in enumerate(lambdas):
        psi[pairs[(2 * i, 2 * i + 1)]] = complex(lam)
    norm = np.linalg.norm(psi)
    if norm == 0:
        raise UsageError("Coefficients must not all vanish")
    return psi / norm

def depolarizedTwoFermion(d: int, lambdas: Sequence[float], p: float) -> np.ndarray:
    """ (1 - p) |psi><psi| + p I/N on ∧^2(C^d) """
    psi = twoFermionState(d, lambdas)
    N = psi.size
    return (1 - p) * np.outer(psi, psi.conj()) + p * np.eye(N) / N

def fermionDepolarizationThreshold(d: int, lambdas: Sequence[Union[Fraction, float]]) -> Union[Fraction, float]:
    """
        Critical p where detect2(V_f, rho(p), psi psi) changes sign

        p_cr = (1 - sum lambda^4) / ((1 - sum lambda^4) + 2(d - 2)/(d(d - 1))),
        with lambda normalized to sum lambda^2 = 1. The result is exact when every
        lambda is a Fraction.

        Args:
            d (int): Number of modes, at least 4
            lambdas (Sequence): Coefficients of psi, normalized here

        Returns:
            Fraction or float: Threshold
    """
    if d < 4:
        raise UsageError(f"The bilinear Slater witness needs d >= 4, got {d}")
    if len(lambdas) == 0 or 2 * len(lambdas) > d:
        raise UsageError(f"Need 1..{d // 2} coefficients for {d} modes, got {len(lambdas)}")
    if all(isinstance(x, Fraction) for x in lambdas):
        squares = [x * x for x in lambdas]
        total = sum(squares)
        purity = sum((s / total) ** 2 for s in squares)
        gap = Fraction(2 * (d - 2), d * (d - 1))
    else:
        squares = np.abs(np.asarray(lambdas, dtype=complex)) ** 2
        squares = squares / squares.sum()
        purity = float(np.sum(squares ** 2))
        gap = 2 * (d - 2) / (d * (d - 1))
    if purity >= 1:
        raise UsageError("A single Slater determinant is never detected")
    return (1 - purity) / ((1 - purity) + gap)

def uniformThreshold(d: int, count: int) -> Fraction:
    """ Threshold for count equal coefficients, e.g. 3/5 at d = 4 with two pairs """
    return fermionDepolarizationThreshold(d, [Fraction(1)] * count)
