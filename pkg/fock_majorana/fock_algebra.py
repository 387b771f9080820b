""" Fermionic Fock space of d modes: ladder, Majorana and parity operators """

# Import necessary libraries
import logging
import numpy as np
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

# Import custom modules
from utils.errors import UsageError
from config.constants import MAX_FOCK_MODES
from linalg_core.operators import kronAll

# Configure logging
logger = logging.getLogger(__name__)

_SIGMA_MINUS = np.array([[0, 1], [0, 0]], dtype=complex)
_Z = np.diag([1.0, -1.0]).astype(complex)
_I2 = np.eye(2, dtype=complex)

class FockAlgebra:
    """
        Operators on Fock(C^d) in the occupation basis.

        Basis index i encodes occupations n_k = (i >> (k-1)) & 1, so mode 1 is the
        least significant bit. Ladder operators carry the Jordan-Wigner string over
        the lower modes. Majoranas are 1-indexed: c_{2k-1} = a_k + a_k^dagger and
        c_{2k} = i(a_k - a_k^dagger).
    """

    def __init__(self, d: int):
        if not 1 <= d <= MAX_FOCK_MODES:
            raise UsageError(f"Number of modes must lie in [1, {MAX_FOCK_MODES}], got {d}")
        self.d = d
        self.dim = 2 ** d
        self.annihilators = [self._annihilator(k) for k in range(1, d + 1)]
        self.creators = [a.conj().T for a in self.annihilators]
        self.majoranas = []
        for a, ad in zip(self.annihilators, self.creators):
            self.majoranas.append(a + ad)
            self.majoranas.append(1j * (a - ad))
        occupations = np.array([bin(i).count("1") for i in range(self.dim)])
        self.Q = np.diag((-1.0) ** occupations).astype(complex)
        self.P_plus = (np.eye(self.dim) + self.Q) / 2
        self.P_minus = (np.eye(self.dim) - self.Q) / 2
        self._monomials: Dict[Tuple[int, ...], np.ndarray] = {}
        for m in (self.Q, self.P_plus, self.P_minus, *self.majoranas):
            m.setflags(write=False)

    def _annihilator(self, k: int) -> np.ndarray:
        # kron order runs from mode d (most significant) down to mode 1
        factors = []
        for mode in range(self.d, 0, -1):
            if mode > k:
                factors.append(_I2)
            elif mode == k:
                factors.append(_SIGMA_MINUS)
            else:
                factors.append(_Z)
        return kronAll(factors)

    def majorana(self, j: int) -> np.ndarray:
        """ c_j for j in 1..2d """
        if not 1 <= j <= 2 * self.d:
            raise UsageError(f"Majorana index {j} outside 1..{2 * self.d}")
        return self.majoranas[j - 1]

    def monomial(self, indices: Sequence[int]) -> np.ndarray:
        """ Ordered product c_{i_1} c_{i_2} ... for ascending 1-based indices """
        key = tuple(indices)
        cached = self._monomials.get(key)
        if cached is not None:
            return cached
        out = np.eye(self.dim, dtype=complex)
        for j in key:
            out = out @ self.majorana(j)
        out.setflags(write=False)
        self._monomials[key] = out
        return out

    def hermitianMonomial(self, indices: Sequence[int]) -> np.ndarray:
        """ B_S = i^{|S|/2} c_S for an even-sized ascending S; B_S is Hermitian and squares to I """
        if len(indices) % 2:
            raise UsageError("Hermitian monomials are defined for even-sized index sets")
        return (1j ** (len(indices) // 2)) * self.monomial(indices)

    def evenSubsets(self) -> List[Tuple[int, ...]]:
        """ All even-sized subsets of {1..2d}, by size then lexicographically """
        return _evenSubsets(2 * self.d)

    def number(self, k: int) -> np.ndarray:
        """ n_k = a_k^dagger a_k """
        return self.creators[k - 1] @ self.annihilators[k - 1]

    def sectorIndices(self, parity: str) -> np.ndarray:
        """ Basis indices of the even ('+') or odd ('-') parity sector, ascending """
        occupations = np.array([bin(i).count("1") for i in range(self.dim)])
        if parity == '+':
            return np.flatnonzero(occupations % 2 == 0)
        if parity == '-':
            return np.flatnonzero(occupations % 2 == 1)
        raise UsageError(f"Parity must be '+' or '-', got {parity!r}")

    def sectorIsometry(self, parity: str) -> np.ndarray:
        """ Columns are the Fock basis vectors of one parity sector """
        idx = self.sectorIndices(parity)
        W = np.zeros((self.dim, idx.size), dtype=complex)
        W[idx, np.arange(idx.size)] = 1.0
        return W

    def vacuum(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=complex)
        v[0] = 1.0
        return v

    def basisState(self, occupied: Sequence[int]) -> np.ndarray:
        """ Fock state with the listed (1-based) modes occupied """
        v = np.zeros(self.dim, dtype=complex)
        v[sum(1 << (k - 1) for k in occupied)] = 1.0
        return v

    def isEven(self, x: np.ndarray, tol: float = 1e-10) -> bool:
        return float(np.max(np.abs(self.Q @ x - x @ self.Q))) <= tol

@lru_cache(maxsize=None)
def _evenSubsets(n: int) -> List[Tuple[int, ...]]:
    out = []
    for size in range(0, n + 1, 2):
        out.extend(combinations(range(1, n + 1), size))
    return out

@lru_cache(maxsize=None)
def buildFock(d: int) -> FockAlgebra:
    """ Shared, immutable FockAlgebra for d modes """
    logger.debug(f"Building Fock algebra for d={d}")
    return FockAlgebra(d)
