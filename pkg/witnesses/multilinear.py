""" k-linear witnesses V = A - (k-1)(I - P^{sym,k}) and matrix-free k-copy detection """

# Import necessary libraries
import math
import logging
import numpy as np
from fractions import Fraction
from itertools import product
from typing import Dict, List, Sequence, Tuple

# Import custom modules
from config.config import ClassOperator, Witness
from utils.errors import ContractError, SizeError, UsageError
from linalg_core.linear_map import DenseMap, IdentityMap, LinearCombination
from linalg_core.operators import kronAll
from linalg_core.symmetrizers import blockSymmetrizer

# Configure logging
logger = logging.getLogger(__name__)

# Largest number of amplitudes touched by one matrix-free detection
MAX_TUPLE_WORK = 1 << 28

def copySymmetrizerFor(factor_dims: Tuple[int, ...], k: int):
    """ P^{sym,k} permuting k equal blocks of the given slot layout """
    width = len(factor_dims) // k
    if width * k != len(factor_dims):
        raise ContractError(f"Slot layout {factor_dims} does not split into {k} copies")
    return blockSymmetrizer(factor_dims, [list(range(j * width, (j + 1) * width)) for j in range(k)])

def multilinearWitness(op: ClassOperator) -> Witness:
    """
        V = A - (k - 1)(I - P^{sym,k})

        Args:
            op (ClassOperator): Class operator with 0 <= A <= P^{sym,k}

        Returns:
            Witness: k-copy witness; constant_c holds k - 1
    """
    k = op.k
    dims = op.A.factor_dims
    sym = copySymmetrizerFor(dims, k)
    V = LinearCombination([(1, op.A), (-(k - 1), IdentityMap(dims)), (k - 1, sym)])
    return Witness(spec=op.spec, k=k, V=V, constant_c=Fraction(k - 1))

def _spectralTerms(state, tol: float = 1e-14) -> List[Tuple[float, np.ndarray]]:
    arr = np.asarray(getattr(state, "matrix", getattr(state, "amplitudes", state)), dtype=complex)
    if arr.ndim == 1:
        return [(1.0, arr / np.linalg.norm(arr))]
    w, v = np.linalg.eigh((arr + arr.conj().T) / 2)
    return [(float(w[j]), v[:, j]) for j in range(w.size) if w[j] > tol]

def detectK(w: Witness, states: Sequence, chunk: int = 64) -> float:
    """
        tr((rho_1 (x) ... (x) rho_k) V) without forming the k-copy product state

        Each rho_i is eigen-decomposed and the value is summed over weighted
        tuples of eigenvectors.

        Args:
            w (Witness): k-copy witness
            states (Sequence): k density matrices or pure-state vectors
            chunk (int): Product vectors per batched application

        Returns:
            float: Detection value
    """
    if len(states) != w.k:
        raise UsageError(f"Witness acts on {w.k} copies, got {len(states)} states")
    terms = [_spectralTerms(s) for s in states]
    dims = [t[0][1].size for t in terms]
    if math.prod(dims) != w.V.dim:
        raise ContractError(f"State dims {dims} do not match witness dim {w.V.dim}")

    if isinstance(w.V, DenseMap):
        # Contract one copy at a time; V is reshaped to (out_1..out_k, in_1..in_k)
        t = w.V.matrix.reshape(tuple(dims) * 2)
        for spectral in terms:
            rho = sum(p * np.outer(v, v.conj()) for p, v in spectral)
            t = np.tensordot(rho, t, axes=([0, 1], [t.ndim // 2, 0]))
        return float(np.real(t))

    count = math.prod(len(t) for t in terms)
    if count * w.V.dim > MAX_TUPLE_WORK:
        raise SizeError(f"{count} eigen-tuples on dim {w.V.dim} exceed the matrix-free budget")

    total = 0.0
    tuples = product(*terms)
    while True:
        batch = [next(tuples, None) for _ in range(chunk)]
        batch = [b for b in batch if b is not None]
        if not batch:
            break
        weights = np.array([math.prod(p for p, _ in tup) for tup in batch])
        vectors = np.column_stack([kronAll([v for _, v in tup]) for tup in batch])
        applied = w.V.apply(vectors)
        values = np.real(np.sum(vectors.conj() * applied, axis=0))
        total += float(np.dot(weights, values))
    return total

def maximallyEntangled(d: int) -> np.ndarray:
    """ (1/sqrt d) sum_i |ii> """
    psi = np.zeros(d * d, dtype=complex)
    psi[[i * d + i for i in range(d)]] = 1 / math.sqrt(d)
    return psi

def schmidtWitnessConstants(d: int, n: int) -> Dict[str, Fraction]:
    """
        Exact constants of the Schmidt-number witness on a depolarized maximally entangled state

        With rho_1 = (1 - p)|Psi><Psi| + p I/d^2 and the remaining n copies in |Psi>,
        tr((rho_1 (x) Psi^n) V_n) = (1 - p) A + p B - n p (1 - C).

        Args:
            d (int): Local dimension
            n (int): Schmidt-rank bound, 1 <= n < d

        Returns:
            Dict[str, Fraction]: A, B, C and the critical p
    """
    if not 1 <= n < d:
        raise UsageError(f"Schmidt-number witness needs 1 <= n < d, got n={n}, d={d}")
    A = Fraction(math.comb(d, n + 1), d ** (n + 1))
    B = Fraction(math.comb(d, n) * (d - n) ** 2, (n + 1) ** 2 * d ** (n + 2))
    C = (1 + Fraction(d * d - 1, n + 1)) / (d * d)
    p_cr = A / (A - B + n * (1 - C))
    return {"A": A, "B": B, "C": C, "p_cr": p_cr}

def schmidtDepolarizedTuple(d: int, n: int, p: float) -> List[np.ndarray]:
    """ (rho_1(p), Psi, ..., Psi) for the Schmidt-number witness on n + 1 copies """
    psi = maximallyEntangled(d)
    rho = (1 - p) * np.outer(psi, psi.conj()) + p * np.eye(d * d) / (d * d)
    return [rho] + [psi] * n
