""" Dense operator construction, tensor products, partial traces and spectra """

# Import necessary libraries
import logging
import numpy as np
from functools import reduce
from typing import Iterable, Optional, Sequence, Tuple, Union

# Import custom modules
from config.config import DenseOperator, StateVector
from utils.errors import ContractError, SizeError, UsageError
from config.constants import HERMITIAN_TOL, MAX_DIM

# Configure logging
logger = logging.getLogger(__name__)

ArrayLike = Union[np.ndarray, DenseOperator]

def asMatrix(x: ArrayLike) -> np.ndarray:
    """ Return the complex matrix behind a DenseOperator or array """
    if isinstance(x, DenseOperator):
        return x.matrix
    return np.asarray(x, dtype=complex)

def denseOperator(matrix, factor_dims: Optional[Sequence[int]] = None, hermitian: bool = False) -> DenseOperator:
    """
        Validate and wrap a square matrix

        Args:
            matrix: Square array-like
            factor_dims (Sequence[int], optional): Tensor factor dimensions, defaults to (dim,)
            hermitian (bool): Assert max|A - A^dagger| <= 1e-12

        Returns:
            DenseOperator: Immutable wrapper
    """
    m = np.array(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ContractError(f"Operator must be square, got shape {m.shape}")
    dims = tuple(int(d) for d in (factor_dims if factor_dims is not None else (m.shape[0],)))
    if int(np.prod(dims)) != m.shape[0]:
        raise ContractError(f"factor_dims {dims} do not multiply to {m.shape[0]}")
    if hermitian:
        residue = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
        if residue > HERMITIAN_TOL:
            raise ContractError(f"Operator flagged hermitian has residue {residue:.3e}")
    m.setflags(write=False)
    return DenseOperator(matrix=m, factor_dims=dims, hermitian=hermitian)

def stateVector(amplitudes, factor_dims: Optional[Sequence[int]] = None, normalized: bool = True) -> StateVector:
    """ Validate and wrap a pure state """
    v = np.array(amplitudes, dtype=complex).reshape(-1)
    dims = tuple(int(d) for d in (factor_dims if factor_dims is not None else (v.shape[0],)))
    if int(np.prod(dims)) != v.shape[0]:
        raise ContractError(f"factor_dims {dims} do not multiply to {v.shape[0]}")
    if normalized and abs(np.linalg.norm(v) - 1.0) > 1e-12:
        raise ContractError(f"State flagged normalized has norm {np.linalg.norm(v):.15f}")
    v.setflags(write=False)
    return StateVector(amplitudes=v, factor_dims=dims, normalized=normalized)

def kron(a: DenseOperator, b: DenseOperator, maxDim: int = MAX_DIM) -> DenseOperator:
    """
        Kronecker product with row-major block convention

        Args:
            a (DenseOperator): Left factor
            b (DenseOperator): Right factor
            maxDim (int): Largest permitted output dimension

        Returns:
            DenseOperator: a (x) b with concatenated factor_dims
    """
    dim = a.dim * b.dim
    if dim > maxDim:
        raise SizeError(f"kron output dimension {dim} exceeds limit {maxDim}")
    return denseOperator(np.kron(a.matrix, b.matrix), a.factor_dims + b.factor_dims,
                         hermitian=a.hermitian and b.hermitian)

def kronAll(mats: Iterable[np.ndarray]) -> np.ndarray:
    """ Kronecker product of a sequence of plain arrays """
    return reduce(np.kron, mats)

def partialTrace(rho: ArrayLike, keep: Iterable[int], factor_dims: Optional[Sequence[int]] = None) -> np.ndarray:
    """
        Trace out every factor not listed in keep

        Args:
            rho: Operator on the tensor product of factor_dims
            keep (Iterable[int]): Zero-based indices of the factors to keep
            factor_dims (Sequence[int], optional): Needed when rho is a plain array

        Returns:
            np.ndarray: Reduced operator on the kept factors, in their original order
    """
    m = asMatrix(rho)
    dims = tuple(rho.factor_dims) if isinstance(rho, DenseOperator) else tuple(factor_dims or (m.shape[0],))
    keep = sorted(set(keep))
    if not keep:
        raise UsageError("partialTrace needs a nonempty keep set")
    if keep[0] < 0 or keep[-1] >= len(dims):
        raise UsageError(f"keep indices {keep} out of range for {len(dims)} factors")

    n = len(dims)
    t = m.reshape(dims + dims)
    # Trace from the highest index so remaining axis positions stay valid
    for idx in sorted(set(range(n)) - set(keep), reverse=True):
        current = t.ndim // 2
        t = np.trace(t, axis1=idx, axis2=idx + current)
    kept = int(np.prod([dims[i] for i in keep]))
    return t.reshape(kept, kept)

def partialTraceOperator(rho: DenseOperator, keep: Iterable[int]) -> DenseOperator:
    """ partialTrace returning a DenseOperator with the kept factor_dims """
    keep = sorted(set(keep))
    out = partialTrace(rho, keep)
    return denseOperator(out, [rho.factor_dims[i] for i in keep])

def _phaseFix(v: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """ Rotate the global phase so the leading significant entry is real and positive """
    idx = np.flatnonzero(np.abs(v) > tol)
    if idx.size == 0:
        return v
    lead = v[idx[0]]
    return v * (abs(lead) / lead)

def hermEig(a: ArrayLike, tol: float = HERMITIAN_TOL) -> Tuple[np.ndarray, np.ndarray]:
    """
        Spectral decomposition of a Hermitian operator

        Eigenvalues come out non-increasing. Each eigenvector has its leading
        significant entry made real and non-negative, and numerically tied
        eigenvalues are ordered lexicographically on that entry's position and size.

        Args:
            a: Hermitian operator
            tol (float): Hermiticity tolerance relative to max(1, ||a||_max)

        Returns:
            Tuple[np.ndarray, np.ndarray]: (eigenvalues, eigenvectors as columns)
    """
    m = asMatrix(a)
    scale = max(1.0, float(np.max(np.abs(m)))) if m.size else 1.0
    residue = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if residue > tol * scale:
        raise ContractError(f"hermEig needs a Hermitian input, residue {residue:.3e}")

    w, v = np.linalg.eigh((m + m.conj().T) / 2)
    vecs = [_phaseFix(v[:, j]) for j in range(v.shape[1])]

    def sortKey(j):
        vec = vecs[j]
        lead = np.flatnonzero(np.abs(vec) > 1e-10)
        pos = int(lead[0]) if lead.size else vec.shape[0]
        # Eigenvalues are rounded so ties compare equal
        return (-round(float(w[j]), 10), pos, -abs(vec[pos]) if lead.size else 0.0)

    order = sorted(range(len(w)), key=sortKey)
    values = np.array([w[j] for j in order])
    vectors = np.column_stack([vecs[j] for j in order]) if order else v
    return values, vectors

def numericRank(a: ArrayLike, threshold: float = 0.5) -> int:
    """ Count eigenvalues above threshold (projector rank when threshold = 1/2) """
    w, _ = hermEig(a, tol=1e-9)
    return int(np.sum(w > threshold))

def projectorFromVector(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=complex).reshape(-1)
    return np.outer(v, v.conj())

def randomPureState(n: int, rng: np.random.Generator) -> np.ndarray:
    """ Haar-random unit vector in C^n """
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return v / np.linalg.norm(v)

def randomDensity(n: int, rng: np.random.Generator, rank: Optional[int] = None) -> np.ndarray:
    """ Random density matrix of the given rank (full rank by default) """
    rank = n if rank is None else rank
    g = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real

def mixtureOf(vectors: Sequence[np.ndarray], rng: np.random.Generator) -> np.ndarray:
    """ Random convex mixture of the pure states given as vectors """
    weights = rng.random(len(vectors))
    weights = weights / weights.sum()
    return sum(w * projectorFromVector(v) for w, v in zip(weights, vectors))
