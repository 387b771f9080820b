""" Apply-to-vector operators for spaces too large to materialize """

# Import necessary libraries
import logging
import numpy as np
from itertools import product
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

# Import custom modules
from utils.errors import ContractError, SizeError
from config.constants import DENSE_LIMIT

# Configure logging
logger = logging.getLogger(__name__)

def _asBatch(v: np.ndarray, dim: int) -> Tuple[np.ndarray, bool]:
    """ Return v as (dim, batch) and whether it was a single vector """
    arr = np.asarray(v, dtype=complex)
    if arr.ndim == 1:
        if arr.shape[0] != dim:
            raise ContractError(f"Vector of length {arr.shape[0]} applied to map of dim {dim}")
        return arr.reshape(dim, 1), True
    if arr.shape[0] != dim:
        raise ContractError(f"Batch of shape {arr.shape} applied to map of dim {dim}")
    return arr, False

class LinearMap:
    """ Base class: a linear operator on C^dim given by its action on vectors """

    kind = "abstract"

    def __init__(self, factor_dims: Sequence[int]):
        self.factor_dims = tuple(int(d) for d in factor_dims)
        self.dim = int(np.prod(self.factor_dims))

    def _applyBatch(self, v: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def apply(self, v: np.ndarray) -> np.ndarray:
        """ Apply the map to a vector (dim,) or a batch of column vectors (dim, b) """
        batch, single = _asBatch(v, self.dim)
        out = self._applyBatch(batch)
        return out[:, 0] if single else out

    def adjoint(self) -> "LinearMap":
        raise NotImplementedError

    def expectation(self, v: np.ndarray) -> complex:
        """ <v|M|v> """
        v = np.asarray(v, dtype=complex).reshape(-1)
        return complex(np.vdot(v, self.apply(v)))

    def toDense(self, denseLimit: Optional[int] = None, chunk: int = 256) -> np.ndarray:
        """
            Materialize the map as a matrix

            Args:
                denseLimit (int, optional): Largest dim allowed, default DENSE_LIMIT
                chunk (int): Number of basis columns applied per batch

            Returns:
                np.ndarray: (dim, dim) complex matrix
        """
        limit = DENSE_LIMIT if denseLimit is None else denseLimit
        if self.dim > limit:
            raise SizeError(f"Dense materialization of dim {self.dim} exceeds limit {limit}")
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for start in range(0, self.dim, chunk):
            stop = min(self.dim, start + chunk)
            basis = np.zeros((self.dim, stop - start), dtype=complex)
            basis[np.arange(start, stop), np.arange(stop - start)] = 1.0
            out[:, start:stop] = self._applyBatch(basis)
        return out

    def trace(self) -> complex:
        """ Trace through dense materialization; subclasses override when cheaper """
        return complex(np.trace(self.toDense()))

    # Algebra
    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearCombination([(1.0, self), (1.0, other)])

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearCombination([(1.0, self), (-1.0, other)])

    def __rmul__(self, scalar) -> "LinearMap":
        return LinearCombination([(scalar, self)])

    def __neg__(self) -> "LinearMap":
        return LinearCombination([(-1.0, self)])

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return Composite([self, other])

class DenseMap(LinearMap):
    """ Map backed by an explicit matrix """

    kind = "Dense"

    def __init__(self, matrix: np.ndarray, factor_dims: Optional[Sequence[int]] = None):
        m = np.asarray(matrix, dtype=complex)
        super().__init__(factor_dims if factor_dims is not None else (m.shape[0],))
        if m.shape != (self.dim, self.dim):
            raise ContractError(f"Matrix shape {m.shape} does not match factor_dims {self.factor_dims}")
        self.matrix = m

    def _applyBatch(self, v):
        return self.matrix @ v

    def adjoint(self):
        return DenseMap(self.matrix.conj().T, self.factor_dims)

    def toDense(self, denseLimit=None, chunk=256):
        return self.matrix.copy()

    def trace(self):
        return complex(np.trace(self.matrix))

def composePermutations(p: Sequence[int], q: Sequence[int]) -> Tuple[int, ...]:
    """ Slot permutation of the operator product O_p O_q """
    return tuple(q[j] for j in p)

def invertPermutation(p: Sequence[int]) -> Tuple[int, ...]:
    inv = [0] * len(p)
    for j, pj in enumerate(p):
        inv[pj] = j
    return tuple(inv)

def permutationCycles(p: Sequence[int]) -> List[List[int]]:
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cycle, j = [], start
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = p[j]
        cycles.append(cycle)
    return cycles

class SignedPermutationAverage(LinearMap):
    """
        Weighted sum of tensor-slot permutation operators

        Each term is (coefficient, permutation); the permutation p acts on basis
        vectors as O_p |x_0 ... x_{n-1}> = |x_{p[0]} ... x_{p[n-1]}>. An overall scale
        multiplies every term.
    """

    kind = "SignedPermutationAverage"

    def __init__(self, factor_dims: Sequence[int], terms: Sequence[Tuple[complex, Sequence[int]]], scale: Union[int, Fraction, complex] = 1):
        super().__init__(factor_dims)
        n = len(self.factor_dims)
        merged = {}
        for coef, perm in terms:
            perm = tuple(int(j) for j in perm)
            if sorted(perm) != list(range(n)):
                raise ContractError(f"{perm} is not a permutation of {n} slots")
            if any(self.factor_dims[perm[j]] != self.factor_dims[j] for j in range(n)):
                raise ContractError(f"Permutation {perm} mixes slots of different dimension {self.factor_dims}")
            merged[perm] = merged.get(perm, 0) + coef
        self.terms = [(c, p) for p, c in merged.items() if c != 0]
        self.scale = scale

    def _applyBatch(self, v):
        n = len(self.factor_dims)
        batch = v.shape[1]
        t = v.reshape(self.factor_dims + (batch,))
        out = np.zeros_like(t)
        for coef, perm in self.terms:
            out += coef * np.transpose(t, tuple(perm) + (n,))
        return (complex(self.scale) * out).reshape(self.dim, batch)

    def adjoint(self):
        terms = [(c.conjugate(), invertPermutation(p)) for c, p in self.terms]
        return SignedPermutationAverage(self.factor_dims, terms, self.scale.conjugate())

    def compose(self, other: "SignedPermutationAverage") -> "SignedPermutationAverage":
        """ Exact product self∘other as a single permutation sum """
        if other.factor_dims != self.factor_dims:
            raise ContractError("Composed permutation maps act on different slot layouts")
        terms = [(c1 * c2, composePermutations(p1, p2))
                 for (c1, p1), (c2, p2) in product(self.terms, other.terms)]
        return SignedPermutationAverage(self.factor_dims, terms, self.scale * other.scale)

    def _cycleSum(self):
        total = 0
        for coef, perm in self.terms:
            value = 1
            for cycle in permutationCycles(perm):
                value *= self.factor_dims[cycle[0]]
            total += coef * value
        return total

    def trace(self):
        return complex(self.scale) * complex(self._cycleSum())

    def exactTrace(self) -> Fraction:
        """ Trace as a rational; needs integer coefficients and a rational scale """
        if not all(isinstance(c, int) for c, _ in self.terms) or isinstance(self.scale, (float, complex)):
            raise ContractError("Exact trace needs integer coefficients and a rational scale")
        return Fraction(self.scale) * self._cycleSum()

class MajoranaPolynomial(LinearMap):
    """
        Sum of tensor products of Majorana monomials, one monomial per copy

        Each term is (coefficient, (X_1, ..., X_k)) with X_j an ascending index
        tuple into the algebra's Majorana list; the term acts as
        c_{X_1} (x) ... (x) c_{X_k}.
    """

    kind = "MajoranaPolynomial"

    def __init__(self, algebra, copies: int, terms: Sequence[Tuple[complex, Sequence[Sequence[int]]]]):
        super().__init__((algebra.dim,) * copies)
        self.algebra = algebra
        self.copies = copies
        self.terms = [(complex(c), tuple(tuple(x) for x in monos)) for c, monos in terms]

    def _applyBatch(self, v):
        batch = v.shape[1]
        D = self.algebra.dim
        t = v.reshape((D,) * self.copies + (batch,))
        out = np.zeros_like(t)
        for coef, monos in self.terms:
            term = t
            for axis, mono in enumerate(monos):
                mat = self.algebra.monomial(mono)
                term = np.moveaxis(np.tensordot(mat, term, axes=([1], [axis])), 0, axis)
            out += coef * term
        return out.reshape(self.dim, batch)

    def adjoint(self):
        terms = []
        for coef, monos in self.terms:
            # Reversing a product of m distinct Majoranas costs the sign (-1)^{m(m-1)/2}
            sign = 1
            for mono in monos:
                m = len(mono)
                sign *= (-1) ** (m * (m - 1) // 2)
            terms.append((np.conj(coef) * sign, monos))
        return MajoranaPolynomial(self.algebra, self.copies, terms)

class Composite(LinearMap):
    """ Product M_1 ∘ M_2 ∘ ... ∘ M_r (the last map acts first) """

    kind = "Composite"

    def __init__(self, maps: Sequence[LinearMap]):
        if not maps:
            raise ContractError("Composite needs at least one map")
        super().__init__(maps[0].factor_dims)
        for m in maps:
            if m.dim != self.dim:
                raise ContractError("Composite factors act on different dimensions")
        self.maps = list(maps)

    def _applyBatch(self, v):
        out = v
        for m in reversed(self.maps):
            out = m._applyBatch(out)
        return out

    def adjoint(self):
        return Composite([m.adjoint() for m in reversed(self.maps)])

class LinearCombination(LinearMap):
    """ Finite linear combination sum_j a_j M_j """

    kind = "Composite"

    def __init__(self, terms: Sequence[Tuple[complex, LinearMap]]):
        if not terms:
            raise ContractError("LinearCombination needs at least one term")
        super().__init__(terms[0][1].factor_dims)
        for _, m in terms:
            if m.dim != self.dim:
                raise ContractError("LinearCombination terms act on different dimensions")
        self.terms = [(complex(c), m) for c, m in terms]

    def _applyBatch(self, v):
        out = np.zeros_like(v)
        for coef, m in self.terms:
            out += coef * m._applyBatch(v)
        return out

    def adjoint(self):
        return LinearCombination([(np.conj(c), m.adjoint()) for c, m in self.terms])

    def trace(self):
        return complex(sum(c * m.trace() for c, m in self.terms))

class RestrictedMap(LinearMap):
    """
        W^dagger(x)k ∘ inner ∘ W(x)k for an isometry W from a carrier space into
        an embedding space, one W per copy.
    """

    kind = "Composite"

    def __init__(self, isometry: np.ndarray, copies: int, inner: LinearMap, chunk: int = 64):
        W = np.asarray(isometry, dtype=complex)
        super().__init__((W.shape[1],) * copies)
        if inner.dim != W.shape[0] ** copies:
            raise ContractError("Inner map does not act on the embedded copies")
        self.W = W
        self.copies = copies
        self.inner = inner
        self.chunk = chunk

    def _perCopy(self, v, mat):
        batch = v.shape[1]
        din = mat.shape[1]
        t = v.reshape((din,) * self.copies + (batch,))
        for axis in range(self.copies):
            t = np.moveaxis(np.tensordot(mat, t, axes=([1], [axis])), 0, axis)
        return t.reshape(mat.shape[0] ** self.copies, batch)

    def _applyBatch(self, v):
        out = np.zeros_like(v)
        for start in range(0, v.shape[1], self.chunk):
            block = v[:, start:start + self.chunk]
            embedded = self._perCopy(block, self.W)
            acted = self.inner._applyBatch(embedded)
            out[:, start:start + self.chunk] = self._perCopy(acted, self.W.conj().T)
        return out

    def adjoint(self):
        return RestrictedMap(self.W, self.copies, self.inner.adjoint(), self.chunk)

class IdentityMap(LinearMap):
    """ Identity on the given factor layout """

    kind = "Dense"

    def _applyBatch(self, v):
        return v.copy()

    def adjoint(self):
        return self

    def trace(self):
        return complex(self.dim)
