""" Class descriptors and the carrier spaces they live on """

# Import necessary libraries
import math
import logging
import numpy as np
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from typing import Any, Dict, Optional, Sequence, Tuple

# Import custom modules
from config.config import ClassSpec
from config.constants import GAUSS_CONSTANT_MAX_D
from utils.errors import ContractError, UsageError
from utils.helpers import parseIntList, resolveClassName
from fock_majorana.fock_algebra import buildFock

# Configure logging
logger = logging.getLogger(__name__)

CLASS_TAGS = ('dist', 'bos', 'ferm', 'gauss', 'schmidt', 'gme')

def classSpec(tag: str, dims: Sequence[int] = (), L: Optional[int] = None, sector: str = '+', n: int = 1) -> ClassSpec:
    """
        Build and validate a ClassSpec

        Args:
            tag (str): dist, bos, ferm, gauss, schmidt or gme
            dims (Sequence[int]): Local dims for dist, (d,) for bos/ferm/gauss/gme, (dA, dB) for schmidt
            L (int, optional): Particle number; defaults to len(dims) for dist
            sector (str): Gaussian parity sector: '+', '-' or 'both'
            n (int): Schmidt-rank bound

        Returns:
            ClassSpec: Validated descriptor
    """
    dims = tuple(int(x) for x in dims)
    if tag == 'dist':
        L = len(dims) if L is None else L
    spec = ClassSpec(tag=tag, dims=dims, L=1 if L is None else int(L), sector=sector, n=int(n))
    validateSpec(spec)
    return spec

def specFromOptions(options: Dict[str, Any]) -> ClassSpec:
    """
        Build a ClassSpec from loosely typed CLI flags or a JSON request body

        Accepts "class" (any alias), "dims" as "2,2" or a list, "d", "L",
        "sector" and "n".
    """
    if not options.get("class"):
        raise UsageError("A class name is required")
    tag = resolveClassName(str(options["class"]))
    dims = options.get("dims")
    if isinstance(dims, str):
        dims = parseIntList(dims)
    elif dims is None and options.get("d") is not None:
        dims = (int(options["d"]),)
    if not dims:
        raise UsageError(f"Class {tag} needs dims or d")
    L = options.get("L")
    return classSpec(tag, tuple(int(x) for x in dims), L=None if L is None else int(L),
                     sector=str(options.get("sector") or '+'), n=int(options.get("n") or 1))

def validateSpec(spec: ClassSpec) -> None:
    """ Raise UsageError for malformed descriptors """
    if spec.tag not in CLASS_TAGS:
        raise UsageError(f"Unknown class tag {spec.tag!r}")
    if not spec.dims or any(x < 1 for x in spec.dims):
        raise UsageError(f"Dimensions must be positive, got {spec.dims}")

    if spec.tag == 'dist':
        if spec.L != len(spec.dims) or spec.L < 1:
            raise UsageError(f"Distinguishable class needs one local dim per particle, got L={spec.L}, dims={spec.dims}")
    elif spec.tag in ('bos', 'ferm'):
        if len(spec.dims) != 1 or spec.L < 1:
            raise UsageError(f"{spec.tag} needs a single-particle dimension d and L >= 1")
        if spec.tag == 'ferm' and spec.L > spec.d:
            raise UsageError(f"Fermionic class needs L <= d, got L={spec.L}, d={spec.d}")
    elif spec.tag == 'gauss':
        # Closed-form paths go up to GAUSS_CONSTANT_MAX_D; buildFock enforces its own mode cap
        if len(spec.dims) != 1 or not 1 <= spec.d <= GAUSS_CONSTANT_MAX_D:
            raise UsageError(f"Gaussian class needs 1 <= d <= {GAUSS_CONSTANT_MAX_D} modes")
        if spec.sector not in ('+', '-', 'both'):
            raise UsageError(f"Gaussian sector must be '+', '-' or 'both', got {spec.sector!r}")
        if spec.sector != 'both' and spec.d < 2:
            raise UsageError("A single mode has one-dimensional parity sectors")
    elif spec.tag == 'schmidt':
        if len(spec.dims) != 2:
            raise UsageError("Schmidt class needs (dA, dB)")
        if not 1 <= spec.n <= min(spec.dims):
            raise UsageError(f"Schmidt bound must satisfy 1 <= n <= min(dA, dB), got n={spec.n}")
    elif spec.tag == 'gme':
        if len(spec.dims) != 1 or spec.d < 2:
            raise UsageError("Two-separable class needs a single local dimension d >= 2")

def carrierDim(spec: ClassSpec) -> int:
    """ Dimension of the single-copy Hilbert space H of the class """
    if spec.tag == 'dist':
        return math.prod(spec.dims)
    if spec.tag == 'bos':
        return math.comb(spec.d + spec.L - 1, spec.L)
    if spec.tag == 'ferm':
        return math.comb(spec.d, spec.L)
    if spec.tag == 'gauss':
        return 2 ** spec.d if spec.sector == 'both' else 2 ** (spec.d - 1)
    if spec.tag == 'schmidt':
        return spec.dims[0] * spec.dims[1]
    return spec.d ** 3

def _tupleIndex(indices: Sequence[int], d: int) -> int:
    # First slot is the most significant digit, matching kron order
    out = 0
    for i in indices:
        out = out * d + i
    return out

@lru_cache(maxsize=None)
def symmetricIsometry(d: int, L: int) -> np.ndarray:
    """
        Isometry Sym^L(C^d) -> (C^d)^L

        Columns follow itertools.combinations_with_replacement(range(d), L); each
        is the normalized sum of the distinct arrangements of its multiset.
    """
    basis = list(combinations_with_replacement(range(d), L))
    W = np.zeros((d ** L, len(basis)), dtype=complex)
    for col, multiset in enumerate(basis):
        arrangements = set(permutations(multiset))
        weight = 1.0 / math.sqrt(len(arrangements))
        for arr in arrangements:
            W[_tupleIndex(arr, d), col] = weight
    W.setflags(write=False)
    return W

@lru_cache(maxsize=None)
def antisymmetricIsometry(d: int, L: int) -> np.ndarray:
    """
        Isometry ∧^L(C^d) -> (C^d)^L

        Columns follow itertools.combinations(range(d), L); column I is
        (1/sqrt(L!)) sum_sigma sgn(sigma) |i_sigma(1) ... i_sigma(L)>.
    """
    if L > d:
        raise UsageError(f"No antisymmetric states of {L} particles in {d} modes")
    basis = list(combinations(range(d), L))
    weight = 1.0 / math.sqrt(math.factorial(L))
    W = np.zeros((d ** L, len(basis)), dtype=complex)
    for col, subset in enumerate(basis):
        for perm in permutations(range(L)):
            inversions = sum(1 for a in range(L) for b in range(a + 1, L) if perm[a] > perm[b])
            W[_tupleIndex([subset[p] for p in perm], d), col] = (-1) ** inversions * weight
    W.setflags(write=False)
    return W

def carrierIsometry(spec: ClassSpec) -> Optional[np.ndarray]:
    """ Embedding of the carrier into its ambient tensor space, None when they coincide """
    if spec.tag == 'bos':
        return symmetricIsometry(spec.d, spec.L)
    if spec.tag == 'ferm':
        return antisymmetricIsometry(spec.d, spec.L)
    if spec.tag == 'gauss' and spec.sector != 'both':
        return buildFock(spec.d).sectorIsometry(spec.sector)
    return None

def ambientDims(spec: ClassSpec) -> Tuple[int, ...]:
    """ Tensor factors of the ambient space of one copy """
    if spec.tag == 'dist':
        return spec.dims
    if spec.tag in ('bos', 'ferm'):
        return (spec.d,) * spec.L
    if spec.tag == 'gauss':
        return (2 ** spec.d,)
    if spec.tag == 'schmidt':
        return spec.dims
    return (spec.d,) * 3

def toCarrier(psi: np.ndarray, spec: ClassSpec, tol: float = 1e-9) -> np.ndarray:
    """
        Express a single-copy vector in carrier coordinates

        Accepts either carrier coordinates or an ambient vector lying in the
        carrier subspace.
    """
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    D = carrierDim(spec)
    if psi.size == D:
        return psi
    W = carrierIsometry(spec)
    if W is None or psi.size != W.shape[0]:
        raise ContractError(f"Vector of length {psi.size} is neither in the carrier (dim {D}) nor its ambient space")
    coords = W.conj().T @ psi
    leak = np.linalg.norm(psi - W @ coords)
    if leak > tol * max(1.0, np.linalg.norm(psi)):
        raise ContractError(f"Vector leaves the carrier subspace (residual {leak:.3e})")
    return coords

def toAmbient(psi: np.ndarray, spec: ClassSpec) -> np.ndarray:
    """ Embed carrier coordinates into the ambient tensor space """
    coords = toCarrier(psi, spec)
    W = carrierIsometry(spec)
    return coords if W is None else W @ coords
