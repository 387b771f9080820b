""" Operators A with <psi^k|A|psi^k> = 0 exactly on a class of non-correlated pure states """

# Import necessary libraries
import math
import logging
import numpy as np
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import List, Tuple

# Import custom modules
from config.config import ClassOperator, ClassSpec
from config.constants import DENSE_LIMIT, RANK_TOL
from utils.errors import SizeError, UsageError
from linalg_core.linear_map import (
    Composite, DenseMap, LinearCombination, LinearMap, MajoranaPolynomial, RestrictedMap,
)
from linalg_core.symmetrizers import (
    blockSymmetrizer, copySlots, particleSlots, productOf, subsetSymmetrizer,
)
from linalg_core.operators import hermEig
from young_combinatorics.young_diagram import alphaCoeff, dimIrrep, rectangle
from fock_majorana.fock_algebra import buildFock
from coherent_classes.carriers import carrierDim, carrierIsometry, validateSpec
from coherent_classes.schmidt import schmidtOperator
from coherent_classes.gme import gmeOperator

# Configure logging
logger = logging.getLogger(__name__)

def symDim(n: int, k: int) -> int:
    """ dim Sym^k(C^n) """
    return math.comb(n + k - 1, k)

def copySymmetrizer(D: int, k: int):
    """ P^{sym,k} on k copies of a D-dimensional carrier """
    return blockSymmetrizer((D,) * k, [[j] for j in range(k)])

def particleCopySymmetrizers(dims: Tuple[int, ...], k: int):
    """ prod_i P^sym over the k copies of particle i, slots laid out copy-major """
    L = len(dims)
    slot_dims = tuple(dims) * k
    return productOf([subsetSymmetrizer(slot_dims, particleSlots(i, L, k)) for i in range(L)])

def _withinCopySymmetrizers(d: int, L: int, k: int, anti: bool):
    slot_dims = (d,) * (L * k)
    return productOf([subsetSymmetrizer(slot_dims, copySlots(j, L), anti=anti) for j in range(k)])

@lru_cache(maxsize=None)
def gaussKernelCoefficient(d: int, m: int) -> int:
    """
        K_m = sum_j (-1)^j C(m, j) C(2d - m, d - j)

        Odd m vanish; even m = 2j reduce to (-1)^j C(d, j) C(2d, d) / C(2d, 2j).
    """
    if m % 2:
        return 0
    j = m // 2
    return (-1) ** j * math.comb(d, j) * math.comb(2 * d, d) // math.comb(2 * d, m)

def gaussP0(d: int) -> MajoranaPolynomial:
    """
        Closed form of the projector onto ker(sum_i c_i (x) c_i) on two Fock copies

        P0 = 4^{-d} sum_{X ⊆ [2d]} K_{|X|} c_X (x) c_X
    """
    alg = buildFock(d)
    norm = 4 ** d
    terms = []
    for size in range(0, 2 * d + 1, 2):
        coef = gaussKernelCoefficient(d, size)
        if coef == 0:
            continue
        for X in combinations(range(1, 2 * d + 1), size):
            terms.append((coef / norm, (X, X)))
    return MajoranaPolynomial(alg, 2, terms)

def gaussianNullOracle(d: int) -> np.ndarray:
    """
        Projector onto ker(Lambda), Lambda = sum_i c_i (x) c_i, from a dense eigensolver

        Args:
            d (int): Number of modes, at most 4

        Returns:
            np.ndarray: 4^d x 4^d projector
    """
    if d > 4:
        raise SizeError(f"Dense null-space oracle limited to d <= 4, got {d}")
    alg = buildFock(d)
    lam = sum(np.kron(c, c) for c in alg.majoranas)
    values, vectors = np.linalg.eigh((lam + lam.conj().T) / 2)
    null = vectors[:, np.abs(values) < 1e-8]
    logger.debug(f"ker(Lambda) has dimension {null.shape[1]} for d={d}")
    return null @ null.conj().T

def _distOperator(spec: ClassSpec, k: int) -> Tuple[LinearMap, LinearMap, Fraction]:
    D = carrierDim(spec)
    slot_dims = tuple(spec.dims) * k
    sym = blockSymmetrizer(slot_dims, [copySlots(j, spec.L) for j in range(k)])
    proj = particleCopySymmetrizers(spec.dims, k)
    trace = Fraction(symDim(D, k) - math.prod(symDim(d, k) for d in spec.dims))
    return LinearCombination([(1, sym), (-1, proj)]), proj, trace

def _bosOperator(spec: ClassSpec, k: int) -> Tuple[LinearMap, LinearMap, Fraction]:
    D = carrierDim(spec)
    W = carrierIsometry(spec)
    inner = particleCopySymmetrizers((spec.d,) * spec.L, k)
    restricted = RestrictedMap(W, k, inner)
    # tr(W^dag C W) = tr(C (W W^dag)^k) with W W^dag the within-copy symmetrizer
    within = _withinCopySymmetrizers(spec.d, spec.L, k, anti=False)
    trace = symDim(D, k) - inner.compose(within).exactTrace()
    return LinearCombination([(1, copySymmetrizer(D, k)), (-1, restricted)]), restricted, Fraction(trace)

def _fermOperator(spec: ClassSpec, k: int) -> Tuple[LinearMap, LinearMap, Fraction]:
    D = carrierDim(spec)
    W = carrierIsometry(spec)
    alpha = alphaCoeff(rectangle(spec.L, k))
    inner = particleCopySymmetrizers((spec.d,) * spec.L, k)
    proj = LinearCombination([(float(alpha), RestrictedMap(W, k, inner))])
    trace = Fraction(symDim(D, k) - dimIrrep(rectangle(spec.L, k), spec.d))
    return LinearCombination([(1, copySymmetrizer(D, k)), (-1, proj)]), proj, trace

def _gaussOperator(spec: ClassSpec, k: int):
    if k != 2:
        raise UsageError("The Gaussian class is characterized on two copies only")
    D = carrierDim(spec)
    sym = copySymmetrizer(D, 2)
    p0 = gaussP0(spec.d)
    W = carrierIsometry(spec)
    if W is None:
        proj = Composite([sym, p0])
        return LinearCombination([(1, sym), (-1, proj)]), proj, None
    proj = Composite([sym, RestrictedMap(W, 2, p0)])
    trace = Fraction(symDim(D, 2)) - Fraction(math.comb(2 * spec.d, spec.d), 2)
    return LinearCombination([(1, sym), (-1, proj)]), proj, trace

_BUILDERS = {
    'dist': _distOperator,
    'bos': _bosOperator,
    'ferm': _fermOperator,
    'gauss': _gaussOperator,
}

def classOperatorK(spec: ClassSpec, k: int) -> ClassOperator:
    """
        A = P^{sym,k} - P^{k lambda_0} on k copies of the carrier

        Args:
            spec (ClassSpec): dist, bos, ferm or gauss class
            k (int): Number of copies (k = 2 only for gauss)

        Returns:
            ClassOperator: Matrix-free A with its exact trace when known
    """
    validateSpec(spec)
    if k < 2:
        raise UsageError(f"Class operators need k >= 2 copies, got {k}")
    if spec.tag == 'schmidt':
        if k != spec.n + 1:
            raise UsageError(f"Schmidt bound n={spec.n} is characterized on k = n + 1 = {spec.n + 1} copies")
        return schmidtOperator(spec.n, *spec.dims)
    if spec.tag == 'gme':
        if k != 6:
            raise UsageError("Genuine multipartite entanglement is characterized on k = 6 copies")
        return gmeOperator(spec.d)

    A, _, trace = _BUILDERS[spec.tag](spec, k)
    logger.debug(f"Built {spec.tag} class operator on {k} copies (carrier dim {carrierDim(spec)})")
    return ClassOperator(spec=spec, k=k, A=A, carrier_dim=carrierDim(spec), traceA=trace)

def classOperator2(spec: ClassSpec) -> ClassOperator:
    """ Two-copy characterization """
    return classOperatorK(spec, 2)

def classProjector(spec: ClassSpec, k: int = 2) -> LinearMap:
    """
        Projector P^{k lambda_0} onto the irreducible component spanned by |psi^k>, psi in the class

        For bosons this is the full symmetrizer over all kL single-particle slots
        restricted to the carrier; the other classes reuse the operator builders.
    """
    validateSpec(spec)
    if spec.tag == 'bos':
        slot_dims = (spec.d,) * (spec.L * k)
        full = subsetSymmetrizer(slot_dims, range(spec.L * k))
        return RestrictedMap(carrierIsometry(spec), k, full)
    if spec.tag not in _BUILDERS:
        raise UsageError(f"No irreducible-component projector for class {spec.tag!r}")
    _, proj, _ = _BUILDERS[spec.tag](spec, k)
    return proj

def projectorRank(spec: ClassSpec, k: int = 2) -> int:
    """ dim of the component spanned by the class, from young combinatorics """
    if spec.tag == 'dist':
        return math.prod(symDim(d, k) for d in spec.dims)
    if spec.tag == 'bos':
        return symDim(spec.d, spec.L * k)
    if spec.tag == 'ferm':
        return dimIrrep(rectangle(spec.L, k), spec.d)
    if spec.tag == 'gauss' and spec.sector != 'both' and k == 2:
        return math.comb(2 * spec.d, spec.d) // 2
    raise UsageError(f"No closed-form projector rank for {spec.tag!r} with k={k}")

def operatorSpectrum(op: ClassOperator, denseLimit: int = DENSE_LIMIT) -> np.ndarray:
    """ Eigenvalues of A, non-increasing; needs a dense-sized operator """
    if op.A.dim > denseLimit:
        raise SizeError(f"Operator of dim {op.A.dim} exceeds dense limit {denseLimit}")
    dense = op.A.toDense(denseLimit)
    values, _ = hermEig((dense + dense.conj().T) / 2)
    return values

def computeRank(op: ClassOperator, denseLimit: int = DENSE_LIMIT) -> int:
    """ Fill in op.rankA by counting eigenvalues above RANK_TOL """
    if op.rankA is None:
        op.rankA = int(np.sum(operatorSpectrum(op, denseLimit) > RANK_TOL))
    return op.rankA

def denseClassOperator(op: ClassOperator, denseLimit: int = DENSE_LIMIT) -> DenseMap:
    """ Materialize A once so repeated evaluations skip the permutation sums """
    return DenseMap(op.A.toDense(denseLimit), op.A.factor_dims)

def specSummary(spec: ClassSpec) -> List[str]:
    """ Human-readable description lines for the CLI """
    lines = [f"class: {spec.tag}", f"dims: {','.join(str(x) for x in spec.dims)}"]
    if spec.tag in ('bos', 'ferm'):
        lines.append(f"L: {spec.L}")
    if spec.tag == 'gauss':
        lines.append(f"sector: {spec.sector}")
    if spec.tag == 'schmidt':
        lines.append(f"n: {spec.n}")
    lines.append(f"carrier dim: {carrierDim(spec)}")
    return lines
