""" Group-invariant two-copy witness cones: commutant bases, inequalities and extreme rays """

# Import necessary libraries
import math
import logging
import numpy as np
import sympy as sp
from sympy.polys.matrices import DomainMatrix
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Tuple

# Import custom modules
from config.config import ClassSpec, ConeElement
from config.constants import DENSE_LIMIT
from utils.errors import SizeError, UsageError
from linalg_core.linear_map import LinearCombination, LinearMap, MajoranaPolynomial, RestrictedMap
from linalg_core.operators import partialTrace, hermEig
from linalg_core.symmetrizers import swapMap
from fock_majorana.fock_algebra import buildFock
from coherent_classes.carriers import carrierDim, carrierIsometry, validateSpec

# Configure logging
logger = logging.getLogger(__name__)

def subsetsOf(L: int) -> List[Tuple[int, ...]]:
    """ All subsets of range(L), by size then lexicographically """
    return [X for size in range(L + 1) for X in combinations(range(L), size)]

def coneLabels(spec: ClassSpec) -> List:
    """ Coordinates of the cone: subsets X for dist, k = 0..L for bos/ferm, k = 0..floor(d/2) for gauss """
    if spec.tag == 'dist':
        return subsetsOf(spec.L)
    if spec.tag in ('bos', 'ferm'):
        return list(range(spec.L + 1))
    if spec.tag == 'gauss':
        return list(range(spec.d // 2 + 1))
    raise UsageError(f"No invariant cone for class {spec.tag!r}")

def _checkConeSpec(spec: ClassSpec) -> None:
    validateSpec(spec)
    if spec.tag == 'ferm' and 2 * spec.L > spec.d:
        raise UsageError(f"Fermionic cone needs 2L <= d, got L={spec.L}, d={spec.d}")
    if spec.tag == 'gauss' and spec.sector != '+':
        raise UsageError("The Gaussian cone is built on the even sector")
    coneLabels(spec)

def gaussConeCoefficient(d: int, n: int, k: int) -> int:
    """ b_k^n = (-1)^k sum_m (-1)^m C(2n, m) C(d - 2n, k - m) """
    return (-1) ** k * sum((-1) ** m * math.comb(2 * n, m) * math.comb(d - 2 * n, k - m) for m in range(k + 1))

def coneInequalities(spec: ClassSpec) -> List[List[Fraction]]:
    """
        Rows M such that a coefficient vector a spans a cone witness iff M a <= 0

        Args:
            spec (ClassSpec): dist, bos, ferm (2L <= d) or gauss ('+') class

        Returns:
            List[List[Fraction]]: Square exact matrix, one row per inequality
    """
    _checkConeSpec(spec)
    labels = coneLabels(spec)
    if spec.tag == 'dist':
        return [[Fraction(1 if set(X) <= set(Y) else 0) for X in labels] for Y in labels]
    if spec.tag == 'bos':
        return [[Fraction(math.comb(m, k), math.comb(spec.L, k)) for k in labels] for m in labels]
    if spec.tag == 'ferm':
        return [[Fraction(math.comb(m, k), math.comb(spec.L, k) ** 2) for k in labels] for m in labels]
    return [[Fraction(gaussConeCoefficient(spec.d, n, k)) for k in labels] for n in labels]

def inequalityValues(spec: ClassSpec, coefficients: Sequence[Fraction]) -> List[Fraction]:
    """ M a in exact arithmetic """
    M = coneInequalities(spec)
    if len(coefficients) != len(M):
        raise UsageError(f"Expected {len(M)} coefficients, got {len(coefficients)}")
    return [sum((m * Fraction(a) for m, a in zip(row, coefficients)), Fraction(0)) for row in M]

def coneMembership(element: ConeElement) -> bool:
    """ True when every inequality holds exactly """
    return all(v <= 0 for v in inequalityValues(element.spec, element.coefficients))

def inclusionExclusion(b: Sequence[Fraction], L: int) -> List[Fraction]:
    """ Invert b_Y = sum_{X ⊆ Y} a_X via a_X = sum_{Y ⊆ X} (-1)^{|X|+|Y|} b_Y """
    labels = subsetsOf(L)
    index = {Y: j for j, Y in enumerate(labels)}
    out = []
    for X in labels:
        total = Fraction(0)
        for size in range(len(X) + 1):
            for Y in combinations(X, size):
                total += (-1) ** (len(X) + size) * Fraction(b[index[Y]])
        out.append(total)
    return out

def _toFraction(x) -> Fraction:
    r = sp.Rational(x)
    return Fraction(int(r.p), int(r.q))

def extremeRays(spec: ClassSpec) -> List[ConeElement]:
    """
        Generators of the cone, one per inequality, each with M r = -e_n

        Rays are the columns of -M^{-1}, inverted exactly. Closed forms exist for
        the particle classes and are used as test oracles.
    """
    M = coneInequalities(spec)
    labels = coneLabels(spec)
    inverse = sp.Matrix([[sp.Rational(q.numerator, q.denominator) for q in row] for row in M]).inv()
    rays = []
    for n in range(len(labels)):
        coeffs = tuple(_toFraction(-inverse[j, n]) for j in range(len(labels)))
        rays.append(ConeElement(spec=spec, coefficients=coeffs, labels=tuple(labels)))
    logger.debug(f"Computed {len(rays)} extreme rays for {spec.tag}")
    return rays

def closedFormRay(spec: ClassSpec, label) -> Tuple[Fraction, ...]:
    """ Closed-form ray coefficients for the particle classes """
    labels = coneLabels(spec)
    if spec.tag == 'dist':
        Y = set(label)
        return tuple(Fraction(-(-1) ** (len(X) - len(Y))) if Y <= set(X) else Fraction(0) for X in labels)
    if spec.tag in ('bos', 'ferm'):
        m = label
        power = 1 if spec.tag == 'bos' else 2
        return tuple(Fraction(-(-1) ** (k - m) * math.comb(spec.L, k) ** power * math.comb(k, m)) for k in labels)
    raise UsageError(f"No closed-form rays for class {spec.tag!r}")

def invariantBasis(spec: ClassSpec) -> List[LinearMap]:
    """
        Commutant basis on two copies of the carrier

        dist: S^X swapping the particles in X between the copies; bos/ferm: the
        restriction of S^X with |X| = k to the carrier; gauss: C_k =
        sum_{|X| = 2k} c_X (x) c_X on the even sector.
    """
    _checkConeSpec(spec)
    labels = coneLabels(spec)
    if spec.tag == 'dist':
        L = spec.L
        slot_dims = tuple(spec.dims) * 2
        return [swapMap(slot_dims, list(X), [L + i for i in X]) for X in labels]
    if spec.tag in ('bos', 'ferm'):
        return [restrictedSwap(spec, range(k)) for k in labels]
    alg = buildFock(spec.d)
    W = carrierIsometry(spec)
    basis = []
    for k in labels:
        terms = [(1.0, (X, X)) for X in combinations(range(1, 2 * spec.d + 1), 2 * k)]
        basis.append(RestrictedMap(W, 2, MajoranaPolynomial(alg, 2, terms)))
    return basis

def restrictedSwap(spec: ClassSpec, X: Sequence[int]) -> RestrictedMap:
    """ S^X swapping the particles in X between two copies, compressed to the (anti)symmetric carrier """
    if spec.tag not in ('bos', 'ferm'):
        raise UsageError(f"Swap restriction is defined for bos and ferm, got {spec.tag!r}")
    L = spec.L
    slot_dims = (spec.d,) * (2 * L)
    return RestrictedMap(carrierIsometry(spec), 2, swapMap(slot_dims, list(X), [L + i for i in X]))

def restrictionResidual(spec: ClassSpec) -> float:
    """
        Largest Frobenius deviation of P S^Y P from V_m / C(L, m), |Y| = m

        V_m sums P S^Y P over all subsets of size m, so a zero residual means the
        compression depends on |Y| alone.
    """
    validateSpec(spec)
    L = spec.L
    worst = 0.0
    for m in range(L + 1):
        blocks = [restrictedSwap(spec, Y).toDense() for Y in combinations(range(L), m)]
        mean = sum(blocks) / math.comb(L, m)
        worst = max(worst, max(float(np.linalg.norm(b - mean)) for b in blocks))
    return worst

def gaussConeDeterminant(d: int) -> int:
    """ Exact determinant of the Gaussian inequality matrix b_k^n """
    size = d // 2 + 1
    rows = [[sp.ZZ(gaussConeCoefficient(d, n, k)) for k in range(size)] for n in range(size)]
    return int(DomainMatrix(rows, (size, size), sp.ZZ).det())

def coneOperator(element: ConeElement) -> LinearMap:
    """ sum_j a_j B_j as a matrix-free map """
    basis = invariantBasis(element.spec)
    return LinearCombination([(float(a), b) for a, b in zip(element.coefficients, basis)])

def rayOperator(element: ConeElement, denseLimit: int = DENSE_LIMIT) -> np.ndarray:
    """ Dense two-copy matrix of a cone element """
    D = carrierDim(element.spec)
    if D * D > denseLimit:
        raise SizeError(f"Two-copy dim {D * D} exceeds dense limit {denseLimit}")
    return coneOperator(element).toDense(denseLimit)

def optimalDetect(rho, spec: ClassSpec, rays: Sequence[np.ndarray] = None) -> float:
    """
        max over extreme rays V of lambda_max(tr_1((rho (x) I) V))

        Args:
            rho: Density matrix on the carrier
            spec (ClassSpec): Class with an invariant cone
            rays (Sequence[np.ndarray], optional): Precomputed dense ray operators

        Returns:
            float: Positive exactly when some cone witness detects rho
    """
    rho = np.asarray(getattr(rho, "matrix", rho), dtype=complex)
    D = carrierDim(spec)
    if rho.shape != (D, D):
        raise UsageError(f"State of shape {rho.shape} does not live on the carrier of dim {D}")
    if rays is None:
        rays = [rayOperator(r) for r in extremeRays(spec)]
    best = -np.inf
    lifted = np.kron(rho, np.eye(D))
    for V in rays:
        reduced = partialTrace(lifted @ V, [1], (D, D))
        values, _ = hermEig((reduced + reduced.conj().T) / 2)
        best = max(best, float(values[0]))
    return best
