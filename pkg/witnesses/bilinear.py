""" Bilinear witnesses V = A - c P^asym, their optimal constants and two-copy detection """

# Import necessary libraries
import math
import logging
import numpy as np
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

# Import custom modules
from config.config import ClassSpec, Witness
from config.constants import DENSE_LIMIT, GAUSS_CONSTANT_MAX_D
from utils.errors import ContractError, UsageError
from utils.helpers import formatRational
from linalg_core.linear_map import DenseMap, LinearCombination
from linalg_core.symmetrizers import blockSymmetrizer
from coherent_classes.carriers import carrierDim, validateSpec
from coherent_classes.class_operators import classOperator2, gaussKernelCoefficient, symDim
from witnesses.multilinear import detectK

# Configure logging
logger = logging.getLogger(__name__)

def krawtchoukRow(s: int, d: int) -> List[int]:
    """ Coefficients of (1 - x)^s (1 + x)^(d - s), by the three-term recurrence """
    row = [1, d - 2 * s]
    for m in range(1, d):
        row.append(((d - 2 * s) * row[m] - (d - m + 1) * row[m - 1]) // (m + 1))
    return row[:d + 1]

@lru_cache(maxsize=None)
def gaussDiagonalOverlap(d: int, s: int) -> Fraction:
    """
        <0, I|P0|0, I> for a Fock basis state I with s occupied modes

        Only pair monomials c_{2j-1}c_{2j} survive the vacuum expectation, giving
        4^{-d} sum_m (-1)^m K_{2m} [x^m](1 - x)^s (1 + x)^(d - s).
    """
    if not 0 <= s <= d:
        raise UsageError(f"Occupation {s} outside 0..{d}")
    row = krawtchoukRow(s, d)
    total = sum((-1) ** m * gaussKernelCoefficient(d, 2 * m) * row[m] for m in range(d + 1))
    return Fraction(total, 4 ** d)

@lru_cache(maxsize=None)
def gaussConstant(d: int) -> Fraction:
    """
        c_d = 2 max_{v ⊥ |0>} <0 v|A|0 v> on the even sector, as an exact rational

        The maximum is attained on Fock basis vectors (the mode-phase symmetry
        makes the relevant block diagonal), where <0I|P^sym|0I> = 1/2.
    """
    if not 2 <= d <= GAUSS_CONSTANT_MAX_D:
        raise UsageError(f"Gaussian constant is served for 2 <= d <= {GAUSS_CONSTANT_MAX_D}, got {d}")
    worst = min(gaussDiagonalOverlap(d, s) for s in range(2, d + 1, 2))
    return 1 - 2 * worst

def printedGaussConstant(d: int) -> Fraction:
    """ 1 - a_d with the closed double sum as printed in the source derivation """
    h = d // 2
    inner = Fraction(0)
    for k in range(d + 1):
        for m in range(min(k, 2 * h) + 1):
            inner += Fraction((-2) ** m * math.comb(d, k) * math.comb(d - m, k - m) * math.comb(h, m),
                              math.comb(2 * d, 2 * k))
    a = Fraction(math.comb(2 * d, d), 4 ** d) * inner
    return 1 - a

def bilinearConstant(spec: ClassSpec) -> Fraction:
    """
        Smallest c making A - c P^asym a sound witness

        Args:
            spec (ClassSpec): dist, bos, ferm or gauss ('+' or '-') class

        Returns:
            Fraction: Exact constant
    """
    if spec.tag != 'gauss':
        validateSpec(spec)
    if spec.tag in ('dist', 'bos'):
        return 1 - Fraction(2, 2 ** spec.L)
    if spec.tag == 'ferm':
        return 1 - Fraction(2, spec.L + 1 - max(0, 2 * spec.L - spec.d))
    if spec.tag == 'gauss':
        if spec.sector == 'both':
            raise UsageError("Gaussian witnesses are defined per parity sector; pick '+' or '-'")
        return gaussConstant(spec.d)
    raise UsageError(f"No bilinear witness for class {spec.tag!r}; use the multilinear construction")

def bilinearWitness(spec: ClassSpec) -> Witness:
    """
        V = A - c P^asym on two copies of the carrier

        Args:
            spec (ClassSpec): Class descriptor

        Returns:
            Witness: Matrix-free V with exact c, alpha = X and beta = -c
    """
    c = bilinearConstant(spec)
    op = classOperator2(spec)
    anti = blockSymmetrizer(op.A.factor_dims, _copyBlocks(op.A.factor_dims, 2), anti=True)
    V = LinearCombination([(1, op.A), (-float(c), anti)])
    alpha = None
    if op.traceA is not None:
        alpha = Fraction(op.traceA) / symDim(carrierDim(spec), 2)
    logger.debug(f"Bilinear witness for {spec.tag}: c = {c}")
    return Witness(spec=spec, k=2, V=V, constant_c=c, alpha=alpha, beta=-c)

def _copyBlocks(factor_dims: Tuple[int, ...], k: int):
    width = len(factor_dims) // k
    if width * k != len(factor_dims):
        raise ContractError(f"Slot layout {factor_dims} does not split into {k} copies")
    return [list(range(j * width, (j + 1) * width)) for j in range(k)]

def densify(w: Witness, denseLimit: int = DENSE_LIMIT) -> Witness:
    """ Same witness with V materialized, for repeated evaluation """
    if isinstance(w.V, DenseMap):
        return w
    V = DenseMap(w.V.toDense(denseLimit), w.V.factor_dims)
    return Witness(spec=w.spec, k=w.k, V=V, constant_c=w.constant_c, alpha=w.alpha, beta=w.beta)

def _asDensity(rho) -> np.ndarray:
    m = np.asarray(getattr(rho, "matrix", rho), dtype=complex)
    if m.ndim == 1:
        m = np.outer(m, m.conj())
    return m

def detect2(w: Witness, rho1, rho2) -> float:
    """
        tr((rho1 (x) rho2) V)

        Args:
            w (Witness): Two-copy witness
            rho1: Density matrix, DenseOperator or pure-state vector
            rho2: Same, on the same carrier

        Returns:
            float: Detection value; > DETECTION_THRESHOLD means both states are correlated
    """
    if w.k != 2:
        raise UsageError(f"detect2 needs a two-copy witness, got k={w.k}")
    a, b = _asDensity(rho1), _asDensity(rho2)
    D = int(round(math.sqrt(w.V.dim)))
    if a.shape != (D, D) or b.shape != (D, D):
        raise ContractError(f"States of shapes {a.shape}, {b.shape} do not match carrier dim {D}")
    if isinstance(w.V, DenseMap):
        T = w.V.matrix.reshape(D, D, D, D)
        value = np.einsum('ac,bd,cdab->', a, b, T)
        return float(np.real(value))
    return detectK(w, [a, b])

def witnessSummary(w: Witness) -> Dict[str, object]:
    """ JSON-ready description; constants as "num/den" strings """
    out = {"class": w.spec.tag, "dims": list(w.spec.dims), "k": w.k}
    if w.spec.tag in ('bos', 'ferm'):
        out["L"] = w.spec.L
    if w.spec.tag == 'gauss':
        out["sector"] = w.spec.sector
    if w.constant_c is not None:
        out["c"] = formatRational(w.constant_c)
    if w.alpha is not None:
        out["alpha"] = formatRational(w.alpha)
    if w.beta is not None:
        out["beta"] = formatRational(w.beta)
    return out
