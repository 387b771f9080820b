""" Witness parameters N, X and c per class, and the critical largest eigenvalue """

# Import necessary libraries
import math
import logging
from fractions import Fraction
from typing import Dict

# Import custom modules
from config.config import ClassParams, ClassSpec
from config.constants import GAUSS_CONSTANT_MAX_D
from utils.errors import ContractError, UsageError
from utils.helpers import formatRational
from young_combinatorics.young_diagram import dimIrrep, rectangle
from coherent_classes.carriers import carrierDim, validateSpec
from coherent_classes.class_operators import symDim
from coherent_classes.gme import gmeOperator
from witnesses.bilinear import bilinearConstant

# Configure logging
logger = logging.getLogger(__name__)

def bosonProjectorTrace(d: int, L: int) -> Fraction:
    """
        tr of the restricted product of copy symmetrizers on Sym^L (x) Sym^L

        2^{-L} sum_k C(L, k) dim Sym^L(C^d)^2 / dim Sym^k(C^d), since the
        k-particle marginal of P^{sym,L} is proportional to P^{sym,k}.
    """
    full = symDim(d, L)
    return sum((Fraction(math.comb(L, k) * full * full, symDim(d, k)) for k in range(L + 1)), Fraction(0)) / 2 ** L

def twoCopyTrace(spec: ClassSpec) -> Fraction:
    """ tr A for the two-copy class operator, from closed forms """
    N = carrierDim(spec)
    if spec.tag == 'dist':
        return Fraction(symDim(N, 2) - math.prod(symDim(d, 2) for d in spec.dims))
    if spec.tag == 'bos':
        return symDim(N, 2) - bosonProjectorTrace(spec.d, spec.L)
    if spec.tag == 'ferm':
        return Fraction(symDim(N, 2) - dimIrrep(rectangle(spec.L, 2), spec.d))
    if spec.tag == 'gauss':
        return Fraction(symDim(N, 2)) - Fraction(math.comb(2 * spec.d, spec.d), 2)
    raise UsageError(f"No two-copy trace formula for class {spec.tag!r}")

def _checkParamsSpec(spec: ClassSpec) -> None:
    if spec.tag == 'gauss':
        # d may exceed the Fock-space limit here
        if spec.sector == 'both':
            raise UsageError("Gaussian parameters are defined per parity sector")
        if not 4 <= spec.d <= GAUSS_CONSTANT_MAX_D:
            raise UsageError(f"Gaussian parameters need 4 <= d <= {GAUSS_CONSTANT_MAX_D}, got {spec.d}")
        return
    validateSpec(spec)

def classParams(spec: ClassSpec) -> ClassParams:
    """
        N, X = tr A / dim Sym^2 and c for the bilinear witness of a class

        Args:
            spec (ClassSpec): dist, bos, ferm or gauss class

        Returns:
            ClassParams: Exact parameters
    """
    if spec.tag in ('schmidt', 'gme'):
        return klinearParams(spec)
    _checkParamsSpec(spec)
    N = carrierDim(spec)
    X = twoCopyTrace(spec) / symDim(N, 2)
    c = bilinearConstant(spec)
    if not 0 < X < 1:
        raise ContractError(f"Class {spec.tag} has X = {X}, outside (0, 1); the typicality estimate does not apply")
    logger.debug(f"Parameters for {spec.tag}: N={N}, X={X}, c={c}")
    return ClassParams(spec=spec, N=N, X=X, c=c, k=2)

def klinearParams(spec: ClassSpec) -> ClassParams:
    """
        Parameters of the k-linear witness V = A - (k - 1)(I - P^{sym,k})

        X holds tr A / dim Sym^k and c holds k - 1.
    """
    validateSpec(spec)
    N = carrierDim(spec)
    if spec.tag == 'schmidt':
        k = spec.n + 1
        trace = Fraction(math.comb(spec.dims[0], k) * math.comb(spec.dims[1], k))
    elif spec.tag == 'gme':
        k = 6
        trace = Fraction(gmeOperator(spec.d, allowLarge=True).traceA)
    else:
        raise UsageError(f"No k-linear witness parameters for class {spec.tag!r}")
    X = trace / symDim(N, k)
    if not 0 < X < 1:
        raise ContractError(f"Class {spec.tag} has X = {X}, outside (0, 1); the typicality estimate does not apply")
    return ClassParams(spec=spec, N=N, X=X, c=Fraction(k - 1), k=k)

def pmaxCritical(params: ClassParams) -> Fraction:
    """
        Largest eigenvalue above which the typicality estimate applies

        Bilinear: p_cr = -(alpha + beta)/(alpha - beta) = (c - X)/(c + X). k-linear:
        the sym-overlap ((k - 1)p + 1)/k reaches (k - 1)/((k - 1) + X).

        Args:
            params (ClassParams): Parameters with alpha > 0, beta < 0 and alpha + beta <= 0

        Returns:
            Fraction: Exact critical value
    """
    alpha, beta = Fraction(params.alpha), Fraction(params.beta)
    if params.k == 2:
        if not (alpha > 0 and beta < 0 and alpha + beta <= 0):
            raise ContractError(f"Typicality needs alpha > 0, beta < 0, alpha + beta <= 0; got alpha={alpha}, beta={beta}")
        return -(alpha + beta) / (alpha - beta)
    k = params.k
    if not alpha > 0:
        raise ContractError(f"Typicality needs X > 0, got {alpha}")
    overlap = Fraction(k - 1) / ((k - 1) + alpha)
    return (k * overlap - 1) / (k - 1)

def paramsSummary(params: ClassParams) -> Dict[str, object]:
    """ JSON-ready parameters, rationals as "num/den" """
    return {
        "class": params.spec.tag,
        "N": params.N,
        "k": params.k,
        "X": formatRational(params.X),
        "c": formatRational(params.c),
        "alpha": formatRational(params.alpha),
        "beta": formatRational(params.beta),
        "p_max_cr": formatRational(pmaxCritical(params)),
    }
