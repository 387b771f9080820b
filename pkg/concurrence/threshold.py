""" Critical noise levels of one-parameter state families """

# Import necessary libraries
import logging
import numpy as np
from fractions import Fraction
from scipy.optimize import bisect
from typing import Callable, Dict, Optional, Sequence, Tuple

# Import custom modules
from config.constants import DETECTION_THRESHOLD, NOISE_FAMILIES
from utils.errors import NumericalError, UsageError
from utils.helpers import didYouMean, parseRational
from fock_majorana.fock_algebra import buildFock
from fock_majorana.gaussian_states import depolarizedA8
from coherent_classes.carriers import classSpec
from witnesses.bilinear import bilinearWitness, densify, detect2
from witnesses.depolarization import depolarizedTwoFermion, fermionDepolarizationThreshold, twoFermionState
from concurrence.gaussian_four_mode import sectorBlocks
from concurrence.uhlmann import concurrenceMargin, majoranaTilde, spinFlip, wernerState

# Configure logging
logger = logging.getLogger(__name__)

def thresholdSolver(family: Callable[[float], np.ndarray], detector: Callable[[np.ndarray], float],
                    bracket: Tuple[float, float] = (0.0, 1.0), tol: float = 1e-13) -> float:
    """
        Noise level where the detector stops reporting correlation

        The detector must be positive at the low end of the bracket and negative
        at the high end. Pass unclipped quantities (a concurrence margin rather
        than the concurrence) so the root is the exact crossing.

        Args:
            family (Callable): p -> rho(p)
            detector (Callable): rho -> real
            bracket (Tuple[float, float]): Search interval
            tol (float): Bisection tolerance in p

        Returns:
            float: p_cr
    """
    lo, hi = bracket
    if not lo < hi:
        raise UsageError(f"Bracket must be increasing, got {bracket}")

    def gap(p: float) -> float:
        return float(detector(family(p)))

    g_lo, g_hi = gap(lo), gap(hi)
    if g_lo <= DETECTION_THRESHOLD or g_hi >= 0:
        raise NumericalError(f"No sign change of the detector on [{lo}, {hi}]: values {g_lo:.3e}, {g_hi:.3e}")
    p_cr = bisect(gap, lo, hi, xtol=tol / 4)
    logger.debug(f"Threshold found at p = {p_cr:.15g}")
    return float(p_cr)

def _a8Family(options: Dict) -> Tuple[Callable, Callable]:
    alg = buildFock(4)
    conj = majoranaTilde(alg, '+')
    return (lambda p: depolarizedA8(alg, p)), (lambda rho: concurrenceMargin(sectorBlocks(rho, alg)[0], conj))

def _wernerFamily(options: Dict) -> Tuple[Callable, Callable]:
    return wernerState, (lambda rho: concurrenceMargin(rho, spinFlip()))

def _fermFamily(options: Dict) -> Tuple[Callable, Callable]:
    d = int(options.get("d", 5))
    lambdas = options.get("lambdas", (0.8, 0.6))
    w = densify(bilinearWitness(classSpec('ferm', (d,), L=2)))
    psi = twoFermionState(d, lambdas)
    pure = np.outer(psi, psi.conj())
    return (lambda p: depolarizedTwoFermion(d, lambdas, p)), (lambda rho: detect2(w, rho, pure))

_FAMILIES = {
    "a8-depol": _a8Family,
    "werner": _wernerFamily,
    "ferm-depol": _fermFamily,
}

def familyNames() -> Sequence[str]:
    return list(NOISE_FAMILIES.keys())

def exactThreshold(name: str, options: Optional[Dict] = None) -> Optional[Fraction]:
    """ Closed-form threshold of a named family, when one is known """
    options = options or {}
    entry = NOISE_FAMILIES[name]
    if entry.get("exact"):
        return parseRational(entry["exact"])
    if name == "ferm-depol":
        lambdas = options.get("lambdas", (0.8, 0.6))
        exact = [Fraction(str(x)) for x in lambdas]
        return fermionDepolarizationThreshold(int(options.get("d", 5)), exact)
    return None

def namedThreshold(name: str, options: Optional[Dict] = None) -> Dict[str, object]:
    """
        Solve the threshold of a family listed in dictionary/families.json

        Args:
            name (str): Family name, e.g. "a8-depol"
            options (dict, optional): Family parameters (d and lambdas for ferm-depol)

        Returns:
            dict: p_cr, the exact value when known, and the family description
    """
    if name not in _FAMILIES:
        raise UsageError(f"Unknown family '{name}'{didYouMean(name, familyNames())}")
    options = options or {}
    family, detector = _FAMILIES[name](options)
    bracket = tuple(NOISE_FAMILIES[name]["bracket"])
    logger.info(f"Solving threshold for family {name}")
    p_cr = thresholdSolver(family, detector, bracket)
    return {
        "family": name,
        "description": NOISE_FAMILIES[name]["description"],
        "p_cr": p_cr,
        "exact": exactThreshold(name, options),
    }
