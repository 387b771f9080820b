""" Concentration lower bounds on the fraction of detected states of an isospectral manifold """

# Import necessary libraries
import math
import logging
import numpy as np
from typing import Sequence

# Import custom modules
from config.config import ClassParams, SpectrumProfile
from config.constants import HERMITIAN_TOL
from utils.errors import UsageError
from typicality.parameters import pmaxCritical

# Configure logging
logger = logging.getLogger(__name__)

def spectrumProfile(values: Sequence[float], tol: float = 1e-12) -> SpectrumProfile:
    """
        Validate a spectrum and sort it non-increasingly

        Args:
            values (Sequence[float]): Probabilities summing to one
            tol (float): Allowed deviation of the sum from one

        Returns:
            SpectrumProfile: Ordered profile
    """
    p = np.asarray(values, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise UsageError("A spectrum needs at least one value")
    if np.any(p < -HERMITIAN_TOL):
        raise UsageError("Spectrum entries must be non-negative")
    p = np.where(p < 0, 0.0, p)
    if abs(float(p.sum()) - 1.0) > tol:
        raise UsageError(f"Spectrum must sum to 1, got {float(p.sum()):.15g}")
    return SpectrumProfile(p=tuple(float(x) for x in sorted(p, reverse=True)))

def pmaxProfile(pmax: float, N: int) -> SpectrumProfile:
    """ (p_max, rest uniform) """
    if not 1.0 / N - 1e-15 <= pmax <= 1.0:
        raise UsageError(f"p_max must lie in [1/N, 1] for N={N}, got {pmax}")
    rest = (1.0 - pmax) / (N - 1) if N > 1 else 0.0
    values = [pmax] + [rest] * (N - 1)
    total = sum(values)
    return SpectrumProfile(p=tuple(v / total for v in values))

def concentrationBound(N: int, gap: float, lipschitz: float) -> float:
    """ 1 - exp(-N gap^2 / (4 L^2)), or 0 when the mean gap is not positive """
    if gap <= 0:
        return 0.0
    return 1.0 - math.exp(-N * gap * gap / (4.0 * lipschitz * lipschitz))

def meanGap(spectrum: SpectrumProfile, params: ClassParams) -> float:
    """ Haar mean of the witness expectation at the top eigenvector, as a distance above zero """
    delta = spectrum.pmax - float(pmaxCritical(params))
    k = params.k
    if k == 2:
        return delta * float(params.alpha - params.beta) / 2
    return delta * (k - 1) * ((k - 1) + float(params.X)) / k

def lowerBound(spectrum: SpectrumProfile, params: ClassParams, kind: str = 'bilinear') -> float:
    """
        Lower bound on the fraction of correlated states with the given spectrum

        bilinear: 1 - exp(-N delta^2 (alpha - beta)^2 / 256); klinear: 1 -
        exp(-N E^2 / (16 k^2)) with E = delta (k - 1)(k - 1 + X)/k. Both come from
        the concentration inequality with Lipschitz constant 2k.

        Args:
            spectrum (SpectrumProfile): Ordered spectrum of length N
            params (ClassParams): Class parameters
            kind (str): 'bilinear' or 'klinear'

        Returns:
            float: Bound in [0, 1); 0 when delta = p_max - p_max,cr <= 0
    """
    if spectrum.N != params.N:
        raise UsageError(f"Spectrum of length {spectrum.N} does not match N = {params.N}")
    if kind == 'bilinear' and params.k != 2:
        raise UsageError("Bilinear bound requested for a k-linear witness")
    if kind not in ('bilinear', 'klinear'):
        raise UsageError(f"Unknown bound kind {kind!r}")
    return concentrationBound(params.N, meanGap(spectrum, params), 2.0 * params.k)
