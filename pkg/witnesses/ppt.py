""" Partial transposition and the PPT entanglement test """

# Import necessary libraries
import logging
import numpy as np
from typing import Sequence

# Import custom modules
from config.config import DenseOperator
from config.constants import DETECTION_THRESHOLD
from utils.errors import UsageError
from linalg_core.operators import asMatrix, denseOperator, hermEig

# Configure logging
logger = logging.getLogger(__name__)

def partialTranspose(rho, factor: int = 1, factor_dims: Sequence[int] = None) -> DenseOperator:
    """
        Transpose one tensor factor of a bipartite operator in the computational basis

        Args:
            rho: DenseOperator or square array on C^{d1} (x) C^{d2}
            factor (int): Zero-based factor to transpose
            factor_dims (Sequence[int], optional): (d1, d2), needed for plain arrays

        Returns:
            DenseOperator: rho^{T_factor}
    """
    m = asMatrix(rho)
    dims = tuple(rho.factor_dims) if isinstance(rho, DenseOperator) else tuple(factor_dims or ())
    if len(dims) != 2:
        raise UsageError(f"Partial transposition needs a bipartite operator, got factor_dims {dims}")
    if factor not in (0, 1):
        raise UsageError(f"Factor must be 0 or 1, got {factor}")
    d1, d2 = dims
    t = m.reshape(d1, d2, d1, d2)
    if factor == 0:
        t = t.transpose(2, 1, 0, 3)
    else:
        t = t.transpose(0, 3, 2, 1)
    return denseOperator(t.reshape(d1 * d2, d1 * d2), dims)

def minPartialTransposeEigenvalue(rho, factor_dims: Sequence[int] = None) -> float:
    pt = partialTranspose(rho, 1, factor_dims)
    values, _ = hermEig(pt.matrix, tol=1e-9)
    return float(values[-1])

def pptEntangled(rho, factor_dims: Sequence[int] = None) -> bool:
    """ True when the partial transpose has an eigenvalue below -DETECTION_THRESHOLD """
    value = minPartialTransposeEigenvalue(rho, factor_dims)
    logger.debug(f"Smallest partial-transpose eigenvalue {value:.3e}")
    return value < -DETECTION_THRESHOLD
