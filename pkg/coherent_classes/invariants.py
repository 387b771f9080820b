""" Pure-state class invariants: the operator path and the purity-sum path """

# Import necessary libraries
import logging
import numpy as np
from fractions import Fraction
from itertools import combinations
from typing import Optional, Union

# Import custom modules
from config.config import ClassOperator, ClassSpec, StateVector
from utils.errors import ContractError, UsageError
from linalg_core.operators import partialTrace
from coherent_classes.carriers import ambientDims, toAmbient, toCarrier
from coherent_classes.class_operators import classOperatorK
from coherent_classes.gme import gmeValue
from coherent_classes.schmidt import schmidtInvariant

# Configure logging
logger = logging.getLogger(__name__)

def _amplitudes(psi: Union[np.ndarray, StateVector]) -> np.ndarray:
    amps = psi.amplitudes if isinstance(psi, StateVector) else psi
    amps = np.asarray(amps, dtype=complex).reshape(-1)
    norm = np.linalg.norm(amps)
    if abs(norm - 1) > 1e-9:
        raise ContractError(f"State must be normalized, got norm {norm:.12g}")
    return amps

def kFold(psi: np.ndarray, k: int) -> np.ndarray:
    """ psi^{(x)k} """
    out = psi
    for _ in range(k - 1):
        out = np.kron(out, psi)
    return out

def pureInvariant(psi: Union[np.ndarray, StateVector], spec: ClassSpec, op: Optional[ClassOperator] = None) -> float:
    """
        <psi^k|A|psi^k> for the class operator on k copies

        Args:
            psi: Normalized state in carrier coordinates or in the ambient space
            spec (ClassSpec): Class descriptor
            op (ClassOperator, optional): Prebuilt operator; two copies by default

        Returns:
            float: Invariant value, zero exactly for class members
    """
    amps = _amplitudes(psi)
    if spec.tag == 'schmidt' and op is None:
        return schmidtInvariant(amps, spec.dims[0], spec.dims[1], spec.n)
    if spec.tag == 'gme' and op is None:
        return gmeValue(amps, spec.d)
    coords = toCarrier(amps, spec)
    if op is None:
        op = classOperatorK(spec, 2)
    value = op.A.expectation(kFold(coords, op.k))
    if abs(value.imag) > 1e-9:
        raise ContractError(f"Invariant has imaginary part {value.imag:.3e}")
    return float(value.real)

def purityWeight(spec: ClassSpec) -> Fraction:
    """ 1 for distinguishable particles and bosons, 2^L / (L + 1) for fermions """
    if spec.tag in ('dist', 'bos'):
        return Fraction(1)
    if spec.tag == 'ferm':
        return Fraction(2 ** spec.L, spec.L + 1)
    raise UsageError(f"Purity-sum form is defined for particle classes, not {spec.tag!r}")

def subsystemPurities(rho: np.ndarray, dims) -> dict:
    """ tr rho_X^2 for every subset X of the particles (empty set gives 1) """
    L = len(dims)
    out = {(): 1.0}
    for size in range(1, L + 1):
        for X in combinations(range(L), size):
            if size == L:
                reduced = rho
            else:
                reduced = partialTrace(rho, X, dims)
            out[X] = float(np.real(np.trace(reduced @ reduced)))
    return out

def physicalInvariant(state: Union[np.ndarray, StateVector], spec: ClassSpec) -> float:
    """
        tr[(rho (x) rho) A] through subsystem purities

        For a density matrix rho on L particles this is
        (1 + tr rho^2)/2 - alpha 2^{-L} sum_X tr rho_X^2, which for pure states
        reduces to 1 - alpha 2^{-L} sum_X tr rho_X^2.

        Args:
            state: Normalized vector or density matrix (carrier or ambient coordinates)
            spec (ClassSpec): dist, bos or ferm class

        Returns:
            float: Invariant value
    """
    alpha = float(purityWeight(spec))
    dims = ambientDims(spec)
    arr = state.amplitudes if isinstance(state, StateVector) else np.asarray(state, dtype=complex)
    if arr.ndim == 1:
        vec = toAmbient(_amplitudes(arr), spec)
        rho = np.outer(vec, vec.conj())
    else:
        rho = arr
        if rho.shape[0] != int(np.prod(dims)):
            raise ContractError(f"Density matrix of dim {rho.shape[0]} does not live on {dims}")
    purities = subsystemPurities(rho, dims)
    total = sum(purities.values())
    return (1 + purities[tuple(range(len(dims)))]) / 2 - alpha * total / 2 ** len(dims)
