""" Correlation matrices, Bogolyubov unitaries, random pure Gaussian states and the a8 state """

# Import necessary libraries
import logging
import numpy as np
from scipy.linalg import expm
from typing import Tuple

# Import custom modules
from config.config import CorrelationMatrix
from utils.errors import ContractError, UsageError
from fock_majorana.fock_algebra import FockAlgebra
from linalg_core.haar import SeedLike, makeRng

# Configure logging
logger = logging.getLogger(__name__)

def correlationMatrix(rho: np.ndarray, alg: FockAlgebra, checkPure: bool = False) -> CorrelationMatrix:
    """
        M_kl = (i/2) tr(rho [c_k, c_l])

        Args:
            rho (np.ndarray): Even operator on Fock space
            alg (FockAlgebra): Algebra of matching size
            checkPure (bool): Flag the result as pure when M M^T = I within 1e-10

        Returns:
            CorrelationMatrix: Real antisymmetric matrix
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (alg.dim, alg.dim):
        raise ContractError(f"State of shape {rho.shape} does not live on {alg.d} modes")
    if not alg.isEven(rho):
        raise ContractError("correlationMatrix needs an even (parity-commuting) operator")

    n = 2 * alg.d
    m = np.zeros((n, n), dtype=complex)
    for k in range(n):
        for l in range(k + 1, n):
            ck, cl = alg.majoranas[k], alg.majoranas[l]
            value = 0.5j * np.trace(rho @ (ck @ cl - cl @ ck))
            m[k, l] = value
            m[l, k] = -value
    residue = float(np.max(np.abs(m.imag))) if m.size else 0.0
    if residue > 1e-10:
        logger.warning(f"Discarding imaginary residue {residue:.3e} of the correlation matrix")
    real = m.real
    pure = checkPure and bool(np.allclose(real @ real.T, np.eye(n), atol=1e-10))
    return CorrelationMatrix(m=real, pure=pure)

def quadraticGenerator(h: np.ndarray, alg: FockAlgebra) -> np.ndarray:
    """ sum_kl h_kl c_k c_l (anti-Hermitian for real antisymmetric h) """
    n = 2 * alg.d
    out = np.zeros((alg.dim, alg.dim), dtype=complex)
    for k in range(n):
        for l in range(n):
            if h[k, l] != 0:
                out += h[k, l] * (alg.majoranas[k] @ alg.majoranas[l])
    return out

def bogolyubovUnitary(h: np.ndarray, alg: FockAlgebra) -> np.ndarray:
    """
        U = exp(i * (i sum_kl h_kl c_k c_l))

        Args:
            h (np.ndarray): Real antisymmetric 2d x 2d matrix
            alg (FockAlgebra): Algebra

        Returns:
            np.ndarray: Unitary on Fock space
    """
    h = np.asarray(h)
    n = 2 * alg.d
    if h.shape != (n, n):
        raise UsageError(f"Generator must be {n}x{n}, got {h.shape}")
    if np.iscomplexobj(h) and np.max(np.abs(h.imag)) > 1e-12:
        raise ContractError("Generator must be real")
    h = np.real(h)
    if np.max(np.abs(h + h.T)) > 1e-12:
        raise ContractError("Generator must be antisymmetric")
    return expm(-quadraticGenerator(h, alg))

def majoranaRotation(u: np.ndarray, alg: FockAlgebra) -> np.ndarray:
    """ R with U c_l U^dagger = sum_k R_kl c_k, i.e. R_kl = tr(c_k U c_l U^dagger) / 2^d """
    n = 2 * alg.d
    R = np.zeros((n, n))
    for l in range(n):
        rotated = u @ alg.majoranas[l] @ u.conj().T
        for k in range(n):
            R[k, l] = np.real(np.trace(alg.majoranas[k] @ rotated)) / alg.dim
    return R

def randomGenerator(alg: FockAlgebra, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """ Gaussian-random real antisymmetric generator """
    n = 2 * alg.d
    g = rng.standard_normal((n, n)) * scale
    return (g - g.T) / 2

def randomBogolyubov(alg: FockAlgebra, seed: SeedLike = 0) -> np.ndarray:
    rng = makeRng(seed)
    return bogolyubovUnitary(randomGenerator(alg, rng), alg)

def referenceState(alg: FockAlgebra, parity: str) -> np.ndarray:
    """ |0...0> for parity '+', |0...0,1> (mode d occupied) for parity '-' """
    if parity == '+':
        return alg.vacuum()
    if parity == '-':
        return alg.basisState([alg.d])
    raise UsageError(f"Parity must be '+' or '-', got {parity!r}")

def randomPureGaussian(d_or_alg, parity: str = '+', seed: SeedLike = 0) -> np.ndarray:
    """
        Random pure fermionic Gaussian state of fixed parity

        Args:
            d_or_alg: Number of modes or a FockAlgebra
            parity (str): '+' or '-'
            seed: Seed, SeedSequence or Generator

        Returns:
            np.ndarray: Normalized amplitudes on Fock space
    """
    alg = d_or_alg if isinstance(d_or_alg, FockAlgebra) else FockAlgebra(int(d_or_alg))
    rng = makeRng(seed)
    u = bogolyubovUnitary(randomGenerator(alg, rng), alg)
    psi = u @ referenceState(alg, parity)
    return psi / np.linalg.norm(psi)

def a8Stabilizers(alg: FockAlgebra) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """ S1 = -c1c2c5c6, S2 = -c2c3c6c7, S3 = -c1c2c3c4 """
    if alg.d != 4:
        raise UsageError("The a8 state is defined for four modes")
    return (-alg.monomial((1, 2, 5, 6)), -alg.monomial((2, 3, 6, 7)), -alg.monomial((1, 2, 3, 4)))

def a8State(alg: FockAlgebra) -> np.ndarray:
    """ |a8><a8| = (1/16)(I + S1)(I + S2)(I + S3)(I + Q) """
    s1, s2, s3 = a8Stabilizers(alg)
    eye = np.eye(alg.dim, dtype=complex)
    rho = (eye + s1) @ (eye + s2) @ (eye + s3) @ (eye + alg.Q) / 16
    return (rho + rho.conj().T) / 2

def a8Vector(alg: FockAlgebra) -> np.ndarray:
    """ Unit vector spanning the a8 projector, phase-fixed to a real positive leading entry """
    rho = a8State(alg)
    w, v = np.linalg.eigh(rho)
    vec = v[:, int(np.argmax(w))]
    lead = vec[np.flatnonzero(np.abs(vec) > 1e-10)[0]]
    return vec * (abs(lead) / lead)

def depolarizedA8(alg: FockAlgebra, p: float) -> np.ndarray:
    """ (1 - p) a8 + p I/16 on the full Fock space """
    return (1 - p) * a8State(alg) + p * np.eye(alg.dim) / alg.dim
