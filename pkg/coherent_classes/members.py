""" Random members of each class and generic states for invariant tests """

# Import necessary libraries
import logging
import numpy as np
from itertools import combinations

# Import custom modules
from config.config import ClassSpec
from utils.errors import UsageError
from linalg_core.haar import haarUnitary
from linalg_core.operators import kronAll, mixtureOf, randomPureState
from fock_majorana.gaussian_states import randomPureGaussian
from coherent_classes.carriers import carrierDim, carrierIsometry

# Configure logging
logger = logging.getLogger(__name__)

def randomMember(spec: ClassSpec, rng: np.random.Generator) -> np.ndarray:
    """
        Random pure state of the class in carrier coordinates

        Args:
            spec (ClassSpec): Class descriptor
            rng (np.random.Generator): Random source

        Returns:
            np.ndarray: Normalized carrier vector
    """
    if spec.tag == 'dist':
        return kronAll([randomPureState(d, rng) for d in spec.dims])
    if spec.tag == 'bos':
        phi = randomPureState(spec.d, rng)
        return carrierIsometry(spec).conj().T @ kronAll([phi] * spec.L)
    if spec.tag == 'ferm':
        return slaterDeterminant(haarUnitary(spec.d, rng)[:, :spec.L])
    if spec.tag == 'gauss':
        parity = spec.sector if spec.sector != 'both' else ('+' if rng.random() < 0.5 else '-')
        psi = randomPureGaussian(spec.d, parity, rng)
        W = carrierIsometry(spec)
        return psi if W is None else W.conj().T @ psi
    if spec.tag == 'schmidt':
        return randomSchmidtBounded(spec.dims[0], spec.dims[1], spec.n, rng)
    if spec.tag == 'gme':
        return randomBiseparable(spec.d, rng)
    raise UsageError(f"No member generator for class {spec.tag!r}")

def slaterDeterminant(orbitals: np.ndarray) -> np.ndarray:
    """ Carrier amplitudes of phi_1 ∧ ... ∧ phi_L: the L x L minors of the orbital matrix """
    d, L = orbitals.shape
    amps = np.array([np.linalg.det(orbitals[list(I), :]) for I in combinations(range(d), L)], dtype=complex)
    return amps / np.linalg.norm(amps)

def randomSchmidtBounded(dA: int, dB: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """ Random state of Schmidt rank at most n """
    weights = rng.random(n)
    weights = np.sqrt(weights / weights.sum())
    psi = sum(w * np.kron(randomPureState(dA, rng), randomPureState(dB, rng)) for w in weights)
    return psi / np.linalg.norm(psi)

def randomBiseparable(d: int, rng: np.random.Generator) -> np.ndarray:
    """ phi_p (x) chi_rest for a random single party p, in party order 1,2,3 """
    party = int(rng.integers(3))
    single = randomPureState(d, rng)
    pair = randomPureState(d * d, rng)
    t = np.tensordot(single, pair.reshape(d, d), axes=0)  # axes (party, rest_1, rest_2)
    order = [party] + [q for q in range(3) if q != party]
    return np.transpose(t, np.argsort(order)).reshape(-1)

def genericState(spec: ClassSpec, rng: np.random.Generator) -> np.ndarray:
    """ Haar-random unit vector on the carrier """
    return randomPureState(carrierDim(spec), rng)

def classMixture(spec: ClassSpec, rng: np.random.Generator, terms: int = 10) -> np.ndarray:
    """ Random convex mixture of class members, a state the witness must not detect """
    return mixtureOf([randomMember(spec, rng) for _ in range(terms)], rng)
