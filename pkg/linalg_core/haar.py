""" Haar-random unitaries with seeded, splittable random streams """

# Import necessary libraries
import numpy as np
from typing import List, Union

# Import custom modules
from utils.errors import UsageError

SeedLike = Union[int, np.random.SeedSequence, np.random.Generator, None]

def makeRng(seed: SeedLike = 0) -> np.random.Generator:
    """ Normalize an int / SeedSequence / Generator into a Generator """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)

def splitStreams(seed: int, shards: int) -> List[np.random.Generator]:
    """
        Independent generators for parallel shards

        Args:
            seed (int): Root seed
            shards (int): Number of streams

        Returns:
            List[np.random.Generator]: One generator per shard, deterministic in (seed, shards)
    """
    if shards < 1:
        raise UsageError("shards must be positive")
    children = np.random.SeedSequence(seed).spawn(shards)
    return [np.random.default_rng(child) for child in children]

def ginibre(n: int, rng: np.random.Generator) -> np.ndarray:
    """ Complex standard-Gaussian n x n matrix """
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)

def haarUnitary(n: int, seed: SeedLike = 0, special: bool = False) -> np.ndarray:
    """
        Haar-distributed unitary on U(n)

        QR-factorizes a Ginibre matrix and rescales the columns of Q so that R has
        a real positive diagonal. With special=True the result is divided by
        det^{1/n}; conjugation actions do not see the difference.

        Args:
            n (int): Dimension
            seed: Seed, SeedSequence or Generator
            special (bool): Normalize into SU(n)

        Returns:
            np.ndarray: Unitary matrix
    """
    if n < 1:
        raise UsageError("haarUnitary needs n >= 1")
    rng = makeRng(seed)
    q, r = np.linalg.qr(ginibre(n, rng))
    diag = np.diagonal(r)
    q = q * (diag / np.abs(diag))[np.newaxis, :]
    if special:
        q = q / np.linalg.det(q) ** (1.0 / n)
    return q

def haarDistance(u: np.ndarray, v: np.ndarray) -> float:
    """ Hilbert-Schmidt distance ||u - v||_F """
    return float(np.linalg.norm(u - v))

def conjugate(u: np.ndarray, rho: np.ndarray) -> np.ndarray:
    return u @ rho @ u.conj().T
