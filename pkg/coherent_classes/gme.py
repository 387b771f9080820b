""" Six-copy characterization of biseparable tripartite pure states """

# Import necessary libraries
import logging
import numpy as np
from fractions import Fraction
from typing import Sequence

# Import custom modules
from config.config import ClassOperator, ClassSpec
from utils.errors import ContractError, SizeError, UsageError
from linalg_core.linear_map import Composite, SignedPermutationAverage
from linalg_core.operators import partialTrace
from linalg_core.symmetrizers import blockSymmetrizer, copySlots, productOf

# Configure logging
logger = logging.getLogger(__name__)

PARTIES = 3
COPIES = 6

# (single party, copy pair) for the cuts 1:23, 2:13 and 3:12
CUTS = ((0, (0, 1)), (1, (2, 3)), (2, (4, 5)))

def _swapParties(d: int, parties: Sequence[int], copyA: int, copyB: int):
    perm = list(range(PARTIES * COPIES))
    for p in parties:
        a, b = PARTIES * copyA + p, PARTIES * copyB + p
        perm[a], perm[b] = b, a
    return tuple(perm)

def cutOperator(d: int, party: int, copies: Sequence[int]) -> SignedPermutationAverage:
    """ (1/4)(I - S_party - S_rest + S_party S_rest) on one pair of copies """
    a, b = copies
    rest = [p for p in range(PARTIES) if p != party]
    ident = tuple(range(PARTIES * COPIES))
    s_one = _swapParties(d, [party], a, b)
    s_rest = _swapParties(d, rest, a, b)
    s_both = _swapParties(d, range(PARTIES), a, b)
    terms = [(1, ident), (-1, s_one), (-1, s_rest), (1, s_both)]
    return SignedPermutationAverage((d,) * (PARTIES * COPIES), terms, Fraction(1, 4))

def cutProduct(d: int) -> SignedPermutationAverage:
    """ A^{1:23} (x) A^{2:13} (x) A^{3:12} on copies (1,2), (3,4), (5,6): 64 signed permutations """
    return productOf([cutOperator(d, party, pair) for party, pair in CUTS])

def gmeOperator(d: int = 2, allowLarge: bool = False) -> ClassOperator:
    """
        A_GME = P^{sym,6} (A^{1:23} (x) A^{2:13} (x) A^{3:12}) P^{sym,6}

        Args:
            d (int): Local dimension of each of the three parties
            allowLarge (bool): Permit d = 3 (vectors of length 3^18)

        Returns:
            ClassOperator: Matrix-free operator with its exact trace
    """
    if d < 2:
        raise UsageError("Tripartite class needs local dimension d >= 2")
    if d > 3 or (d == 3 and not allowLarge):
        raise SizeError(f"Six copies of (C^{d})^3 exceed the configured memory; d = 3 needs allowLarge")
    if d == 3:
        logger.warning("Building the six-copy operator for d = 3; each application touches 3^18 amplitudes")

    slot_dims = (d,) * (PARTIES * COPIES)
    sym = blockSymmetrizer(slot_dims, [copySlots(j, PARTIES) for j in range(COPIES)])
    cuts = cutProduct(d)
    trace = cuts.compose(sym).exactTrace()
    spec = ClassSpec(tag='gme', dims=(d,))
    return ClassOperator(spec=spec, k=COPIES, A=Composite([sym, cuts, sym]), carrier_dim=d ** 3, traceA=trace)

def cutInvariant(psi: np.ndarray, d: int, party: int) -> float:
    """ <psi psi|A^{party:rest}|psi psi> = (1 - tr rho_party^2) / 2 """
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if psi.size != d ** PARTIES:
        raise ContractError(f"Vector of length {psi.size} does not live on ({d})^3")
    rho = partialTrace(np.outer(psi, psi.conj()), [party], (d,) * PARTIES)
    return float(np.real(1 - np.trace(rho @ rho))) / 2

def gmeValue(psi: np.ndarray, d: int) -> float:
    """ Product of the three bipartite invariants; zero exactly on biseparable states """
    return float(np.prod([cutInvariant(psi, d, p) for p, _ in CUTS]))

def gmeValueByPermutations(psi: np.ndarray, d: int) -> float:
    """ <psi^6|A_GME|psi^6> through the signed permutations (psi^6 is already symmetric) """
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    v = psi
    for _ in range(COPIES - 1):
        v = np.kron(v, psi)
    return float(np.real(cutProduct(d).expectation(v)))
