""" Symmetrizers, antisymmetrizers, swaps and permutation operators on tensor slots """

# Import necessary libraries
import math
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, Sequence, Tuple

# Import custom modules
from utils.errors import ContractError, UsageError
from linalg_core.linear_map import SignedPermutationAverage

# Configure logging
logger = logging.getLogger(__name__)

@lru_cache(maxsize=None)
def _permsWithSign(n: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """ All permutations of range(n) with their signs """
    out = []
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        out.append((perm, -1 if inversions % 2 else 1))
    return tuple(out)

def identityPermutation(n: int) -> Tuple[int, ...]:
    return tuple(range(n))

def permutationMap(factor_dims: Sequence[int], perm: Sequence[int], sign: int = 1) -> SignedPermutationAverage:
    """ Single (signed) slot permutation """
    return SignedPermutationAverage(factor_dims, [(sign, perm)])

def swapMap(factor_dims: Sequence[int], blockA: Sequence[int], blockB: Sequence[int]) -> SignedPermutationAverage:
    """
        Swap two equally sized blocks of tensor slots

        Args:
            factor_dims (Sequence[int]): Slot dimensions
            blockA (Sequence[int]): Slot indices of the first block
            blockB (Sequence[int]): Slot indices of the second block, matched positionally

        Returns:
            SignedPermutationAverage: The unitary swap
    """
    if len(blockA) != len(blockB):
        raise ContractError("Swapped blocks must have equal length")
    perm = list(range(len(factor_dims)))
    for a, b in zip(blockA, blockB):
        if factor_dims[a] != factor_dims[b]:
            raise ContractError(f"Cannot swap slot {a} (dim {factor_dims[a]}) with slot {b} (dim {factor_dims[b]})")
        perm[a], perm[b] = b, a
    return SignedPermutationAverage(factor_dims, [(1, perm)])

def subsetSymmetrizer(factor_dims: Sequence[int], slots: Sequence[int], anti: bool = False) -> SignedPermutationAverage:
    """
        (Anti)symmetrizer over a subset of slots

        Args:
            factor_dims (Sequence[int]): Slot dimensions
            slots (Sequence[int]): Slots to (anti)symmetrize
            anti (bool): Antisymmetrize instead

        Returns:
            SignedPermutationAverage: Orthogonal projector P^sym_S or P^asym_S
    """
    return blockSymmetrizer(factor_dims, [[s] for s in slots], anti=anti)

def blockSymmetrizer(factor_dims: Sequence[int], blocks: Sequence[Sequence[int]], anti: bool = False) -> SignedPermutationAverage:
    """ (Anti)symmetrizer permuting whole blocks of slots, e.g. copies of a multipartite system """
    n = len(factor_dims)
    k = len(blocks)
    width = {len(b) for b in blocks}
    if len(width) != 1:
        raise ContractError("Permuted blocks must have equal size")
    terms = []
    for sigma, sign in _permsWithSign(k):
        perm = list(range(n))
        for target, source in enumerate(sigma):
            for a, b in zip(blocks[target], blocks[source]):
                perm[a] = b
        terms.append((sign if anti else 1, perm))
    return SignedPermutationAverage(factor_dims, terms, Fraction(1, math.factorial(k)))

def pairSymmetrizer(factor_dims: Sequence[int], i: int, j: int) -> SignedPermutationAverage:
    """ P+_{ij} = (I + S_ij)/2 """
    return subsetSymmetrizer(factor_dims, [i, j])

def productOf(maps: Sequence[SignedPermutationAverage]) -> SignedPermutationAverage:
    """ Exact composition of permutation sums, left to right """
    out = maps[0]
    for m in maps[1:]:
        out = out.compose(m)
    return out

def copySlots(copy: int, particles: int) -> Tuple[int, ...]:
    """ Slot indices of one copy when k copies of an L-slot system sit side by side """
    return tuple(copy * particles + i for i in range(particles))

def particleSlots(particle: int, particles: int, copies: int) -> Tuple[int, ...]:
    """ Slot indices of one particle across all copies """
    return tuple(j * particles + particle for j in range(copies))

def symmetrizerOps(total_factors: int, local_dims: Sequence[int], spec: Dict) -> SignedPermutationAverage:
    """
        Build one of the basic permutation-group operators

        Args:
            total_factors (int): Number of tensor slots
            local_dims (Sequence[int]): Dimension of each slot (length 1 means uniform)
            spec (dict): {"op": "pair", "i", "j"} | {"op": "sym"/"asym", "slots"} |
                         {"op": "swap", "a": [...], "b": [...]} | {"op": "perm", "perm": [...]} |
                         {"op": "copies", "copies": k} (symmetrizer over k equal blocks)

        Returns:
            SignedPermutationAverage: Requested map
    """
    dims = tuple(local_dims) * total_factors if len(local_dims) == 1 else tuple(local_dims)
    if len(dims) != total_factors:
        raise UsageError(f"Expected {total_factors} local dims, got {len(dims)}")
    op = spec.get("op")
    if op == "pair":
        return pairSymmetrizer(dims, spec["i"], spec["j"])
    if op in ("sym", "asym"):
        slots = spec.get("slots", range(total_factors))
        return subsetSymmetrizer(dims, list(slots), anti=(op == "asym"))
    if op == "swap":
        return swapMap(dims, spec["a"], spec["b"])
    if op == "perm":
        return permutationMap(dims, spec["perm"], spec.get("sign", 1))
    if op == "copies":
        k = spec["copies"]
        if total_factors % k:
            raise UsageError("Slots do not split into equal copies")
        width = total_factors // k
        return blockSymmetrizer(dims, [copySlots(j, width) for j in range(k)], anti=spec.get("anti", False))
    raise UsageError(f"Unknown symmetrizer op {op!r}")
