""" Class descriptors, carrier maps, class operators and pure-state invariants """

# Import necessary libraries
import math
import pytest
import numpy as np

# Import custom modules
from utils.errors import ContractError, UsageError
from utils.helpers import closestName
from linalg_core.operators import numericRank
from coherent_classes.carriers import (antisymmetricIsometry, carrierDim, carrierIsometry, classSpec, specFromOptions,
                                       toAmbient, toCarrier)
from coherent_classes.class_operators import (classOperator2, classProjector, computeRank, gaussianNullOracle,
                                              gaussP0, projectorRank)
from coherent_classes.invariants import physicalInvariant, pureInvariant
from coherent_classes.members import randomBiseparable, randomMember
from coherent_classes.schmidt import schmidtDecompose, schmidtInvariant, schmidtRank
from coherent_classes.gme import gmeValue, gmeValueByPermutations
from witnesses.depolarization import twoFermionState

MEMBER_SPECS = [
    classSpec('dist', (2, 2)),
    classSpec('dist', (2, 3)),
    classSpec('dist', (2, 2, 2)),
    classSpec('bos', (2,), L=3),
    classSpec('bos', (3,), L=2),
    classSpec('ferm', (4,), L=2),
    classSpec('ferm', (5,), L=2),
    classSpec('gauss', (4,), sector='+'),
    classSpec('gauss', (3,), sector='-'),
]

def _ghz():
    psi = np.zeros(8, dtype=complex)
    psi[0] = psi[7] = 1 / math.sqrt(2)
    return psi

@pytest.mark.parametrize("spec, expected", [
    (classSpec('dist', (2, 3)), 6),
    (classSpec('bos', (3,), L=2), 6),
    (classSpec('ferm', (5,), L=2), 10),
    (classSpec('gauss', (4,), sector='+'), 8),
    (classSpec('gauss', (3,), sector='both'), 8),
    (classSpec('gme', (2,)), 8),
])
def test_carrier_dimensions(spec, expected):
    assert carrierDim(spec) == expected

@pytest.mark.parametrize("tag, dims, L", [
    ('ferm', (3,), 4),
    ('dist', (2, 2), 3),
    ('bos', (2, 2), 2),
])
def test_malformed_specs(tag, dims, L):
    with pytest.raises(UsageError):
        classSpec(tag, dims, L=L)

def test_schmidt_bound_is_checked():
    with pytest.raises(UsageError):
        classSpec('schmidt', (2, 3), n=3)

def test_spec_from_options_resolves_aliases():
    spec = specFromOptions({"class": "fermions", "d": 4, "L": 2})
    assert (spec.tag, spec.dims, spec.L) == ('ferm', (4,), 2)
    assert specFromOptions({"class": "product", "dims": "2,2,2"}).L == 3

def test_spec_from_options_needs_dims():
    with pytest.raises(UsageError):
        specFromOptions({"class": "dist"})

def test_unknown_class_suggests_a_name():
    with pytest.raises(UsageError, match="did you mean"):
        specFromOptions({"class": "fermionz", "d": 4})

def test_closest_name_only_suggests_near_spellings():
    assert closestName("Werner", ["werner", "a8-depol"]) == "werner"
    assert closestName("xyz", ["werner", "a8-depol"]) is None
    assert closestName("gauss", []) is None

def test_large_gaussian_descriptor_is_valid_without_fock_space():
    spec = specFromOptions({"class": "gauss", "d": 20, "sector": "+"})
    assert carrierDim(spec) == 2 ** 19
    with pytest.raises(UsageError):
        carrierIsometry(spec)

def test_gaussian_mode_count_is_bounded():
    with pytest.raises(UsageError):
        classSpec('gauss', (1001,), sector='+')

def test_antisymmetric_isometry_is_isometric():
    W = antisymmetricIsometry(4, 2)
    np.testing.assert_allclose(W.conj().T @ W, np.eye(6), atol=1e-12)

def test_carrier_round_trip(rng):
    spec = classSpec('bos', (3,), L=2)
    coords = randomMember(spec, rng)
    np.testing.assert_allclose(toCarrier(toAmbient(coords, spec), spec), coords, atol=1e-12)

def test_vector_outside_the_carrier_is_rejected():
    spec = classSpec('ferm', (3,), L=2)
    with pytest.raises(ContractError):
        toCarrier(np.eye(9)[0], spec)

@pytest.mark.parametrize("spec", MEMBER_SPECS, ids=lambda s: f"{s.tag}-{s.dims}-{s.L}-{s.sector}")
def test_members_have_zero_invariant(spec, rng):
    for _ in range(5):
        assert abs(pureInvariant(randomMember(spec, rng), spec)) < 1e-9

def test_bell_invariant(bell):
    spec = classSpec('dist', (2, 2))
    assert pureInvariant(bell, spec) == pytest.approx(0.25)
    assert physicalInvariant(bell, spec) == pytest.approx(0.25)

def test_two_fermion_invariant_matches_purity_form():
    spec = classSpec('ferm', (4,), L=2)
    psi = twoFermionState(4, [1.0, 1.0])
    # (1 - sum lambda^4) / 3 with lambda^2 = 1/2
    assert physicalInvariant(psi, spec) == pytest.approx(1 / 6)
    assert pureInvariant(psi, spec) == pytest.approx(1 / 6)

def test_invariant_agrees_with_purity_form_on_random_states(rng):
    for spec in (classSpec('dist', (2, 3)), classSpec('bos', (2,), L=3), classSpec('ferm', (5,), L=2)):
        psi = rng.standard_normal(carrierDim(spec)) + 1j * rng.standard_normal(carrierDim(spec))
        psi = psi / np.linalg.norm(psi)
        assert pureInvariant(psi, spec) == pytest.approx(physicalInvariant(psi, spec), abs=1e-10)

def test_generic_state_is_not_a_member(rng):
    spec = classSpec('dist', (2, 2, 2))
    psi = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    assert pureInvariant(psi / np.linalg.norm(psi), spec) > 1e-6

@pytest.mark.parametrize("spec, k", [
    (classSpec('dist', (2, 2)), 2),
    (classSpec('bos', (2,), L=2), 2),
    (classSpec('bos', (3,), L=2), 3),
    (classSpec('ferm', (4,), L=2), 2),
    (classSpec('ferm', (5,), L=2), 3),
])
def test_projector_rank_matches_young_dimension(spec, k):
    dense = classProjector(spec, k).toDense()
    assert numericRank(dense) == projectorRank(spec, k)

def test_fermion_component_dimension():
    assert projectorRank(classSpec('ferm', (4,), L=2)) == 20

def test_operator_rank_is_cached():
    op = classOperator2(classSpec('dist', (2, 2)))
    # dim Sym^2(C^4) minus dim Sym^2(C^2)^2
    assert computeRank(op) == 1
    assert op.rankA == 1
    assert op.traceA == 1

@pytest.mark.parametrize("d", [2, 3])
def test_gaussian_projector_matches_null_space(d):
    oracle = gaussianNullOracle(d)
    closed = gaussP0(d).toDense()
    np.testing.assert_allclose(closed, oracle, atol=1e-10)
    assert np.trace(closed).real == pytest.approx(math.comb(2 * d, d))

def test_schmidt_invariant_of_bell(bell):
    assert schmidtRank(bell, 2, 2) == 2
    assert schmidtInvariant(bell, 2, 2, 1) == pytest.approx(0.25)
    assert pureInvariant(bell, classSpec('schmidt', (2, 2), n=1)) == pytest.approx(0.25)

def test_schmidt_decomposition_reconstructs(rng):
    psi = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    psi = psi / np.linalg.norm(psi)
    s, U, V = schmidtDecompose(psi, 2, 3)
    rebuilt = sum(s[i] * np.kron(U[:, i], V[:, i]) for i in range(len(s)))
    np.testing.assert_allclose(rebuilt, psi, atol=1e-12)

def test_gme_value_of_ghz_and_biseparable(rng):
    assert gmeValue(_ghz(), 2) == pytest.approx(1 / 64)
    assert abs(gmeValue(randomBiseparable(2, rng), 2)) < 1e-12

@pytest.mark.slow
def test_gme_permutation_form_of_ghz():
    assert gmeValueByPermutations(_ghz(), 2) == pytest.approx(1 / 64)
