""" Bilinear and multilinear witnesses, cones, PPT and depolarization thresholds """

# Import necessary libraries
import pytest
import numpy as np
from fractions import Fraction

# Import custom modules
from utils.errors import ContractError, UsageError
from coherent_classes.carriers import classSpec
from coherent_classes.class_operators import classOperatorK
from coherent_classes.members import classMixture, randomBiseparable, randomMember
from concurrence.uhlmann import wernerState
from witnesses.bilinear import (bilinearConstant, bilinearWitness, densify, detect2, gaussConstant, printedGaussConstant,
                                witnessSummary)
from witnesses.multilinear import detectK, multilinearWitness, schmidtDepolarizedTuple, schmidtWitnessConstants
from witnesses.cones import (closedFormRay, coneInequalities, coneMembership, extremeRays, gaussConeDeterminant,
                             inclusionExclusion, inequalityValues, optimalDetect, restrictionResidual)
from witnesses.ppt import minPartialTransposeEigenvalue, partialTranspose, pptEntangled
from witnesses.depolarization import fermionDepolarizationThreshold, twoFermionState, uniformThreshold

SOUND_SPECS = [
    classSpec('dist', (2, 2)),
    classSpec('dist', (2, 2, 2)),
    classSpec('bos', (2,), L=3),
    classSpec('ferm', (4,), L=2),
    classSpec('gauss', (4,), sector='+'),
]

@pytest.mark.parametrize("L, expected", [(2, Fraction(1, 2)), (3, Fraction(3, 4)), (4, Fraction(7, 8))])
def test_distinguishable_constant(L, expected):
    assert bilinearConstant(classSpec('dist', (2,) * L)) == expected

@pytest.mark.parametrize("d", [4, 5, 6])
def test_two_fermion_constant(d):
    assert bilinearConstant(classSpec('ferm', (d,), L=2)) == Fraction(1, 3)

def test_gaussian_constants():
    assert gaussConstant(2) == 0
    assert gaussConstant(3) == 0
    assert gaussConstant(4) == Fraction(1, 4)

def test_printed_gaussian_sum_differs_from_served_constant():
    # the printed closed sum gives a_4 = 1/2; the exact maximization serves c_4 = 1/4
    assert 1 - printedGaussConstant(4) == Fraction(1, 2)
    assert gaussConstant(4) == Fraction(1, 4)

def test_gaussian_witness_needs_a_sector():
    with pytest.raises(UsageError):
        bilinearConstant(classSpec('gauss', (4,), sector='both'))

def test_no_bilinear_witness_for_schmidt():
    with pytest.raises(UsageError):
        bilinearConstant(classSpec('schmidt', (2, 2), n=1))

def test_witness_summary_is_exact():
    summary = witnessSummary(bilinearWitness(classSpec('dist', (2, 2))))
    assert summary["c"] == "1/2"
    assert summary["alpha"] == "1/10"
    assert summary["beta"] == "-1/2"

@pytest.mark.parametrize("spec", SOUND_SPECS, ids=lambda s: f"{s.tag}-{s.dims}")
def test_witness_never_detects_class_mixtures(spec, rng):
    w = densify(bilinearWitness(spec))
    for _ in range(5):
        assert detect2(w, classMixture(spec, rng), classMixture(spec, rng)) <= 1e-9
        assert detect2(w, randomMember(spec, rng), randomMember(spec, rng)) <= 1e-9

def test_bell_pair_is_detected(bell):
    w = densify(bilinearWitness(classSpec('dist', (2, 2))))
    assert detect2(w, bell, bell) == pytest.approx(0.25)

def test_matrix_free_and_dense_agree(bell, rng):
    spec = classSpec('dist', (2, 2))
    w = bilinearWitness(spec)
    rho = classMixture(spec, rng)
    assert detect2(w, rho, bell) == pytest.approx(detect2(densify(w), rho, bell), abs=1e-10)

def test_detect2_checks_shapes():
    w = densify(bilinearWitness(classSpec('dist', (2, 2))))
    with pytest.raises(ContractError):
        detect2(w, np.eye(3) / 3, np.eye(3) / 3)

def test_schmidt_constants():
    constants = schmidtWitnessConstants(3, 2)
    assert constants["A"] == Fraction(1, 27)
    assert constants["B"] == Fraction(1, 243)
    assert constants["C"] == Fraction(11, 27)
    assert constants["p_cr"] == Fraction(9, 296)

def test_schmidt_witness_crosses_zero_at_critical_noise():
    spec = classSpec('schmidt', (3, 3), n=2)
    w = multilinearWitness(classOperatorK(spec, 3))
    assert detectK(w, schmidtDepolarizedTuple(3, 2, 0.0)) == pytest.approx(1 / 27)
    assert abs(detectK(w, schmidtDepolarizedTuple(3, 2, 9 / 296))) < 1e-10
    assert detectK(w, schmidtDepolarizedTuple(3, 2, 0.1)) < 0

def test_schmidt_witness_never_detects_class_mixtures(rng):
    spec = classSpec('schmidt', (3, 3), n=2)
    w = densify(multilinearWitness(classOperatorK(spec, 3)))
    for _ in range(20):
        assert detectK(w, [classMixture(spec, rng) for _ in range(3)]) <= 1e-10
        assert detectK(w, [randomMember(spec, rng) for _ in range(3)]) <= 1e-10

def test_dense_and_matrix_free_k_copy_values_agree(rng):
    spec = classSpec('schmidt', (3, 3), n=2)
    w = multilinearWitness(classOperatorK(spec, 3))
    states = [classMixture(spec, rng, terms=2), randomMember(spec, rng), classMixture(spec, rng, terms=2)]
    assert detectK(densify(w), states) == pytest.approx(detectK(w, states), abs=1e-10)

@pytest.mark.slow
def test_six_copy_witness_never_detects_biseparable_states(rng):
    w = multilinearWitness(classOperatorK(classSpec('gme', (2,)), 6))
    for _ in range(3):
        assert detectK(w, [randomBiseparable(2, rng) for _ in range(6)], chunk=1) <= 1e-10

def test_schmidt_witness_needs_n_below_d():
    with pytest.raises(UsageError):
        schmidtWitnessConstants(3, 3)

def test_bell_partial_transpose(bellDensity):
    assert minPartialTransposeEigenvalue(bellDensity, (2, 2)) == pytest.approx(-0.5)
    assert pptEntangled(bellDensity, (2, 2))

def test_partial_transpose_of_product_is_positive(rng):
    a = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    b = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    psi = np.kron(a / np.linalg.norm(a), b / np.linalg.norm(b))
    rho = np.outer(psi, psi.conj())
    assert partialTranspose(rho, 0, (2, 3)).factor_dims == (2, 3)
    assert not pptEntangled(rho, (2, 3))

@pytest.mark.parametrize("p, entangled", [(0.5, True), (0.8, False)])
def test_werner_ppt(p, entangled):
    assert pptEntangled(wernerState(p), (2, 2)) is entangled

def test_partial_transpose_needs_two_factors():
    with pytest.raises(UsageError):
        partialTranspose(np.eye(8) / 8, 1, (2, 2, 2))

def test_uniform_fermion_threshold():
    assert uniformThreshold(4, 2) == Fraction(3, 5)

def test_fermion_threshold_with_unequal_coefficients():
    exact = fermionDepolarizationThreshold(5, [Fraction(4, 5), Fraction(3, 5)])
    assert exact == Fraction(192, 317)
    assert fermionDepolarizationThreshold(5, [0.8, 0.6]) == pytest.approx(192 / 317)

def test_single_slater_is_never_detected():
    with pytest.raises(UsageError):
        fermionDepolarizationThreshold(4, [Fraction(1)])

def test_two_fermion_state_is_normalized():
    psi = twoFermionState(6, [3.0, 4.0])
    assert np.linalg.norm(psi) == pytest.approx(1.0)
    assert psi.size == 15

CONE_SPECS = [
    classSpec('dist', (2, 2)),
    classSpec('dist', (2, 2, 2)),
    classSpec('bos', (3,), L=2),
    classSpec('ferm', (4,), L=2),
    classSpec('gauss', (4,), sector='+'),
]

@pytest.mark.parametrize("spec", CONE_SPECS, ids=lambda s: f"{s.tag}-{s.dims}")
def test_each_ray_saturates_all_but_one_inequality(spec):
    rays = extremeRays(spec)
    assert len(rays) == len(coneInequalities(spec))
    for n, ray in enumerate(rays):
        values = inequalityValues(spec, ray.coefficients)
        assert values[n] == -1
        assert sum(1 for v in values if v != 0) == 1
        assert coneMembership(ray)

@pytest.mark.parametrize("spec", CONE_SPECS[:4], ids=lambda s: f"{s.tag}-{s.dims}")
def test_rays_match_closed_forms(spec):
    for n, ray in enumerate(extremeRays(spec)):
        assert closedFormRay(spec, ray.labels[n]) == ray.coefficients

def test_inclusion_exclusion_inverts_subset_sums():
    spec = classSpec('dist', (2, 2, 2))
    a = [Fraction(j - 3, j + 1) for j in range(8)]
    assert inclusionExclusion(inequalityValues(spec, a), 3) == a

def test_gaussian_cone_size_grows_with_modes():
    assert len(extremeRays(classSpec('gauss', (12,), sector='+'))) == 7

@pytest.mark.parametrize("d", [16, 33, 64])
def test_gaussian_rays_beyond_fock_space(d):
    spec = classSpec('gauss', (d,), sector='+')
    rays = extremeRays(spec)
    assert len(rays) == d // 2 + 1
    for n, ray in enumerate(rays):
        values = inequalityValues(spec, ray.coefficients)
        assert values[n] == -1
        assert sum(1 for v in values if v != 0) == 1

def test_gaussian_inequality_matrix_is_invertible():
    assert gaussConeDeterminant(4) == 64
    assert all(gaussConeDeterminant(d) != 0 for d in range(2, 21))

@pytest.mark.parametrize("spec", [classSpec('bos', (3,), L=3), classSpec('ferm', (6,), L=3)],
                         ids=lambda s: f"{s.tag}-{s.dims}")
def test_swap_compression_depends_only_on_subset_size(spec):
    assert restrictionResidual(spec) < 1e-12

def test_fermion_cone_needs_room():
    with pytest.raises(UsageError):
        coneInequalities(classSpec('ferm', (4,), L=3))

def test_cone_witness_detects_bell_but_not_products(bellDensity, rng):
    spec = classSpec('dist', (2, 2))
    # the ray S^{12} - S^{1} reaches 1 - 1/2 on the Bell state
    assert optimalDetect(bellDensity, spec) == pytest.approx(0.5)
    product = classMixture(spec, rng)
    assert optimalDetect(product, spec) <= 1e-9
