""" Wootters and tilde concurrences, the four-mode Gaussian decision and noise thresholds """

# Import necessary libraries
import math
import pytest
import numpy as np
from fractions import Fraction

# Import custom modules
from utils.errors import ContractError, NumericalError, UsageError
from fock_majorana.gaussian_states import a8State, a8Vector, depolarizedA8, randomPureGaussian
from concurrence.uhlmann import (concurrenceMargin, isInvolution, majoranaTilde, pureConcurrence, singlet, spinFlip,
                                 uwConcurrence, wernerState, wootters2q)
from concurrence.gaussian_four_mode import (convexGaussian, gaussConcurrences, gaussFidelity, generalizedSchmidt,
                                            schmidtCombination, schmidtConcurrence, thetaPlus)
from concurrence.threshold import exactThreshold, familyNames, namedThreshold, thresholdSolver

def test_bell_state_is_maximally_entangled(bellDensity):
    assert wootters2q(bellDensity) == pytest.approx(1.0)

def test_product_state_has_no_concurrence():
    psi = np.kron([1, 0], [0.6, 0.8]).astype(complex)
    assert wootters2q(np.outer(psi, psi.conj())) == pytest.approx(0.0, abs=1e-7)

@pytest.mark.parametrize("p", [0.0, 0.3, 0.6, 0.9])
def test_werner_concurrence_is_linear(p):
    assert wootters2q(wernerState(p)) == pytest.approx(max(0.0, 1 - 1.5 * p), abs=1e-9)
    assert concurrenceMargin(wernerState(p), spinFlip()) == pytest.approx(1 - 1.5 * p, abs=1e-9)

def test_two_qubit_needs_four_by_four():
    with pytest.raises(ContractError):
        wootters2q(np.eye(3) / 3)

def test_concurrence_needs_hermitian_input():
    with pytest.raises(ContractError):
        uwConcurrence(np.array([[0, 1], [0, 0]], dtype=complex), spinFlip())

def test_conjugations_are_involutions(fock4, rng):
    assert isInvolution(spinFlip(), 4, rng)
    assert isInvolution(majoranaTilde(fock4, '+'), 8, rng)

def test_pure_singlet_concurrence():
    assert pureConcurrence(singlet(), spinFlip()) == pytest.approx(1.0)

@pytest.mark.parametrize("p", [0.0, 0.2, 0.5, 8 / 11, 0.9])
def test_depolarized_a8_concurrence(fock4, p):
    c_plus, c_minus = gaussConcurrences(depolarizedA8(fock4, p), fock4)
    assert c_plus == pytest.approx(max(0.0, 1 - 11 * p / 8), abs=1e-10)
    assert c_minus == pytest.approx(0.0, abs=1e-10)

def test_a8_is_not_convex_gaussian(fock4):
    verdict, report = convexGaussian(a8State(fock4), fock4)
    assert not verdict
    assert report["C_plus"] == pytest.approx(1.0)

def test_fully_mixed_state_is_convex_gaussian(fock4):
    verdict, _ = convexGaussian(np.eye(16) / 16, fock4)
    assert verdict

def test_odd_admixture_is_rejected(fock4):
    psi = (fock4.vacuum() + fock4.basisState([1])) / math.sqrt(2)
    with pytest.raises(ContractError):
        convexGaussian(np.outer(psi, psi.conj()), fock4)

def test_a8_gaussian_fidelity(fock4):
    report = gaussFidelity(a8State(fock4), fock4)
    assert report["fidelity"] == pytest.approx(0.5)
    assert report["trace_distance_lower"] <= report["trace_distance_upper"]

def test_pure_gaussian_has_unit_fidelity(fock4):
    psi = randomPureGaussian(fock4, '+', seed=3)
    assert pureConcurrence(psi[fock4.sectorIndices('+')], thetaPlus(fock4)) == pytest.approx(0.0, abs=1e-10)
    assert gaussFidelity(psi, fock4)["fidelity"] == pytest.approx(1.0, abs=1e-8)

@pytest.mark.parametrize("p", np.linspace(0, 1 / math.sqrt(2), 6))
def test_generalized_schmidt_round_trip(fock4, rng, p):
    psiG = randomPureGaussian(fock4, '+', rng)[fock4.sectorIndices('+')]
    psi = schmidtCombination(psiG, float(p), fock4)
    recovered, gaussian, phase = generalizedSchmidt(psi, fock4)
    assert recovered == pytest.approx(p, abs=1e-9)
    np.testing.assert_allclose(schmidtCombination(gaussian, recovered, fock4, phase), psi, atol=1e-9)
    assert pureConcurrence(psi, thetaPlus(fock4)) == pytest.approx(schmidtConcurrence(float(p)), abs=1e-9)

def test_a8_sits_at_the_top_of_the_schmidt_range(fock4):
    p, _, _ = generalizedSchmidt(a8Vector(fock4), fock4)
    assert p == pytest.approx(1 / math.sqrt(2), abs=1e-9)

def test_schmidt_parameter_range():
    with pytest.raises(UsageError):
        schmidtCombination(np.zeros(8), 0.9)

def test_a8_threshold():
    result = namedThreshold("a8-depol")
    assert result["p_cr"] == pytest.approx(8 / 11, abs=1e-12)
    assert result["exact"] == Fraction(8, 11)

def test_werner_threshold():
    assert namedThreshold("werner")["p_cr"] == pytest.approx(2 / 3, abs=1e-12)

@pytest.mark.parametrize("d", [5, 6])
def test_fermion_threshold_matches_closed_form(d):
    result = namedThreshold("ferm-depol", {"d": d})
    assert result["p_cr"] == pytest.approx(float(result["exact"]), abs=1e-9)
    assert exactThreshold("ferm-depol", {"d": d}) == result["exact"]

def test_unknown_family_gets_a_hint():
    assert "werner" in familyNames()
    with pytest.raises(UsageError, match="did you mean 'werner'"):
        namedThreshold("wernerr")

def test_solver_needs_a_sign_change():
    with pytest.raises(NumericalError):
        thresholdSolver(lambda p: p, lambda x: 1.0)

def test_solver_finds_linear_root():
    assert thresholdSolver(lambda p: p, lambda x: 0.25 - x) == pytest.approx(0.25, abs=1e-12)
