""" Class parameters, Haar averages, concentration bounds and the Monte Carlo estimator """

# Import necessary libraries
import math
import pytest
import numpy as np
from fractions import Fraction

# Import custom modules
from utils.errors import SizeError, UsageError
from config.config import ClassParams
from config.settings import RuntimeSettings
from linalg_core.operators import randomDensity, randomPureState
from coherent_classes.carriers import classSpec, specFromOptions
from coherent_classes.class_operators import classOperatorK, symDim
from witnesses.bilinear import bilinearWitness, densify, gaussConstant
from witnesses.multilinear import multilinearWitness
from typicality.parameters import (bosonProjectorTrace, classParams, klinearParams, paramsSummary, pmaxCritical,
                                   twoCopyTrace)
from typicality.bounds import concentrationBound, lowerBound, pmaxProfile, spectrumProfile
from typicality.haar_averages import haarAverageBilinear, haarAverageKlinear, optimalKlinearAverage, symOverlap
from typicality.monte_carlo import (haarMeanEstimate, lipschitzRatio, mcFraction, parseSweep, stabilizerResidual,
                                    typicalityScan)
from typicality.asymptotics import asymptoticRow, asymptoticTrend, tableRow

@pytest.mark.parametrize("spec, N, X, c, p_cr", [
    (classSpec('dist', (2, 2)), 4, Fraction(1, 10), Fraction(1, 2), Fraction(2, 3)),
    (classSpec('bos', (2,), L=2), 3, Fraction(1, 8), Fraction(1, 2), Fraction(3, 5)),
    (classSpec('ferm', (4,), L=2), 6, Fraction(1, 21), Fraction(1, 3), Fraction(3, 4)),
    (classSpec('gauss', (4,), sector='+'), 8, Fraction(1, 36), Fraction(1, 4), Fraction(4, 5)),
])
def test_bilinear_parameters(spec, N, X, c, p_cr):
    params = classParams(spec)
    assert (params.N, params.X, params.c) == (N, X, c)
    assert pmaxCritical(params) == p_cr

def test_boson_projector_trace():
    assert bosonProjectorTrace(2, 2) == Fraction(21, 4)
    assert twoCopyTrace(classSpec('bos', (2,), L=2)) == Fraction(3, 4)

def test_schmidt_klinear_parameters():
    params = klinearParams(classSpec('schmidt', (3, 3), n=2))
    assert params.k == 3
    assert params.X == Fraction(1, 165)
    assert params.c == 2

def test_klinear_average_vanishes_at_the_critical_value():
    spec = classSpec('schmidt', (3, 3), n=2)
    p_cr = pmaxCritical(klinearParams(spec))
    assert optimalKlinearAverage(classOperatorK(spec, 3), float(p_cr)) == pytest.approx(0.0, abs=1e-12)

def test_gaussian_parameters_without_fock_space():
    params = classParams(specFromOptions({"class": "gauss", "d": 20, "sector": "+"}))
    N = 2 ** 19
    assert params.N == N
    assert params.X == 1 - Fraction(math.comb(40, 20), N * (N + 1))
    assert params.c == gaussConstant(20)

def test_params_summary_uses_exact_strings():
    summary = paramsSummary(classParams(classSpec('dist', (2, 2))))
    assert summary["X"] == "1/10"
    assert summary["p_max_cr"] == "2/3"

def test_gaussian_parameters_need_four_modes():
    with pytest.raises(UsageError):
        classParams(classSpec('gauss', (3,), sector='+'))

def test_spectrum_is_validated_and_sorted():
    profile = spectrumProfile([0.1, 0.6, 0.3])
    assert profile.p == (0.6, 0.3, 0.1)
    assert profile.pmax == 0.6
    with pytest.raises(UsageError):
        spectrumProfile([0.5, 0.2])
    with pytest.raises(UsageError):
        spectrumProfile([1.2, -0.2])

def test_roundoff_negative_entries_count_as_zero():
    profile = spectrumProfile([0.5, 0.5 + 1e-13, -1e-13])
    assert profile.p[-1] == 0.0
    assert min(profile.p) >= 0.0

def test_pmax_profile_spreads_the_rest():
    profile = pmaxProfile(0.7, 4)
    assert profile.N == 4
    np.testing.assert_allclose(profile.p[1:], [0.1, 0.1, 0.1])

def test_bound_vanishes_below_the_critical_value():
    params = classParams(classSpec('dist', (2, 2)))
    assert lowerBound(pmaxProfile(0.6, 4), params) == 0.0
    pure = lowerBound(pmaxProfile(1.0, 4), params)
    assert 0 < pure < 1

def test_concentration_bound_grows_with_dimension():
    assert concentrationBound(100, 0.1, 4) < concentrationBound(10000, 0.1, 4)
    assert concentrationBound(100, -0.1, 4) == 0.0

def test_bilinear_average_of_a_pure_state_pair_is_alpha():
    w = bilinearWitness(classSpec('dist', (2, 2)))
    psi = np.array([1, 0, 0, 0], dtype=complex)
    assert haarAverageBilinear(w, psi, psi) == pytest.approx(0.1)

def test_sym_overlap_of_identical_pure_states():
    psi = np.array([0, 1], dtype=complex)
    assert symOverlap(np.outer(psi, psi.conj()), psi, 3) == pytest.approx(1.0)

def test_klinear_average_of_a_pure_state_is_x(rng):
    op = classOperatorK(classSpec('schmidt', (3, 3), n=2), 3)
    psi = randomPureState(9, rng)
    assert haarAverageKlinear(op, np.outer(psi, psi.conj()), psi) == pytest.approx(float(Fraction(op.traceA, symDim(9, 3))))

def test_klinear_average_on_two_copies_is_the_bilinear_one(rng):
    spec = classSpec('dist', (2, 2))
    op = classOperatorK(spec, 2)
    params = ClassParams(spec=spec, N=4, X=Fraction(op.traceA) / symDim(4, 2), c=Fraction(1))
    rho, psi = randomDensity(4, rng), randomPureState(4, rng)
    assert haarAverageKlinear(op, rho, psi) == pytest.approx(haarAverageBilinear(params, rho, psi), abs=1e-12)

def test_klinear_haar_mean_matches_closed_form(rng):
    op = classOperatorK(classSpec('schmidt', (3, 3), n=2), 3)
    w = densify(multilinearWitness(op))
    rho, psi = randomDensity(9, rng), randomPureState(9, rng)
    mean, stderr = haarMeanEstimate(w, [rho, psi, psi], 1500, seed=6)
    assert abs(mean - haarAverageKlinear(op, rho, psi)) <= 5 * stderr

def test_haar_mean_matches_closed_form(rng):
    spec = classSpec('ferm', (4,), L=2)
    w = densify(bilinearWitness(spec))
    rho1, rho2 = randomDensity(6, rng), randomDensity(6, rng, rank=1)
    mean, stderr = haarMeanEstimate(w, [rho1, rho2], 1000, seed=4)
    assert abs(mean - haarAverageBilinear(w, rho1, rho2)) <= 5 * stderr

def test_estimator_does_not_depend_on_shards(monkeypatch):
    spec = classSpec('dist', (2, 2))
    profile = pmaxProfile(0.95, 4)
    single = mcFraction(profile, spec, 600, seed=9, shards=1)
    monkeypatch.setenv("QCORR_THREADS", "4")
    RuntimeSettings.reset()
    sharded = mcFraction(profile, spec, 600, seed=9, shards=4)
    assert single.detected == sharded.detected
    assert single.mean_value == sharded.mean_value
    assert sharded.shards == 4

def test_estimator_depends_on_the_seed():
    spec = classSpec('dist', (2, 2))
    profile = pmaxProfile(0.9, 4)
    assert mcFraction(profile, spec, 300, seed=1).mean_value != mcFraction(profile, spec, 300, seed=2).mean_value

@pytest.mark.parametrize("spec", [classSpec('dist', (2, 2)), classSpec('ferm', (4,), L=2)],
                         ids=lambda s: s.tag)
def test_flat_spectrum_is_never_detected(spec):
    N = classParams(spec).N
    report = mcFraction(pmaxProfile(1.0 / N, N), spec, 200, seed=0)
    assert report.detected == 0
    assert report.fraction == 0.0
    assert report.analytic_bound == 0.0

def test_pure_states_are_mostly_detected():
    spec = classSpec('ferm', (4,), L=2)
    report = mcFraction(pmaxProfile(1.0, 6), spec, 300, seed=0)
    assert report.fraction >= report.analytic_bound - 3 * report.stderr
    assert report.p_max_cr == pytest.approx(0.75)

def test_estimator_needs_enough_samples():
    with pytest.raises(UsageError):
        mcFraction(pmaxProfile(1.0, 4), classSpec('dist', (2, 2)), 50)

def test_estimator_checks_spectrum_length():
    with pytest.raises(UsageError):
        mcFraction(pmaxProfile(1.0, 5), classSpec('dist', (2, 2)), 100)

def test_scan_table_columns():
    frame = typicalityScan(classSpec('dist', (2, 2)), [0.5, 1.0], 100, seed=3)
    assert list(frame.columns) == ["p_max", "delta", "analytic_bound", "mc_fraction", "stderr"]
    assert frame["delta"].iloc[0] == pytest.approx(0.5 - 2 / 3)

def test_scan_skips_points_below_the_flat_spectrum():
    frame = typicalityScan(classSpec('dist', (2, 2)), [0.2, 0.25, 1.0], 100, seed=3)
    assert list(frame["p_max"]) == [0.25, 1.0]

def test_scan_needs_a_feasible_point():
    with pytest.raises(UsageError):
        typicalityScan(classSpec('dist', (2, 2)), [0.1, 0.2], 100)

def test_sampling_refuses_huge_carriers():
    spec = classSpec('gauss', (20,), sector='+')
    with pytest.raises(SizeError):
        typicalityScan(spec, [1.0], 100)
    with pytest.raises(SizeError):
        mcFraction(pmaxProfile(1.0, 2 ** 19), spec, 100)

def test_parse_sweep():
    assert parseSweep("pmax:0.2:0.4:0.1") == [0.2, 0.3, 0.4]
    with pytest.raises(UsageError):
        parseSweep("p:0:1:0.1")

def test_orbit_function_is_stabilizer_invariant():
    spec = classSpec('dist', (2, 2))
    assert stabilizerResidual(spec, spectrumProfile([0.7, 0.2, 0.1, 0.0]), 10, seed=1) < 1e-10

def test_orbit_function_is_lipschitz():
    spec = classSpec('dist', (2, 2))
    ratio = lipschitzRatio(spec, pmaxProfile(0.8, 4), 20, seed=2)
    assert 0 < ratio <= 4

def test_gaussian_asymptotic_row_is_exact():
    row = asymptoticRow("gauss", "ratio", d=4)
    assert row["N_exact"] == 8
    assert row["N_ratio"] == pytest.approx(1.0)
    assert row["N_pcr_exact"] == pytest.approx(6.4)
    assert np.isfinite(row["N_pcr_asymptotic"])

def test_distinguishable_fixed_dimension_row():
    row = asymptoticRow('dist', 'fixed_d', d=2, L=3)
    assert row["N_asymptotic"] == pytest.approx(8.0)
    assert row["N_pcr_asymptotic"] == pytest.approx(3.375)
    assert row["N_pcr_exact"] == pytest.approx(4.0)

def test_ratio_regime_rounds_particle_number():
    row = asymptoticRow('ferm', 'ratio', d=8, a=0.25)
    assert row["L"] == 2
    assert row["N_exact"] == 28

def test_trend_over_a_grid():
    rows = asymptoticTrend('dist', 'fixed_d', [{"d": 2, "L": 2}, {"d": 2, "L": 4}])
    assert [r["L"] for r in rows] == [2, 4]

def test_missing_table_row_gets_a_hint():
    with pytest.raises(UsageError, match="did you mean .gauss."):
        tableRow("gaus", "ratio")
    with pytest.raises(UsageError):
        tableRow("ferm", "fixed_d")
    with pytest.raises(UsageError):
        tableRow('dist', 'sideways')
