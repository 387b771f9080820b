""" Scripted desk-scale reproductions with a pass/fail verdict each """

# Import necessary libraries
import math
import time
import logging
import numpy as np
import pandas as pd
from fractions import Fraction
from typing import Callable, Dict, List

# Import custom modules
from config.config import DemoOutcome
from utils.helpers import formatFloat, formatRational
from linalg_core.haar import makeRng
from linalg_core.operators import numericRank, randomDensity, randomPureState
from fock_majorana.fock_algebra import buildFock
from fock_majorana.gaussian_states import a8State, depolarizedA8, randomPureGaussian
from coherent_classes.carriers import carrierDim, classSpec
from coherent_classes.class_operators import classOperatorK, classProjector, gaussianNullOracle, gaussP0, projectorRank
from coherent_classes.gme import gmeOperator, gmeValue, gmeValueByPermutations
from coherent_classes.invariants import pureInvariant
from coherent_classes.members import classMixture, genericState, randomBiseparable, randomMember
from witnesses.bilinear import bilinearConstant, bilinearWitness, densify, detect2, gaussConstant, printedGaussConstant
from witnesses.cones import (coneMembership, extremeRays, gaussConeDeterminant, inclusionExclusion, inequalityValues,
                             restrictionResidual)
from witnesses.depolarization import fermionDepolarizationThreshold
from witnesses.multilinear import detectK, multilinearWitness, schmidtWitnessConstants
from concurrence.uhlmann import singlet, wootters2q
from concurrence.gaussian_four_mode import gaussConcurrences, gaussFidelity, generalizedSchmidt, schmidtCombination
from concurrence.threshold import namedThreshold
from typicality.bounds import pmaxProfile
from typicality.haar_averages import haarAverageBilinear, haarAverageKlinear
from typicality.monte_carlo import haarMeanEstimate, mcFraction
from typicality.parameters import classParams, pmaxCritical

# Configure logging
logger = logging.getLogger(__name__)

GAUSS_CONE_MAX_D = 64

def a8ThresholdDemo(seed: int = 0) -> DemoOutcome:
    """ Depolarized a8: bisection on the + sector concurrence against 8/11 """
    result = namedThreshold("a8-depol")
    p_cr = result["p_cr"]
    alg = buildFock(4)
    closed = all(abs(gaussConcurrences(depolarizedA8(alg, p), alg)[0] - max(0.0, 1 - 11 * p / 8)) < 1e-10
                 for p in (0.0, 0.2, 0.5, 8 / 11, 0.9))
    passed = abs(p_cr - 8 / 11) < 1e-9 and closed
    return DemoOutcome("a8-threshold", passed, f"p_cr = {formatFloat(p_cr)} (= {formatRational(result['exact'])})")

def gaussProjectorDemo(seed: int = 0) -> DemoOutcome:
    errors = []
    traces_ok = True
    for d in (2, 3, 4):
        closed = gaussP0(d).toDense()
        errors.append(float(np.linalg.norm(closed - gaussianNullOracle(d))))
        traces_ok = traces_ok and round(float(np.real(np.trace(closed)))) == math.comb(2 * d, d)
    worst = max(errors)
    return DemoOutcome("gauss-projector", worst < 1e-10 and traces_ok, f"max Frobenius error {worst:.3e}")

def projectorRankDemo(seed: int = 0) -> DemoOutcome:
    cases = [(classSpec('dist', (2, 2)), 2)]
    cases += [(classSpec('bos', (d,), L=2), k) for d in (2, 3) for k in (2, 3)]
    cases += [(classSpec('ferm', (d,), L=2), k) for d in (4, 5) for k in (2, 3)]
    mismatches = []
    for spec, k in cases:
        rank = numericRank(classProjector(spec, k).toDense())
        expected = projectorRank(spec, k)
        if rank != expected:
            mismatches.append(f"{spec.tag} d={spec.d} k={k}: {rank} != {expected}")
    return DemoOutcome("projector-ranks", not mismatches, "; ".join(mismatches) or f"{len(cases)} cases match")

def _pureClasses():
    return [
        classSpec('dist', (2, 2)),
        classSpec('dist', (2, 2, 2)),
        classSpec('bos', (2,), L=3),
        classSpec('ferm', (5,), L=2),
        classSpec('gauss', (4,), sector='+'),
    ]

def pureExactnessDemo(seed: int = 0, count: int = 50) -> DemoOutcome:
    """ Members give a zero invariant and a zero witness value; Haar-random states a positive invariant """
    rng = makeRng(seed)
    worst = 0.0
    worst_value = 0.0
    borderline = 0
    # Every even three-mode state is Gaussian, so d = 3 only enters the member check
    for spec in _pureClasses() + [classSpec('gauss', (3,), sector='+')]:
        w = densify(bilinearWitness(spec))
        for _ in range(count):
            psi = randomMember(spec, rng)
            worst = max(worst, abs(pureInvariant(psi, spec)))
            worst_value = max(worst_value, abs(detect2(w, psi, psi)))
    for spec in _pureClasses():
        borderline += sum(1 for _ in range(count) if pureInvariant(genericState(spec, rng), spec) <= 1e-10)
    total = count * len(_pureClasses())
    passed = worst < 1e-10 and worst_value < 1e-10 and borderline <= 0.01 * total
    return DemoOutcome("pure-exactness", passed,
                       f"max member invariant {worst:.3e}, max member value {worst_value:.3e}, "
                       f"{borderline}/{total} generic states borderline")

def witnessSoundnessDemo(seed: int = 0, pairs: int = 30) -> DemoOutcome:
    """ Class mixtures against arbitrary states for detect2, and class mixtures on every copy for the Schmidt witness """
    rng = makeRng(seed)
    worst = -np.inf
    for spec in _pureClasses():
        w = densify(bilinearWitness(spec))
        N = carrierDim(spec)
        for _ in range(pairs):
            worst = max(worst, detect2(w, classMixture(spec, rng), randomDensity(N, rng)))
    spec = classSpec('schmidt', (3, 3), n=2)
    wk = densify(multilinearWitness(classOperatorK(spec, 3)))
    worst_k = max(detectK(wk, [classMixture(spec, rng) for _ in range(3)]) for _ in range(pairs))
    passed = worst <= 1e-10 and worst_k <= 1e-10
    return DemoOutcome("witness-soundness", passed,
                       f"largest value on class mixtures {worst:.3e}, Schmidt k=3 {worst_k:.3e}")

def constantsDemo(seed: int = 0) -> DemoOutcome:
    checks = [bilinearConstant(classSpec('dist', (2,) * L)) == 1 - Fraction(2, 2 ** L) for L in range(2, 6)]
    checks += [bilinearConstant(classSpec('ferm', (d,), L=2)) == Fraction(1, 3) for d in (4, 5, 6)]
    checks += [gaussConstant(2) == 0, gaussConstant(3) == 0, gaussConstant(4) == Fraction(1, 4)]
    schmidt = schmidtWitnessConstants(3, 2)
    checks.append(schmidt["p_cr"] == Fraction(9, 296))
    printed = printedGaussConstant(4)
    return DemoOutcome("constants", all(checks),
                       f"{sum(checks)}/{len(checks)} exact constants match; printed sum gives c_4 = "
                       f"{formatRational(printed)}, served {formatRational(gaussConstant(4))}")

def haarMeanDemo(seed: int = 0, samples: int = 2000) -> DemoOutcome:
    rng = makeRng(seed)
    spec = classSpec('ferm', (4,), L=2)
    w = densify(bilinearWitness(spec))
    rho1, rho2 = randomDensity(6, rng), randomDensity(6, rng, rank=1)
    mean, stderr = haarMeanEstimate(w, [rho1, rho2], samples, seed)
    expected = haarAverageBilinear(w, rho1, rho2)

    schmidt = classSpec('schmidt', (3, 3), n=2)
    op = classOperatorK(schmidt, 3)
    rho, psi = randomDensity(9, rng), randomPureState(9, rng)
    mean_k, stderr_k = haarMeanEstimate(densify(multilinearWitness(op)), [rho, psi, psi], samples, seed)
    expected_k = haarAverageKlinear(op, rho, psi)

    passed = abs(mean - expected) <= 4 * stderr and abs(mean_k - expected_k) <= 4 * stderr_k
    return DemoOutcome("haar-mean", passed,
                       f"ferm MC {mean:.6f} +- {stderr:.2e} vs {expected:.6f}; "
                       f"Schmidt k=3 MC {mean_k:.6f} +- {stderr_k:.2e} vs {expected_k:.6f}")

def sweepAbove(p_cr: float, offset: float = 0.05, step: float = 0.05) -> List[float]:
    """ p_cr + offset, p_cr + offset + step, ... below 1, then 1 itself """
    count = int(math.floor((1.0 - p_cr - offset) / step + 1e-9)) + 1
    points = [p_cr + offset + i * step for i in range(max(count, 0))]
    return [p for p in points if p < 1.0 - 1e-12] + [1.0]

def typicalityDemo(seed: int = 0, samples: int = 500) -> DemoOutcome:
    details = []
    passed = True
    expected = {('dist', (2, 2)): Fraction(2, 3), ('ferm', (4,)): Fraction(3, 4), ('gauss', (4,)): Fraction(4, 5)}
    specs = [classSpec('dist', (2, 2)), classSpec('ferm', (4,), L=2), classSpec('gauss', (4,), sector='+')]
    for spec in specs:
        params = classParams(spec)
        p_cr = pmaxCritical(params)
        passed = passed and p_cr == expected[(spec.tag, spec.dims)]
        N = params.N
        flat = mcFraction(pmaxProfile(1.0 / N, N), spec, samples, seed)
        passed = passed and flat.fraction == 0
        for pmax in sweepAbove(float(p_cr)):
            report = mcFraction(pmaxProfile(pmax, N), spec, samples, seed)
            if report.fraction < report.analytic_bound - 3 * report.stderr:
                passed = False
                details.append(f"{spec.tag} p_max={pmax:.3f}: {report.fraction:.3f} below bound {report.analytic_bound:.3f}")
        details.append(f"{spec.tag} p_cr={formatRational(p_cr)} pure fraction={report.fraction:.3f}")
    return DemoOutcome("typicality", passed, "; ".join(details))

def concurrenceDemo(seed: int = 0) -> DemoOutcome:
    rng = makeRng(seed)
    bell = wootters2q(np.outer(singlet(), singlet().conj()))
    werner = namedThreshold("werner")["p_cr"]
    alg = buildFock(4)
    worst_p = 0.0
    for p in np.linspace(0, 1 / math.sqrt(2), 9):
        psiG = randomPureGaussian(alg, '+', rng)[alg.sectorIndices('+')]
        psi = schmidtCombination(psiG, float(p), alg)
        worst_p = max(worst_p, abs(generalizedSchmidt(psi, alg)[0] - p))
    fidelity = gaussFidelity(a8State(alg), alg)["fidelity"]
    ferm = max(abs(namedThreshold("ferm-depol", {"d": d})["p_cr"]
                   - float(fermionDepolarizationThreshold(d, [Fraction(4, 5), Fraction(3, 5)]))) for d in (5, 6))
    passed = abs(bell - 1) < 1e-10 and abs(werner - 2 / 3) < 1e-9 and worst_p < 1e-9 \
        and abs(fidelity - 0.5) < 1e-10 and ferm < 1e-9
    return DemoOutcome("concurrence", passed,
                       f"Bell {formatFloat(bell)}, Werner p_cr {formatFloat(werner)}, F_Gauss(a8) {formatFloat(fidelity)}")

def conesDemo(seed: int = 0) -> DemoOutcome:
    rng = makeRng(seed)
    ok = True
    for L in range(1, 6):
        a = [Fraction(int(x), int(y)) for x, y in zip(rng.integers(-9, 10, 2 ** L), rng.integers(1, 9, 2 ** L))]
        spec = classSpec('dist', (2,) * L)
        b = inequalityValues(spec, a)
        ok = ok and inclusionExclusion(b, L) == a
    for spec in (classSpec('dist', (2, 2, 2)), classSpec('bos', (3,), L=3), classSpec('ferm', (6,), L=3),
                 classSpec('gauss', (6,), sector='+')):
        for ray in extremeRays(spec):
            values = inequalityValues(spec, ray.coefficients)
            ok = ok and coneMembership(ray) and sum(1 for v in values if v != 0) == 1
    ok = ok and len(extremeRays(classSpec('gauss', (12,), sector='+'))) == 7
    residual = max(restrictionResidual(spec) for spec in (classSpec('bos', (3,), L=3), classSpec('ferm', (6,), L=3)))
    singular = [d for d in range(2, GAUSS_CONE_MAX_D + 1) if gaussConeDeterminant(d) == 0]
    ok = ok and residual < 1e-12 and not singular
    return DemoOutcome("cones", ok, f"inclusion-exclusion and extreme rays exact, L=3 restriction residual {residual:.1e}, "
                                    f"Gaussian b-matrix singular for d in {singular or 'none'} up to {GAUSS_CONE_MAX_D}")

def gmeDemo(seed: int = 0, count: int = 20, tuples: int = 2) -> DemoOutcome:
    """ A_GME on biseparable and GHZ states, its bipartite factorization, and six-copy soundness """
    rng = makeRng(seed)
    worst = max(abs(gmeValueByPermutations(randomBiseparable(2, rng), 2)) for _ in range(count))
    ghz = np.zeros(8, dtype=complex)
    ghz[[0, 7]] = 1 / math.sqrt(2)
    psi = randomPureState(8, rng)
    factor = abs(gmeValueByPermutations(psi, 2) - gmeValue(psi, 2))
    op = gmeOperator(2)
    w = multilinearWitness(op)
    worst_k = max(detectK(w, [randomBiseparable(2, rng) for _ in range(6)], chunk=1) for _ in range(tuples))
    passed = worst < 1e-9 and gmeValueByPermutations(ghz, 2) > 0 and factor < 1e-9 and worst_k <= 1e-10
    return DemoOutcome("gme", passed, f"max biseparable value {worst:.3e}, six-copy witness {worst_k:.3e}, tr A = {op.traceA}")

DEMOS: Dict[str, Callable[..., DemoOutcome]] = {
    "a8-threshold": a8ThresholdDemo,
    "gauss-projector": gaussProjectorDemo,
    "projector-ranks": projectorRankDemo,
    "pure-exactness": pureExactnessDemo,
    "witness-soundness": witnessSoundnessDemo,
    "constants": constantsDemo,
    "haar-mean": haarMeanDemo,
    "typicality": typicalityDemo,
    "concurrence": concurrenceDemo,
    "cones": conesDemo,
}

SLOW_DEMOS: Dict[str, Callable[..., DemoOutcome]] = {
    "gme": gmeDemo,
}

# Sample counts of the full reproductions; the defaults are the quick ones
FULL_COUNTS: Dict[str, Dict[str, int]] = {
    "pure-exactness": {"count": 1000},
    "witness-soundness": {"pairs": 500},
    "haar-mean": {"samples": 10000},
    "typicality": {"samples": 10000},
    "gme": {"count": 200, "tuples": 5},
}

def runDemo(name: str, seed: int = 0, full: bool = False) -> DemoOutcome:
    """ Run one demo and time it; library errors become failed outcomes """
    demo = DEMOS.get(name) or SLOW_DEMOS.get(name)
    counts = FULL_COUNTS.get(name, {}) if full else {}
    start = time.time()
    logger.info(f"Running demo {name}" + (f" with {counts}" if counts else ""))
    try:
        outcome = demo(seed, **counts)
    except Exception as e:
        logger.exception(f"Demo {name} raised")
        outcome = DemoOutcome(name, False, f"{type(e).__name__}: {e}")
    outcome.seconds = time.time() - start
    return outcome

def demoSuite(seed: int = 0, includeSlow: bool = False) -> List[DemoOutcome]:
    """ Every reproduction in order; includeSlow adds the GME check and runs the full sample counts """
    names = list(DEMOS) + (list(SLOW_DEMOS) if includeSlow else [])
    return [runDemo(name, seed, full=includeSlow) for name in names]

def outcomeTable(outcomes: List[DemoOutcome]) -> pd.DataFrame:
    return pd.DataFrame([{
        "demo": o.name,
        "result": "PASS" if o.passed else "FAIL",
        "seconds": round(o.seconds, 2),
        "detail": o.detail,
    } for o in outcomes], columns=["demo", "result", "seconds", "detail"])
