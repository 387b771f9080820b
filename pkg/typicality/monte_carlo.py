""" Monte Carlo estimate of the fraction of detected states on an isospectral manifold """

# Import necessary libraries
import math
import logging
import numpy as np
import pandas as pd
from scipy.linalg import expm
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

# Import custom modules
from config.config import ClassSpec, EstimatorReport, SpectrumProfile, Witness
from config.constants import DENSE_LIMIT, DETECTION_THRESHOLD, MAX_DIM
from config.settings import RuntimeSettings
from utils.errors import SizeError, UsageError
from utils.helpers import wilsonInterval
from linalg_core.haar import conjugate, haarDistance, haarUnitary, makeRng, splitStreams
from coherent_classes.carriers import carrierDim
from coherent_classes.class_operators import classOperatorK
from witnesses.bilinear import bilinearWitness, densify, detect2
from witnesses.multilinear import detectK, multilinearWitness
from typicality.bounds import lowerBound, pmaxProfile
from typicality.parameters import classParams, pmaxCritical

# Configure logging
logger = logging.getLogger(__name__)

# Samples drawn from one random stream; streams do not depend on the shard count
BLOCK_SIZE = 250

MIN_SAMPLES = 100

class OrbitSampler:
    """
        f(U) = tr((U rho0 U^dag (x) (U psi0 psi0^dag U^dag)^{(x)(k-1)}) V)

        rho0 is diagonal in the computational basis with the given spectrum and
        psi0 = e_1 is its top eigenvector.
    """

    def __init__(self, spec: ClassSpec, spectrum: SpectrumProfile, witness: Optional[Witness] = None):
        self.spec = spec
        self.N = carrierDim(spec)
        if self.N * self.N > MAX_DIM:
            raise SizeError(f"Haar sampling on a carrier of dim {self.N} exceeds the limit of {MAX_DIM} matrix entries")
        if spectrum.N != self.N:
            raise UsageError(f"Spectrum of length {spectrum.N} does not match carrier dim {self.N}")
        self.spectrum = spectrum
        self.witness = witness if witness is not None else defaultWitness(spec)
        self.k = self.witness.k
        self.rho0 = np.diag(np.asarray(spectrum.p, dtype=complex))
        self.psi0 = np.zeros(self.N, dtype=complex)
        self.psi0[0] = 1.0

    def value(self, U: np.ndarray) -> float:
        rho = conjugate(U, self.rho0)
        psi = U @ self.psi0
        if self.k == 2:
            return detect2(self.witness, rho, psi)
        return detectK(self.witness, [rho] + [psi] * (self.k - 1))

def defaultWitness(spec: ClassSpec, denseLimit: int = DENSE_LIMIT) -> Witness:
    """ Bilinear witness for the particle and Gaussian classes, k-linear for Schmidt and GME """
    if spec.tag in ('schmidt', 'gme'):
        k = spec.n + 1 if spec.tag == 'schmidt' else 6
        return multilinearWitness(classOperatorK(spec, k))
    w = bilinearWitness(spec)
    if carrierDim(spec) ** 2 <= denseLimit:
        w = densify(w, denseLimit)
    return w

def _blockCounts(samples: int) -> List[int]:
    blocks = math.ceil(samples / BLOCK_SIZE)
    return [min(BLOCK_SIZE, samples - b * BLOCK_SIZE) for b in range(blocks)]

def _runBlocks(sampler: OrbitSampler, blocks: Sequence[Tuple[int, int, np.random.Generator]]) -> Dict[int, Tuple[int, float]]:
    out = {}
    for index, count, rng in blocks:
        detected, total = 0, 0.0
        for _ in range(count):
            f = sampler.value(haarUnitary(sampler.N, rng))
            total += f
            if f > DETECTION_THRESHOLD:
                detected += 1
        out[index] = (detected, total)
    return out

def mcFraction(spectrum: SpectrumProfile, spec: ClassSpec, samples: int, seed: int = 0, shards: int = 1,
               witness: Optional[Witness] = None) -> EstimatorReport:
    """
        Fraction of Haar-random states on the orbit that the witness detects

        The samples are cut into fixed blocks, each with its own random stream,
        and shards take blocks round-robin. Counts are merged in block order, so
        the report depends on the seed but not on the number of shards.

        Args:
            spectrum (SpectrumProfile): Ordered spectrum of length N
            spec (ClassSpec): Class descriptor
            samples (int): Number of Haar samples, at least 100
            seed (int): Root seed
            shards (int): Number of shards; at most QCORR_THREADS run at once
            witness (Witness, optional): Witness to evaluate; the class default otherwise

        Returns:
            EstimatorReport: Detected fraction, Wilson half-width and the analytic bound
    """
    if samples < MIN_SAMPLES:
        raise UsageError(f"Need at least {MIN_SAMPLES} samples, got {samples}")
    if shards < 1:
        raise UsageError("shards must be positive")
    sampler = OrbitSampler(spec, spectrum, witness)
    counts = _blockCounts(samples)
    streams = splitStreams(seed, len(counts))
    blocks = [(b, counts[b], streams[b]) for b in range(len(counts))]
    workers = min(shards, RuntimeSettings.threadCap())
    logger.info(f"Sampling {samples} states for {spec.tag} in {len(blocks)} blocks over {shards} shards ({workers} threads)")

    results: Dict[int, Tuple[int, float]] = {}
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_runBlocks, sampler, blocks[s::shards]) for s in range(shards)]
        for future in futures:
            results.update(future.result())

    detected = sum(results[b][0] for b in range(len(blocks)))
    total = 0.0
    for b in range(len(blocks)):
        total += results[b][1]
    _, half, fraction = wilsonInterval(detected, samples)

    params = classParams(spec)
    kind = 'bilinear' if sampler.k == 2 else 'klinear'
    return EstimatorReport(
        samples=samples,
        detected=detected,
        fraction=fraction,
        stderr=half,
        analytic_bound=lowerBound(spectrum, params, kind),
        p_max_cr=float(pmaxCritical(params)),
        seed=seed,
        shards=shards,
        mean_value=total / samples,
    )

def typicalityScan(spec: ClassSpec, pmaxValues: Sequence[float], samples: int, seed: int = 0,
                   shards: int = 1) -> pd.DataFrame:
    """
        Sweep p_max with the remaining spectrum uniform

        Points below 1/N have no such spectrum; they are logged and left out.

        Returns:
            pd.DataFrame: Columns p_max, delta, analytic_bound, mc_fraction, stderr
    """
    N = carrierDim(spec)
    if N * N > MAX_DIM:
        raise SizeError(f"Haar sampling on a carrier of dim {N} exceeds the limit of {MAX_DIM} matrix entries")
    p_cr = float(pmaxCritical(classParams(spec)))
    floor = 1.0 / N
    points = []
    for pmax in pmaxValues:
        if pmax < floor - 1e-15 or pmax > 1.0:
            logger.warning(f"Skipping p_max = {pmax}: outside [1/N, 1] for N = {N}")
            continue
        points.append(pmax)
    if not points:
        raise UsageError(f"No sweep point lies in [1/N, 1] for N = {N}")
    rows = []
    for pmax in points:
        report = mcFraction(pmaxProfile(pmax, N), spec, samples, seed, shards)
        rows.append({
            "p_max": pmax,
            "delta": pmax - p_cr,
            "analytic_bound": report.analytic_bound,
            "mc_fraction": report.fraction,
            "stderr": report.stderr,
        })
    return pd.DataFrame(rows, columns=["p_max", "delta", "analytic_bound", "mc_fraction", "stderr"])

def parseSweep(text: str) -> List[float]:
    """ "pmax:0.2:1.0:0.05" -> [0.2, 0.25, ..., 1.0] """
    parts = text.split(":")
    if len(parts) != 4 or parts[0] != "pmax":
        raise UsageError(f"Sweep must look like pmax:start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(x) for x in parts[1:])
    except ValueError as e:
        raise UsageError(f"Malformed sweep {text!r}") from e
    if step <= 0 or stop < start:
        raise UsageError(f"Sweep needs step > 0 and stop >= start, got {text!r}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 12) for i in range(count)]

def haarMeanEstimate(w: Witness, states: Sequence, samples: int, seed: int = 0) -> Tuple[float, float]:
    """
        Sample mean and standard error of the witness value over U-conjugated states

        Args:
            w (Witness): k-copy witness
            states (Sequence): k density matrices or vectors, all conjugated by the same U
            samples (int): Number of Haar samples
            seed (int): Seed

        Returns:
            Tuple[float, float]: (mean, standard error of the mean)
    """
    rng = makeRng(seed)
    arrays = [np.asarray(getattr(s, "matrix", s), dtype=complex) for s in states]
    N = arrays[0].shape[0]
    values = np.empty(samples)
    for i in range(samples):
        U = haarUnitary(N, rng)
        moved = [U @ a if a.ndim == 1 else conjugate(U, a) for a in arrays]
        values[i] = detect2(w, *moved) if w.k == 2 else detectK(w, moved)
    return float(values.mean()), float(values.std(ddof=1) / math.sqrt(samples))

def lipschitzRatio(spec: ClassSpec, spectrum: SpectrumProfile, pairs: int, seed: int = 0, scale: float = 0.1) -> float:
    """ Largest |f(U1) - f(U2)| / ||U1 - U2||_HS over nearby random pairs """
    sampler = OrbitSampler(spec, spectrum)
    rng = makeRng(seed)
    worst = 0.0
    for _ in range(pairs):
        U1 = haarUnitary(sampler.N, rng)
        g = rng.standard_normal((sampler.N, sampler.N)) + 1j * rng.standard_normal((sampler.N, sampler.N))
        H = (g + g.conj().T) / 2
        H = H / np.linalg.norm(H)
        U2 = U1 @ expm(1j * scale * rng.random() * H)
        distance = haarDistance(U1, U2)
        if distance > 1e-12:
            worst = max(worst, abs(sampler.value(U1) - sampler.value(U2)) / distance)
    return worst

def stabilizerResidual(spec: ClassSpec, spectrum: SpectrumProfile, trials: int, seed: int = 0) -> float:
    """ max |f(U) - f(U h)| for random diagonal phases h, which commute with rho0 """
    sampler = OrbitSampler(spec, spectrum)
    rng = makeRng(seed)
    worst = 0.0
    for _ in range(trials):
        U = haarUnitary(sampler.N, rng)
        h = np.diag(np.exp(2j * np.pi * rng.random(sampler.N)))
        worst = max(worst, abs(sampler.value(U) - sampler.value(U @ h)))
    return worst
