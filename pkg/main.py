""" Main entry point for the qcorr command line and HTTP service. """

# Import necessary libraries
import sys
import logging
import argparse
import warnings
import numpy as np
from fractions import Fraction
from typing import Any, Dict, List, Optional

# Import custom modules
from config.config import RunConfig
from config.constants import DEFAULT_SEED, DENSE_LIMIT, SERVICE_PORT
from utils.errors import ContractError, QcorrError, UsageError
from utils.helpers import formatFloat, formatRational, parseIntList, parseSpectrum, resolveClassName
from linalg_core.operators import denseOperator, stateVector
from linalg_core.serialization import (matrixToCsv, operatorFromJson, operatorToJson, readJson, tableToCsv,
                                       vectorFromJson, vectorToJson, writeJson, writeText)
from young_combinatorics.young_diagram import contentProduct, dimIrrep, hookProduct, youngDiagram
from fock_majorana.fock_algebra import buildFock
from fock_majorana.gaussian_states import correlationMatrix, randomPureGaussian
from coherent_classes.carriers import carrierDim, specFromOptions
from coherent_classes.class_operators import classOperatorK, denseClassOperator, projectorRank, specSummary
from coherent_classes.invariants import physicalInvariant, pureInvariant
from witnesses.bilinear import bilinearWitness, densify, detect2, witnessSummary
from witnesses.cones import coneInequalities, extremeRays
from witnesses.multilinear import schmidtWitnessConstants
from witnesses.ppt import minPartialTransposeEigenvalue
from concurrence.uhlmann import wootters2q
from concurrence.gaussian_four_mode import convexGaussian, gaussFidelity, generalizedSchmidt
from concurrence.threshold import familyNames, namedThreshold
from typicality.asymptotics import asymptoticRow
from typicality.bounds import lowerBound, spectrumProfile
from typicality.monte_carlo import mcFraction, parseSweep, typicalityScan
from typicality.parameters import classParams, paramsSummary
from demos.suite import DEMOS, SLOW_DEMOS, demoSuite, outcomeTable, runDemo
from service.app import app

# Suppress warnings for cleaner output
warnings.filterwarnings('ignore')

# Create a logger for this module
logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

# Output format when --format is not given
DEFAULT_FORMATS = {
    ("witness", "build"): 'json',
    ("class", "params"): 'json',
    ("cone", "rays"): 'csv',
    ("cone", "inequalities"): 'csv',
    ("gauss", "corr"): 'csv',
    ("typicality", "run"): 'json',
    ("typicality", "scan"): 'csv',
}

def configureLogging(level: int) -> None:
    """ Configure the root logger once; later calls only change the level """
    root = logging.getLogger()
    if not root.handlers:
        logging.basicConfig(level=level, format=LOG_FORMAT, handlers=[logging.StreamHandler()])
    root.setLevel(level)

def jsonReady(value: Any) -> Any:
    """ Rationals as "num/den", floats with 12 significant digits, arrays as lists """
    if isinstance(value, Fraction):
        return formatRational(value)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(formatFloat(value))
    if isinstance(value, complex):
        return [float(formatFloat(value.real)), float(formatFloat(value.imag))]
    if isinstance(value, np.ndarray):
        return jsonReady(value.tolist())
    if isinstance(value, dict):
        return {str(k): jsonReady(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonReady(v) for v in value]
    return value

def humanText(value: Any) -> str:
    if isinstance(value, dict):
        return "\n".join(f"{k}: {humanText(v)}" for k, v in value.items())
    if isinstance(value, Fraction):
        return formatRational(value)
    if isinstance(value, (float, np.floating)):
        return formatFloat(value)
    if isinstance(value, (list, tuple)):
        return ", ".join(humanText(v) for v in value)
    return str(value)

def emit(cfg: RunConfig, data: Any, rows: Optional[List[Dict[str, Any]]] = None, human: Optional[str] = None) -> None:
    """
        Write a result in the requested format

        Args:
            cfg (RunConfig): Output format and destination
            data: JSON-able result
            rows (List[dict], optional): Tabular form for csv
            human (str, optional): Preformatted human-readable text
    """
    if cfg.output_format == 'json':
        writeJson(jsonReady(data), cfg.out)
    elif cfg.output_format == 'csv':
        table = rows if rows is not None else [data if isinstance(data, dict) else {"value": data}]
        writeText(tableToCsv([jsonReady(r) for r in table]), cfg.out)
    else:
        writeText(human if human is not None else humanText(data), cfg.out)

def _options(args: argparse.Namespace) -> Dict[str, Any]:
    return {
        "class": getattr(args, "cls", None),
        "dims": getattr(args, "dims", None),
        "d": getattr(args, "d", None),
        "L": getattr(args, "L", None),
        "sector": getattr(args, "sector", None),
        "n": getattr(args, "n", None),
    }

def _spec(args: argparse.Namespace):
    return specFromOptions(_options(args))

def _loadDensity(path: str) -> np.ndarray:
    """ Operator JSON as a matrix; vector JSON becomes its projector """
    data = readJson(path)
    if "amplitudes" in data:
        return vectorFromJson(data).projector()
    return operatorFromJson(data, hermitian=True).matrix

def _require(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value

# Subcommand handlers

def runDims(args, cfg: RunConfig) -> int:
    if args.young:
        diagram = youngDiagram(args.young)
        n = _require(args.n, "--n")
        result = {"young": list(diagram.rows), "n": n, "g": hookProduct(diagram),
                  "f": contentProduct(diagram, n), "dim": dimIrrep(diagram, n)}
        emit(cfg, result, human=f"g={result['g']} f={result['f']} dim={result['dim']}")
        return 0
    spec = _spec(args)
    result = {"class": spec.tag, "carrier_dim": carrierDim(spec), "k": args.k}
    try:
        result["component_dim"] = projectorRank(spec, args.k)
    except UsageError:
        result["component_dim"] = None
    emit(cfg, result, human="\n".join(specSummary(spec) + [f"component dim (k={args.k}): {result['component_dim']}"]))
    return 0

def runClass(args, cfg: RunConfig) -> int:
    spec = _spec(args)
    if args.action == 'invariant':
        psi = vectorFromJson(readJson(_require(args.state, "--state")))
        value = physicalInvariant(psi, spec) if args.physical else pureInvariant(psi, spec)
        emit(cfg, {"class": spec.tag, "invariant": value}, human=formatFloat(value))
        return 0
    if args.action == 'build':
        op = classOperatorK(spec, args.k)
        dense = denseClassOperator(op, cfg.dense_limit)
        data = operatorToJson(denseOperator(dense.matrix, dense.factor_dims))
        data["trace"] = formatRational(op.traceA) if op.traceA is not None else None
        writeJson(data, cfg.out)
        return 0
    params = classParams(spec)
    emit(cfg, paramsSummary(params))
    return 0

def _witnessFromFile(path: str):
    summary = readJson(path)
    return densify(bilinearWitness(specFromOptions(summary)))

def runWitness(args, cfg: RunConfig) -> int:
    if args.action == 'build':
        spec = _spec(args)
        w = bilinearWitness(spec)
        emit(cfg, witnessSummary(w))
        return 0
    if args.action == 'detect':
        w = _witnessFromFile(_require(args.w, "--w"))
        value = detect2(w, _loadDensity(_require(args.a, "--a")), _loadDensity(_require(args.b, "--b")))
        emit(cfg, {"value": value, "detected": value > 1e-10}, human=formatFloat(value))
        return 0
    if args.action == 'schmidt':
        d, n = _require(args.d, "--d"), _require(args.n, "--n")
        emit(cfg, schmidtWitnessConstants(d, n))
        return 0
    rho = _loadDensity(_require(args.state, "--state"))
    dims = parseIntList(args.dims) if args.dims else None
    value = minPartialTransposeEigenvalue(rho, dims)
    emit(cfg, {"min_eigenvalue": value, "npt": value < -1e-10})
    return 0

def _coneColumn(label) -> str:
    if isinstance(label, tuple):
        return "a_" + ("".join(str(i + 1) for i in label) or "{}")
    return f"a_{label}"

def runCone(args, cfg: RunConfig) -> int:
    spec = _spec(args)
    if args.action == 'rays':
        rays = extremeRays(spec)
        labels = rays[0].labels
        rows = [{"ray": j, **{_coneColumn(label): q for label, q in zip(labels, ray.coefficients)}} for j, ray in enumerate(rays)]
    else:
        M = coneInequalities(spec)
        rows = [{"row": j, **{f"m_{k}": q for k, q in enumerate(row)}} for j, row in enumerate(M)]
    emit(cfg, rows, rows=rows)
    return 0

def runConc(args, cfg: RunConfig) -> int:
    if args.action == 'two-qubit':
        value = wootters2q(_loadDensity(_require(args.state, "--state")))
        emit(cfg, {"concurrence": value}, human=formatFloat(value))
        return 0
    if args.action == 'gauss4':
        rho = _loadDensity(_require(args.state, "--state"))
        _, report = convexGaussian(rho)
        try:
            report.update(gaussFidelity(rho))
        except ContractError as e:
            logger.info(f"Skipping Gaussian fidelity: {e}")
        emit(cfg, report)
        return 0
    if args.action == 'schmidt':
        data = readJson(_require(args.state, "--state"))
        p, psiG, phase = generalizedSchmidt(vectorFromJson(data).amplitudes)
        emit(cfg, {"p": p, "psi_G": vectorToJson(psiG), "phase": phase})
        return 0
    options = {}
    if args.d is not None:
        options["d"] = args.d
    result = namedThreshold(_require(args.family, "--family"), options)
    exact = f" (= {formatRational(result['exact'])})" if result["exact"] is not None else ""
    emit(cfg, result, human=f"p_cr = {formatFloat(result['p_cr'])}{exact}")
    return 0

def runGauss(args, cfg: RunConfig) -> int:
    if args.action == 'random':
        d = _require(args.d, "--d")
        psi = randomPureGaussian(d, args.parity, cfg.seed)
        writeJson(vectorToJson(stateVector(psi, (2,) * d)), cfg.out)
        return 0
    rho = _loadDensity(_require(args.state, "--state"))
    d = int(round(np.log2(rho.shape[0])))
    corr = correlationMatrix(rho, buildFock(d), checkPure=True)
    if cfg.output_format == 'json':
        emit(cfg, {"M": corr.m, "pure": corr.pure})
    else:
        writeText(matrixToCsv(corr.m), cfg.out)
    return 0

def runTypicality(args, cfg: RunConfig) -> int:
    if args.action == 'asymptotics':
        tag = resolveClassName(_require(args.cls, "--class"))
        row = asymptoticRow(tag, args.regime, _require(args.d, "--d"), L=args.L, a=args.a)
        emit(cfg, row)
        return 0
    if args.action == 'scan':
        spec = _spec(args) if args.cls else specFromOptions({"class": "dist", "dims": "2,2"})
        frame = typicalityScan(spec, parseSweep(args.sweep), args.samples, cfg.seed, cfg.shards)
        rows = frame.to_dict(orient="records")
        if args.csv:
            cfg.out, cfg.output_format = args.csv, 'csv'
        emit(cfg, rows, rows=rows)
        return 0
    spec = _spec(args)
    params = classParams(spec)
    if args.action == 'params':
        result = paramsSummary(params)
        if args.spectrum:
            profile = spectrumProfile(parseSpectrum(args.spectrum))
            result["analytic_bound"] = lowerBound(profile, params, 'bilinear' if params.k == 2 else 'klinear')
        emit(cfg, result)
        return 0
    profile = spectrumProfile(parseSpectrum(_require(args.spectrum, "--spectrum")))
    report = mcFraction(profile, spec, args.samples, cfg.seed, cfg.shards)
    emit(cfg, report.toDict())
    return 0

def runDemoCommand(args, cfg: RunConfig) -> int:
    if args.name == 'all':
        outcomes = demoSuite(cfg.seed, includeSlow=args.slow)
    else:
        if args.name not in DEMOS and args.name not in SLOW_DEMOS:
            raise UsageError(f"Unknown demo '{args.name}'; choose from all, {', '.join(list(DEMOS) + list(SLOW_DEMOS))}")
        outcomes = [runDemo(args.name, cfg.seed, full=args.slow)]
    table = outcomeTable(outcomes)
    if len(outcomes) == 1 and cfg.output_format == 'human':
        writeText(outcomes[0].detail, cfg.out)
    elif cfg.output_format == 'human':
        passed = sum(o.passed for o in outcomes)
        writeText(table.to_string(index=False) + f"\n{passed}/{len(outcomes)} passed", cfg.out)
    else:
        emit(cfg, table.to_dict(orient="records"), rows=table.to_dict(orient="records"))
    return 0 if all(o.passed for o in outcomes) else 3

def runServe(args, cfg: RunConfig) -> int:
    logger.info(f"Starting qcorr service on port {args.port}")
    app.run(host='0.0.0.0', port=args.port)
    return 0

HANDLERS = {
    "dims": runDims,
    "class": runClass,
    "witness": runWitness,
    "cone": runCone,
    "conc": runConc,
    "gauss": runGauss,
    "typicality": runTypicality,
    "demo": runDemoCommand,
    "serve": runServe,
}

def _addClassFlags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--class", dest="cls", help="Class name: dist, bos, ferm, gauss, schmidt, gme (aliases accepted)")
    p.add_argument("--dims", help="Comma-separated local dims, e.g. 2,2")
    p.add_argument("--d", type=int, help="Single-particle dimension or number of modes")
    p.add_argument("--L", type=int, help="Particle number")
    p.add_argument("--sector", choices=['+', '-', 'both'], help="Gaussian parity sector")
    p.add_argument("--n", type=int, help="Schmidt-rank bound, or n for Young dimensions")

def buildParser() -> argparse.ArgumentParser:
    """ argparse tree for every subcommand """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=['json', 'csv', 'human'], help="Output format")
    common.add_argument("--out", help="Output path; '-' writes stdout")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--shards", type=int, default=1)
    common.add_argument("--dense-limit", type=int, default=DENSE_LIMIT)
    common.add_argument("--verbose", action="store_true")
    common.add_argument("--quiet", action="store_true")

    parser = argparse.ArgumentParser(prog="qcorr", description="Quantum-correlation numerics")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", parents=[common], help="Young-diagram and carrier dimensions")
    p.add_argument("--young", help="Row lengths, e.g. 4,2,1")
    p.add_argument("--k", type=int, default=2)
    _addClassFlags(p)

    p = sub.add_parser("class", parents=[common], help="Class operators and invariants")
    p.add_argument("action", choices=['invariant', 'build', 'params'])
    p.add_argument("--state")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--physical", action="store_true", help="Use the purity-sum form of the invariant")
    _addClassFlags(p)

    p = sub.add_parser("witness", parents=[common], help="Witness construction and detection")
    p.add_argument("action", choices=['build', 'detect', 'schmidt', 'ppt'])
    p.add_argument("--w")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--state")
    _addClassFlags(p)

    p = sub.add_parser("cone", parents=[common], help="Invariant witness cones")
    p.add_argument("action", choices=['rays', 'inequalities'])
    _addClassFlags(p)

    p = sub.add_parser("conc", parents=[common], help="Concurrences and thresholds")
    p.add_argument("action", choices=['two-qubit', 'gauss4', 'schmidt', 'threshold'])
    p.add_argument("--state")
    p.add_argument("--family", help=f"One of: {', '.join(familyNames())}")
    p.add_argument("--d", type=int)

    p = sub.add_parser("gauss", parents=[common], help="Fermionic Gaussian states")
    p.add_argument("action", choices=['random', 'corr'])
    p.add_argument("--d", type=int)
    p.add_argument("--parity", choices=['+', '-'], default='+')
    p.add_argument("--state")

    p = sub.add_parser("typicality", parents=[common], help="Typicality parameters, bounds and Monte Carlo")
    p.add_argument("action", choices=['params', 'run', 'scan', 'asymptotics'])
    p.add_argument("--spectrum", help="e.g. 0.9,0.02x5")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--sweep", default="pmax:0.2:1.0:0.05")
    p.add_argument("--csv", help="Write the scan table to this path")
    p.add_argument("--regime", choices=['fixed_d', 'ratio'], default='fixed_d')
    p.add_argument("--a", type=float, help="Ratio L/d for the ratio regime")
    _addClassFlags(p)

    p = sub.add_parser("demo", parents=[common], help="Scripted reproductions")
    p.add_argument("name", nargs="?", default="all")
    p.add_argument("--slow", action="store_true", help="Include the six-copy GME check and use the full sample counts")

    p = sub.add_parser("serve", parents=[common], help="Start the HTTP service")
    p.add_argument("--port", type=int, default=SERVICE_PORT)
    return parser

def dispatch(argv: List[str]) -> int:
    """
        Parse arguments, run one subcommand and map errors onto exit codes

        Args:
            argv (List[str]): Arguments without the program name

        Returns:
            int: 0 on success, 2 on usage errors, 3 on numerical-contract failures
    """
    parser = buildParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configureLogging(logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO)
    cfg = RunConfig(
        subcommand=args.command,
        seed=args.seed,
        shards=args.shards,
        output_format=args.format or DEFAULT_FORMATS.get((args.command, getattr(args, "action", None)), 'human'),
        out=args.out,
        dense_limit=args.dense_limit,
    )
    if cfg.seed < 0 or cfg.seed >= 2 ** 64:
        logger.error("Seed must be a 64-bit unsigned integer")
        return 2
    try:
        return HANDLERS[args.command](args, cfg)
    except UsageError as e:
        logger.error(f"Usage error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except QcorrError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        logger.error(f"I/O error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return UsageError.exit_code
    except Exception:
        logger.exception(f"Unexpected failure in {args.command}")
        return 3

if __name__ == '__main__':
    sys.exit(dispatch(sys.argv[1:]))
