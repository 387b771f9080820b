""" Large-parameter behavior of N and N p_max,cr beside the exact finite values """

# Import necessary libraries
import logging
import sympy as sp
from typing import Dict, List, Optional

# Import custom modules
from config.config import ClassSpec
from config.constants import ASYMPTOTIC_TABLES
from utils.errors import UsageError
from utils.helpers import didYouMean
from coherent_classes.carriers import classSpec
from typicality.parameters import classParams, pmaxCritical

# Configure logging
logger = logging.getLogger(__name__)

_x = sp.Symbol('x', positive=True)

# Binary entropy and the bosonic exponent used by the ratio table
TABLE_FUNCTIONS = {
    "H": sp.Lambda(_x, -_x * sp.log(_x) - (1 - _x) * sp.log(1 - _x)),
    "f": sp.Lambda(_x, sp.log(2) * _x + _x * sp.log(_x) - 2 * _x * sp.log(2 * _x)
                   - (1 + _x) * sp.log(1 + _x) + (1 + 2 * _x) * sp.log(1 + 2 * _x)),
}

REGIMES = ("fixed_d", "ratio")

def tableRow(tag: str, regime: str) -> Dict[str, str]:
    if regime not in REGIMES:
        raise UsageError(f"Regime must be one of {', '.join(REGIMES)}, got {regime!r}")
    table = ASYMPTOTIC_TABLES[regime]
    if tag not in table:
        raise UsageError(f"Class {tag!r} has no row in the {regime} table{didYouMean(tag, list(table))}")
    return table[tag]

def _evaluate(expression: str, values: Dict[str, object]) -> float:
    expr = sp.sympify(expression, locals=dict(TABLE_FUNCTIONS))
    subs = {sp.Symbol(name): sp.nsimplify(value) for name, value in values.items()}
    return float(sp.N(expr.subs(subs), 30))

def _finiteSpec(tag: str, d: int, L: int) -> ClassSpec:
    if tag == 'dist':
        return classSpec('dist', (d,) * L)
    if tag in ('bos', 'ferm'):
        return classSpec(tag, (d,), L=L)
    if tag == 'gauss':
        # Mode counts beyond the dense Fock limit are fine for the closed-form parameters
        return ClassSpec(tag='gauss', dims=(d,), sector='+')
    raise UsageError(f"No finite parameters for class {tag!r}")

def asymptoticRow(tag: str, regime: str, d: int, L: Optional[int] = None, a: Optional[float] = None) -> Dict[str, object]:
    """
        Evaluate a row of an asymptotic table next to the exact finite numbers

        Args:
            tag (str): dist, bos, ferm or gauss
            regime (str): 'fixed_d' (d fixed, L grows) or 'ratio' (L = a d)
            d (int): Single-particle dimension, or number of modes for gauss
            L (int, optional): Particle number, required for fixed_d
            a (float, optional): Ratio L/d, required for ratio

        Returns:
            Dict[str, object]: label, parameters, asymptotic N and N p_cr, exact N
            and N p_cr, and the finite/asymptotic ratios
    """
    row = tableRow(tag, regime)
    if regime == 'fixed_d':
        if L is None:
            raise UsageError("The fixed-d regime needs L")
        values = {"d": d, "L": L}
    else:
        if tag != 'gauss':
            if a is None or a <= 0:
                raise UsageError("The ratio regime needs a > 0")
            L = max(1, round(a * d))
        values = {"d": d, "a": a if a is not None else 0}

    N_asym = _evaluate(row["N"], values)
    Npcr_asym = _evaluate(row["N_pcr"], values)

    params = classParams(_finiteSpec(tag, d, L if L is not None else 1))
    p_cr = pmaxCritical(params)
    N_exact = params.N
    Npcr_exact = float(N_exact * p_cr)
    result = {
        "class": tag,
        "regime": regime,
        "label": row["label"],
        "d": d,
        "L": L if tag != 'gauss' else None,
        "a": a,
        "N_asymptotic": N_asym,
        "N_pcr_asymptotic": Npcr_asym,
        "N_exact": N_exact,
        "N_pcr_exact": Npcr_exact,
        "N_ratio": N_exact / N_asym if N_asym else None,
        "N_pcr_ratio": Npcr_exact / Npcr_asym if Npcr_asym else None,
    }
    logger.info(f"{tag} {regime} at {values}: N exact/asymptotic = {result['N_ratio']}, N p_cr exact/asymptotic = {result['N_pcr_ratio']}")
    return result

def asymptoticTrend(tag: str, regime: str, grid: List[Dict[str, object]]) -> List[Dict[str, object]]:
    """ Rows over a growing parameter grid; logs whether the N p_cr ratio drifts toward 1 """
    rows = [asymptoticRow(tag, regime, **point) for point in grid]
    ratios = [r["N_pcr_ratio"] for r in rows if r["N_pcr_ratio"] is not None]
    if len(ratios) >= 2:
        closer = abs(ratios[-1] - 1) <= abs(ratios[0] - 1)
        logger.info(f"{tag} {regime}: N p_cr ratio {ratios[0]:.6g} -> {ratios[-1]:.6g} ({'approaching' if closer else 'not approaching'} 1)")
    return rows
