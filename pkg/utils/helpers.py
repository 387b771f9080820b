# Import necessary libraries
import math
import Levenshtein
from fractions import Fraction
from scipy.stats import norm
from typing import Dict, List, Optional, Sequence, Tuple, Union

# Import custom modules
from utils.errors import UsageError
from config.constants import CLASS_ALIASES, OUTPUT_DIGITS

# Smallest Levenshtein ratio at which a misspelled name gets a suggestion
SPELLING_THRESHOLD = 0.6

def closestName(name: str, known: Sequence[str], threshold: float = SPELLING_THRESHOLD) -> Optional[str]:
    """ Known class, family or table name nearest to a misspelling, None when nothing is close """
    score, best = max(((Levenshtein.ratio(name.lower(), k.lower()), k) for k in known), default=(0.0, None))
    return best if score >= threshold else None

def didYouMean(name: str, known: Sequence[str]) -> str:
    """ Suffix for unknown-name errors, empty when there is no close spelling """
    match = closestName(name, known)
    return f" (did you mean '{match}'?)" if match else ""

def resolveClassName(name: str, aliases: Optional[Dict[str, List[str]]] = None) -> str:
    """
        Map a user-supplied class name onto its canonical tag

        Args:
            name (str): Name as typed, e.g. "Slater" or "dist"
            aliases (dict, optional): Canonical tag -> accepted spellings

        Returns:
            str: Canonical tag

        Raises:
            UsageError: Unknown name; the message carries the closest known spelling
    """
    aliases = aliases if aliases is not None else CLASS_ALIASES
    key = name.strip().lower()
    for tag, spellings in aliases.items():
        if key == tag or key in (s.lower() for s in spellings):
            return tag

    spellings = [s for group in aliases.values() for s in group]
    raise UsageError(f"Unknown class '{name}'{didYouMean(key, spellings)}")

def formatFloat(value: float, digits: int = OUTPUT_DIGITS) -> str:
    """ Print a float with a fixed number of significant digits """
    return f"{float(value):.{digits}g}"

def formatRational(value: Union[Fraction, int]) -> str:
    """ Serialize an exact rational as "num/den" """
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"

def parseRational(text: str) -> Fraction:
    """ Inverse of formatRational; also accepts plain integers """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"Not a rational number: {text!r}") from e

def parseIntList(text: str) -> Tuple[int, ...]:
    """ Parse "2,2,3" into (2, 2, 3) """
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise UsageError(f"Expected comma-separated integers, got {text!r}") from e
    if not values or any(v <= 0 for v in values):
        raise UsageError(f"Expected positive integers, got {text!r}")
    return values

def parseSpectrum(text: str) -> List[float]:
    """
        Parse a spectrum string with repetition shorthand

        Args:
            text (str): e.g. "0.9,0.02x5" for (0.9, 0.02, 0.02, 0.02, 0.02, 0.02)

        Returns:
            List[float]: Expanded values
    """
    values = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if "x" in part:
                value, count = part.split("x", 1)
                values.extend([float(value)] * int(count))
            else:
                values.append(float(part))
        except ValueError as e:
            raise UsageError(f"Malformed spectrum entry {part!r}") from e
    if not values:
        raise UsageError("Empty spectrum")
    return values

def wilsonInterval(successes: int, trials: int, confidence: float = 0.95) -> Tuple[float, float, float]:
    """
        Wilson score interval for a binomial proportion

        Args:
            successes (int): Number of positive outcomes
            trials (int): Number of trials
            confidence (float): Two-sided confidence level

        Returns:
            Tuple[float, float, float]: (center, half_width, point_estimate)
    """
    if trials <= 0:
        return 0.0, 0.0, 0.0
    z = float(norm.ppf(0.5 + confidence / 2.0))
    phat = successes / trials
    denom = 1.0 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials)) / denom
    return center, half, phat
