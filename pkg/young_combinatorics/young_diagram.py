""" Exact Young-diagram combinatorics: hooks, irrep dimensions, Young projector normalization """

# Import necessary libraries
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

# Import custom modules
from config.config import YoungDiagram
from utils.errors import UsageError

def youngDiagram(rows: Union[str, Sequence[int], YoungDiagram]) -> YoungDiagram:
    """
        Build a diagram from row lengths

        Args:
            rows: "4,2,1", a sequence of ints, or an existing diagram

        Returns:
            YoungDiagram: Validated diagram (trailing zero rows dropped)
    """
    if isinstance(rows, YoungDiagram):
        return rows
    if isinstance(rows, str):
        try:
            rows = [int(r) for r in rows.split(",") if r.strip()]
        except ValueError as e:
            raise UsageError(f"Malformed Young diagram {rows!r}") from e
    rows = tuple(int(r) for r in rows if int(r) != 0)
    if any(r < 0 for r in rows):
        raise UsageError(f"Negative row length in {rows}")
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise UsageError(f"Row lengths must be non-increasing, got {rows}")
    return YoungDiagram(rows=rows)

def rectangle(rows: int, width: int) -> YoungDiagram:
    """ rows x width rectangle, e.g. (k^L) for k copies of L fermions """
    return YoungDiagram(rows=(width,) * rows)

def hookLengths(diagram: YoungDiagram) -> Iterable[int]:
    cols = diagram.columns()
    for i, r in enumerate(diagram.rows):
        for j in range(r):
            arm = r - j - 1
            leg = cols[j] - i - 1
            yield arm + leg + 1

@lru_cache(maxsize=None)
def _hookProduct(rows: tuple) -> int:
    return math.prod(hookLengths(YoungDiagram(rows=rows)))

def hookProduct(diagram) -> int:
    """ g_lambda, the product of all hook lengths """
    diagram = youngDiagram(diagram)
    if not diagram.rows:
        raise UsageError("hookProduct needs a nonempty diagram")
    return _hookProduct(diagram.rows)

def contentProduct(diagram, n: int) -> int:
    """ f_lambda(n): fill n at the top-left, +1 to the right, -1 downward, multiply """
    diagram = youngDiagram(diagram)
    return math.prod(n + j - i for i, r in enumerate(diagram.rows) for j in range(r))

def dimIrrep(diagram, n: int) -> int:
    """
        Dimension of the U(n) irrep labelled by the diagram

        Args:
            diagram: Young diagram (or its row string)
            n (int): Dimension of the defining representation

        Returns:
            int: f_lambda(n) / g_lambda, zero for diagrams with more than n rows
    """
    diagram = youngDiagram(diagram)
    if n <= 0:
        raise UsageError("dimIrrep needs n >= 1")
    if len(diagram.rows) > n:
        return 0
    f = contentProduct(diagram, n)
    g = hookProduct(diagram)
    if f % g:
        raise ArithmeticError(f"Non-integral dimension {f}/{g} for {diagram.rows}")
    return f // g

def alphaCoeff(diagram) -> Fraction:
    """ c_lambda * r_lambda / g_lambda with c, r the products of column and row factorials """
    diagram = youngDiagram(diagram)
    c = math.prod(math.factorial(h) for h in diagram.columns())
    r = math.prod(math.factorial(w) for w in diagram.rows)
    return Fraction(c * r, hookProduct(diagram))

def standardTableauxCount(diagram) -> int:
    """ Number of standard tableaux, |lambda|! / g_lambda """
    diagram = youngDiagram(diagram)
    return math.factorial(diagram.boxes) // hookProduct(diagram)
