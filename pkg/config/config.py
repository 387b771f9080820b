""" Data models shared across the quantum-correlation toolkit """

# Import necessary libraries
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Optional, Dict, List, Any, Tuple, Union

import numpy as np

Rational = Fraction
Number = Union[Fraction, float]

@dataclass(frozen=True)
class DenseOperator:
    """ Square complex matrix with declared tensor-factor dimensions """
    matrix: np.ndarray
    factor_dims: Tuple[int, ...]
    hermitian: bool = False

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def entries(self) -> List[complex]:
        """ Row-major entry list """
        return [complex(z) for z in self.matrix.reshape(-1)]

@dataclass(frozen=True)
class StateVector:
    """ Pure state amplitudes with declared tensor-factor dimensions """
    amplitudes: np.ndarray
    factor_dims: Tuple[int, ...]
    normalized: bool = True

    @property
    def dim(self) -> int:
        return int(self.amplitudes.shape[0])

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())

@dataclass(frozen=True)
class YoungDiagram:
    """ Row lengths of a Young diagram, non-increasing """
    rows: Tuple[int, ...]

    @property
    def boxes(self) -> int:
        return sum(self.rows)

    def columns(self) -> Tuple[int, ...]:
        """ Column heights (the transposed diagram) """
        if not self.rows:
            return ()
        return tuple(sum(1 for r in self.rows if r > j) for j in range(self.rows[0]))

@dataclass(frozen=True)
class CorrelationMatrix:
    """ Real antisymmetric 2d x 2d Majorana correlation matrix """
    m: np.ndarray
    pure: bool = False

@dataclass(frozen=True)
class ClassSpec:
    """
        Tagged descriptor of a non-correlated pure-state class.

        tag is one of: dist, bos, ferm, gauss, schmidt, gme.
        dims holds the local dimensions for dist, (d,) for bos/ferm/gauss/gme
        and (dA, dB) for schmidt.
    """
    tag: str
    dims: Tuple[int, ...]
    L: int = 1
    sector: str = '+'
    n: int = 1

    @property
    def d(self) -> int:
        return self.dims[0]

@dataclass
class ClassOperator:
    """ Operator A on k copies characterizing a pure-state class """
    spec: ClassSpec
    k: int
    A: Any  # LinearMap
    carrier_dim: int
    traceA: Optional[Number] = None
    rankA: Optional[int] = None

@dataclass
class Witness:
    """ Correlation witness on k copies of the carrier space """
    spec: ClassSpec
    k: int
    V: Any  # LinearMap
    constant_c: Optional[Fraction] = None
    alpha: Optional[Number] = None
    beta: Optional[Number] = None

@dataclass(frozen=True)
class ConeElement:
    """ Invariant witness given by exact coefficients over the commutant basis """
    spec: ClassSpec
    coefficients: Tuple[Fraction, ...]
    labels: Tuple[Any, ...] = ()

@dataclass(frozen=True)
class ConjugationSpec:
    """
        Antiunitary conjugation.

        kind 'basis' uses theta(v) = T conj(v); kind 'tilde' uses the Majorana
        coefficient flip restricted to a parity sector.
    """
    kind: str
    T: Optional[np.ndarray] = None
    algebra: Any = None
    sector: str = '+'

@dataclass
class ClassParams:
    """ Parameters entering the typicality estimates """
    spec: ClassSpec
    N: int
    X: Fraction
    c: Fraction
    k: int = 2

    @property
    def alpha(self) -> Fraction:
        return self.X

    @property
    def beta(self) -> Fraction:
        return -self.c

@dataclass(frozen=True)
class SpectrumProfile:
    """ Ordered probability vector defining an isospectral manifold """
    p: Tuple[float, ...]

    @property
    def N(self) -> int:
        return len(self.p)

    @property
    def pmax(self) -> float:
        return self.p[0]

@dataclass
class EstimatorReport:
    """ Monte Carlo estimate of the fraction of detected states """
    samples: int
    detected: int
    fraction: float
    stderr: float
    analytic_bound: float
    p_max_cr: float
    seed: int
    shards: int
    mean_value: float = 0.0

    def toDict(self) -> Dict[str, Any]:
        return {
            "samples": self.samples,
            "detected": self.detected,
            "fraction": self.fraction,
            "stderr": self.stderr,
            "analytic_bound": self.analytic_bound,
            "p_max_cr": self.p_max_cr,
            "seed": self.seed,
            "shards": self.shards,
            "mean_value": self.mean_value,
        }

@dataclass
class RunConfig:
    """ Resolved command-line run settings """
    subcommand: str
    seed: int = 0
    shards: int = 1
    output_format: str = 'human'
    out: Optional[str] = None
    dense_limit: Optional[int] = None
    options: Dict[str, Any] = field(default_factory=dict)

@dataclass
class DemoOutcome:
    """ Result of one scripted reproduction """
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0
