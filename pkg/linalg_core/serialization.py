""" JSON and CSV input/output for operators, vectors, rationals and tables """

# Import necessary libraries
import io
import sys
import json
import logging
import numpy as np
import pandas as pd
from fractions import Fraction
from typing import Any, Dict, List, Optional

# Import custom modules
from config.config import DenseOperator, StateVector
from utils.errors import UsageError, ContractError
from utils.helpers import formatRational, parseRational
from linalg_core.operators import denseOperator, stateVector

# Configure logging
logger = logging.getLogger(__name__)

def operatorToJson(op: DenseOperator) -> Dict[str, Any]:
    """ {"dim", "factor_dims", "entries": [[re, im], ...]} in row-major order """
    flat = op.matrix.reshape(-1)
    return {
        "dim": op.dim,
        "factor_dims": list(op.factor_dims),
        "entries": [[float(z.real), float(z.imag)] for z in flat],
    }

def operatorFromJson(data: Dict[str, Any], hermitian: bool = False) -> DenseOperator:
    """
        Parse the JSON operator format

        Args:
            data (dict): Parsed JSON object
            hermitian (bool): Validate hermiticity

        Returns:
            DenseOperator: The operator
    """
    try:
        dim = int(data["dim"])
        entries = data["entries"]
        factor_dims = data.get("factor_dims", [dim])
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError(f"Malformed operator JSON: {e}") from e
    if len(entries) != dim * dim:
        raise ContractError(f"Operator JSON has {len(entries)} entries, expected {dim * dim}")
    flat = np.array([complex(re, im) for re, im in entries], dtype=complex)
    return denseOperator(flat.reshape(dim, dim), factor_dims, hermitian=hermitian)

def vectorToJson(v: StateVector) -> Dict[str, Any]:
    return {
        "dim": v.dim,
        "factor_dims": list(v.factor_dims),
        "amplitudes": [[float(z.real), float(z.imag)] for z in v.amplitudes],
    }

def vectorFromJson(data: Dict[str, Any], normalized: bool = True) -> StateVector:
    try:
        dim = int(data["dim"])
        amps = data["amplitudes"]
        factor_dims = data.get("factor_dims", [dim])
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError(f"Malformed vector JSON: {e}") from e
    if len(amps) != dim:
        raise ContractError(f"Vector JSON has {len(amps)} amplitudes, expected {dim}")
    return stateVector([complex(re, im) for re, im in amps], factor_dims, normalized=normalized)

def rationalsToJson(values) -> List[str]:
    return [formatRational(q) for q in values]

def rationalsFromJson(values) -> List[Fraction]:
    return [parseRational(s) for s in values]

def readJson(path: str) -> Dict[str, Any]:
    """ Read JSON from a file path ("-" reads stdin) """
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as f:
            return json.load(f)
    except FileNotFoundError as e:
        raise UsageError(f"No such file: {path}") from e
    except OSError as e:
        raise UsageError(f"Cannot read {path}: {e.strerror or e}") from e
    except json.JSONDecodeError as e:
        raise UsageError(f"Invalid JSON in {path}: {e}") from e

def writeText(text: str, path: Optional[str]) -> None:
    """ Write to a file, or stdout when path is None or "-" """
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    try:
        with open(path, "w") as f:
            f.write(text)
    except OSError as e:
        raise UsageError(f"Cannot write {path}: {e.strerror or e}") from e
    logger.info(f"Wrote {path}")

def writeJson(data: Any, path: Optional[str]) -> None:
    writeText(json.dumps(data, indent=2), path)

def tableToCsv(rows: List[Dict[str, Any]], columns: Optional[List[str]] = None) -> str:
    """ Render rows as CSV with a header row, comma delimiter and period decimals """
    frame = pd.DataFrame(rows, columns=columns)
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format="%.12g")
    return buffer.getvalue()

def matrixToCsv(matrix: np.ndarray) -> str:
    """ Real matrix as CSV with numbered columns """
    frame = pd.DataFrame(np.real(matrix), columns=[f"c{j + 1}" for j in range(matrix.shape[1])])
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format="%.12g")
    return buffer.getvalue()
