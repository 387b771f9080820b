# Import necessary libraries
import json
import os

# Load data tables relative to the repository root
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# Numeric tolerances
HERMITIAN_TOL = 1e-12
DETECTION_THRESHOLD = 1e-10
MEMBERSHIP_TOL = 1e-9
CLAMP_TOL = 1e-9
IMAG_FAIL_TOL = 1e-6
RANK_TOL = 1e-6

# Size limits
DENSE_LIMIT = 4096
MAX_FOCK_MODES = 12
MAX_GAUSS_PAIR_MODES = 5
GAUSS_CONSTANT_MAX_D = 1000
MAX_DIM = 1 << 22

# Run defaults
DEFAULT_SEED = 0
OUTPUT_DIGITS = 12
SERVICE_PORT = 8432

# Load class aliases used to resolve command-line class names
with open(os.path.join(BASE_DIR, "dictionary", "class_aliases.json")) as f:
    CLASS_ALIASES = json.load(f)

# Load asymptotic table rows
with open(os.path.join(BASE_DIR, "dictionary", "asymptotics.json")) as f:
    ASYMPTOTIC_TABLES = json.load(f)

# Load named noise families for threshold solving
with open(os.path.join(BASE_DIR, "dictionary", "families.json")) as f:
    NOISE_FAMILIES = json.load(f)
