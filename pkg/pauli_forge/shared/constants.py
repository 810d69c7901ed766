"""Shared constants used across the package."""

from pathlib import Path

# Project root directory
PROJECT_ROOT = Path(__file__).parent.parent.parent

# Config directories
CONFIGS_DIR = PROJECT_ROOT / "configs"
DEFAULT_CONFIG_FILE = CONFIGS_DIR / "default.yaml"

# Numerical tolerances
PROBABILITY_TOL = 1e-12  # nonnegativity / normalization of k
STATE_TOL = 1e-10  # Hermiticity, trace, PSD of density matrices
RANK_TOL = 1e-8  # singular values below this are discarded
CONDITION_TOL = 1e-10  # orthogonality / norm-sum of 1PR triples
FIT_RESIDUAL_TOL = 1e-6

# Size caps
MAX_SIGN_MATRIX_QUBITS = 8
DENSE_SIGN_MATRIX_QUBITS = 4  # above this the sign matrix is implicit
MAX_STATEVECTOR_QUBITS = 12
MAX_DENSITY_QUBITS = 8

# Defaults
DEFAULT_SEED = 42
DEFAULT_CURVE_SAMPLES = 101
DEFAULT_FIT_RESTARTS = 32
DEFAULT_FIT_ITERATIONS = 500
DEFAULT_DIAMOND_RESTARTS = 64
DEFAULT_SCAN_JOBS = 4
DEFAULT_TAU3_SLICES = (-0.9, -0.5, 0.0, 0.5, 0.9)
DEFAULT_LATTICE_SPACING = 0.1
