"""Shared utilities, types, errors and configuration."""

from pauli_forge.shared.batch_processor import BatchProcessor
from pauli_forge.shared.constants import (
    CONFIGS_DIR,
    DEFAULT_SEED,
    PROBABILITY_TOL,
    PROJECT_ROOT,
    RANK_TOL,
    STATE_TOL,
)
from pauli_forge.shared.determinism import DeterministicRandom, task_seed
from pauli_forge.shared.errors import (
    DimensionMismatch,
    DomainError,
    NotAChannel,
    NotFound,
    PauliForgeError,
    QasmParseError,
    ResourceLimitExceeded,
    ScanPointFailed,
    SingularInversion,
    UnsupportedGate,
)
from pauli_forge.shared.resource_limits import (
    ResourceLimiter,
    get_resource_limiter,
    set_resource_limiter,
)
from pauli_forge.shared.types import (
    ChannelEvaluator,
    ComplexMatrix,
    ComplexVector,
)

__all__ = [
    # Constants
    "PROJECT_ROOT",
    "CONFIGS_DIR",
    "DEFAULT_SEED",
    "PROBABILITY_TOL",
    "STATE_TOL",
    "RANK_TOL",
    # Types
    "ComplexVector",
    "ComplexMatrix",
    "ChannelEvaluator",
    # Errors
    "PauliForgeError",
    "DomainError",
    "DimensionMismatch",
    "NotAChannel",
    "NotFound",
    "SingularInversion",
    "UnsupportedGate",
    "QasmParseError",
    "ResourceLimitExceeded",
    "ScanPointFailed",
    # Utilities
    "BatchProcessor",
    "DeterministicRandom",
    "task_seed",
    "ResourceLimiter",
    "get_resource_limiter",
    "set_resource_limiter",
]
