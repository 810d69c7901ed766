"""Resource limits for dense simulation."""

from typing import Any, Dict, Optional

import psutil
import structlog

from pauli_forge.shared.constants import MAX_DENSITY_QUBITS, MAX_STATEVECTOR_QUBITS
from pauli_forge.shared.errors import ResourceLimitExceeded

logger = structlog.get_logger(__name__)

_COMPLEX_BYTES = 16


class ResourceLimiter:
    """Checks qubit caps and memory headroom before a dense object is allocated."""

    def __init__(
        self,
        max_statevector_qubits: int = MAX_STATEVECTOR_QUBITS,
        max_density_qubits: int = MAX_DENSITY_QUBITS,
        max_memory_mb: Optional[int] = None,
    ):
        """Initialize resource limiter.

        Args:
            max_statevector_qubits: Largest register simulated as a statevector
            max_density_qubits: Largest register simulated as a density matrix
            max_memory_mb: Optional cap on the size of a single dense object
        """
        self.max_statevector_qubits = max_statevector_qubits
        self.max_density_qubits = max_density_qubits
        self.max_memory_mb = max_memory_mb

    def check_statevector(self, n_qubits: int) -> None:
        """Raises ResourceLimitExceeded if a statevector on ``n_qubits`` is too large."""
        if n_qubits > self.max_statevector_qubits:
            raise ResourceLimitExceeded(
                f"Statevector limit exceeded: {n_qubits} > {self.max_statevector_qubits} qubits"
            )
        self._check_memory(_COMPLEX_BYTES * 2**n_qubits)

    def check_density(self, n_qubits: int) -> None:
        """Raises ResourceLimitExceeded if a density matrix on ``n_qubits`` is too large."""
        if n_qubits > self.max_density_qubits:
            raise ResourceLimitExceeded(
                f"Density-matrix limit exceeded: {n_qubits} > {self.max_density_qubits} qubits"
            )
        self._check_memory(_COMPLEX_BYTES * 4**n_qubits)

    def _check_memory(self, n_bytes: int) -> None:
        if self.max_memory_mb is None:
            return
        required_mb = n_bytes / (1024 * 1024)
        if required_mb > self.max_memory_mb:
            raise ResourceLimitExceeded(
                f"Memory limit exceeded: {required_mb:.2f}MB > {self.max_memory_mb}MB"
            )
        available_mb = psutil.virtual_memory().available / (1024 * 1024)
        if required_mb > available_mb:
            raise ResourceLimitExceeded(
                f"Insufficient memory: {required_mb:.2f}MB required, {available_mb:.2f}MB available"
            )

    def get_usage(self) -> Dict[str, Any]:
        """Get current resource usage.

        Returns:
            Dictionary with resource usage information
        """
        memory = psutil.virtual_memory()
        return {
            "memory_available_mb": memory.available / (1024 * 1024),
            "memory_limit_mb": self.max_memory_mb,
            "statevector_qubit_limit": self.max_statevector_qubits,
            "density_qubit_limit": self.max_density_qubits,
        }


_default_limiter: Optional[ResourceLimiter] = None


def get_resource_limiter() -> ResourceLimiter:
    """Get the process-wide limiter (defaults until ``set_resource_limiter`` is called)."""
    global _default_limiter
    if _default_limiter is None:
        _default_limiter = ResourceLimiter()
    return _default_limiter


def set_resource_limiter(limiter: ResourceLimiter) -> None:
    global _default_limiter
    _default_limiter = limiter
