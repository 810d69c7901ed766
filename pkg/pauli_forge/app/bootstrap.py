"""Process setup for the command line: settings, logging, resource limits.

Library modules never configure anything themselves; ``bootstrap`` is called once
per ``run`` before a command executes.
"""

from typing import Optional

import structlog

from pauli_forge.observability import configure_logging
from pauli_forge.shared.config import Settings, get_settings
from pauli_forge.shared.resource_limits import ResourceLimiter, set_resource_limiter

logger = structlog.get_logger(__name__)


def bootstrap(settings: Optional[Settings] = None, log_level: Optional[str] = None) -> Settings:
    """Apply settings to the process and return them.

    Args:
        settings: Settings to apply (defaults to the cached process settings)
        log_level: Overrides ``settings.logging.level``

    Returns:
        The applied settings
    """
    settings = settings or get_settings()
    configure_logging(log_level or settings.logging.level, settings.logging.format)
    set_resource_limiter(
        ResourceLimiter(
            max_statevector_qubits=settings.simulator.max_statevector_qubits,
            max_density_qubits=settings.simulator.max_density_qubits,
            max_memory_mb=settings.simulator.max_memory_mb,
        )
    )
    logger.debug("bootstrapped", environment=settings.environment, seed=settings.seed)
    return settings
