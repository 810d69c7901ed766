"""
Observability: structured logging and prometheus metrics.

Library modules log through ``structlog.get_logger(__name__)``; only app/ calls
``configure_logging``. Metrics are process-global and never served over the
network.
"""

from pauli_forge.observability.logs import configure_logging
from pauli_forge.observability.metrics.collector import MetricsCollector, get_metrics_collector

__all__ = ["configure_logging", "MetricsCollector", "get_metrics_collector"]
