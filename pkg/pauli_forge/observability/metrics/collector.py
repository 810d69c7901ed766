"""Metrics collection using Prometheus."""

import time
from contextlib import contextmanager
from typing import Dict, Iterator, Optional

from prometheus_client import Counter, Histogram

# Simulation metrics
simulations_total = Counter(
    "pauli_forge_simulations_total",
    "Circuit simulations run",
    ["mode"],
)

# 1PR metrics
onepr_fits_total = Counter(
    "pauli_forge_onepr_fits_total",
    "1PR fits attempted",
    ["outcome"],
)

# Scan metrics
scan_points_total = Counter(
    "pauli_forge_scan_points_total",
    "Tetrahedron scan points processed",
    ["status"],
)

scan_point_duration = Histogram(
    "pauli_forge_scan_point_duration_seconds",
    "Time taken per tetrahedron scan point",
    buckets=[0.01, 0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0],
)

diamond_restarts = Histogram(
    "pauli_forge_diamond_restarts",
    "Restarts used per brute-force diamond distance",
    buckets=[2, 4, 8, 16, 32, 64, 128],
)


class MetricsCollector:
    """Collects metrics for simulations, fits and scans."""

    def __init__(self):
        """Initialize metrics collector."""
        self._start_time = time.time()

    @contextmanager
    def measure_scan_point(self) -> Iterator[None]:
        """Context manager to measure one scan point."""
        start = time.perf_counter()
        try:
            yield
        finally:
            scan_point_duration.observe(time.perf_counter() - start)

    def record_simulation(self, mode: str) -> None:
        simulations_total.labels(mode=mode).inc()

    def record_fit(self, outcome: str) -> None:
        onepr_fits_total.labels(outcome=outcome).inc()

    def record_scan_point(self, status: str) -> None:
        scan_points_total.labels(status=status).inc()

    def record_diamond_restarts(self, restarts: int) -> None:
        diamond_restarts.observe(restarts)

    def get_uptime(self) -> float:
        """Get collector uptime in seconds."""
        return time.time() - self._start_time

    def snapshot(self) -> Dict[str, float]:
        """Current counter values, keyed by metric and label."""
        values: Dict[str, float] = {}
        for metric in (simulations_total, onepr_fits_total, scan_points_total):
            for family in metric.collect():
                for sample in family.samples:
                    if sample.name.endswith("_total"):
                        label = ",".join(f"{k}={v}" for k, v in sorted(sample.labels.items()))
                        values[f"{sample.name}{{{label}}}"] = sample.value
        return values


_global_collector: Optional[MetricsCollector] = None


def get_metrics_collector() -> MetricsCollector:
    """Get global metrics collector instance."""
    global _global_collector
    if _global_collector is None:
        _global_collector = MetricsCollector()
    return _global_collector
