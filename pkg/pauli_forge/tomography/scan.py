"""
Tetrahedron scans: synthesize, run noisily, reconstruct, score.

Each grid point is an independent task seeded with base_seed XOR index; results
come back in grid order, so identical configurations give identical CSV files.
"""

import asyncio
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import pandas as pd
import structlog

from pauli_forge.channels import PauliChannel
from pauli_forge.circuits import NoiseModel, synthesize_channel_circuit
from pauli_forge.distance import CSV_COLUMNS, FidelityRecord, diamond_fidelity
from pauli_forge.observability.metrics.collector import get_metrics_collector
from pauli_forge.pauli_algebra import TauVector, tau_to_k, tetrahedron_contains
from pauli_forge.shared.batch_processor import BatchProcessor
from pauli_forge.shared.determinism import task_seed
from pauli_forge.shared.errors import DomainError, ScanPointFailed
from pauli_forge.tomography.config import ScanConfig, ScanGrid, TauPoint, TomographyConfig
from pauli_forge.tomography.reconstruction import reconstruct_channel
from pauli_forge.tomography.sampling import simulate_tomography

logger = structlog.get_logger(__name__)


def scan_point(index: int, point: TauPoint, config: ScanConfig) -> Optional[FidelityRecord]:
    """Fidelity record of one grid point, or None when it lies outside the tetrahedron."""
    metrics = get_metrics_collector()
    tau = TauVector.from_bloch_multipliers(*point)
    if not tetrahedron_contains(tau):
        logger.warning("scan_point_skipped", index=index, tau=list(point))
        metrics.record_scan_point("skipped")
        return None

    seed = task_seed(config.seed, index)
    with metrics.measure_scan_point():
        k = tau_to_k(tau)
        circuit = synthesize_channel_circuit(k, 1)
        counts = simulate_tomography(circuit, config.noise, config.tomography, seed)
        implemented = reconstruct_channel(counts)
        f = diamond_fidelity(
            implemented.ptm,
            PauliChannel(k),
            restarts=config.diamond_restarts,
            seed=seed,
            min_restarts=config.diamond_min_restarts,
            agreement=config.diamond_agreement,
        )
    metrics.record_scan_point("done")
    logger.debug("scan_point_done", index=index, tau=list(point), f=f)
    return FidelityRecord(
        tau=tau,
        f=f,
        lambda_1q=config.noise.lambda_1q,
        lambda_2q=config.noise.lambda_2q,
        epsilon=config.noise.epsilon,
        shots=config.tomography.shots,
        seed=seed,
    )


def _scan_item(item: Tuple[int, TauPoint], config: ScanConfig) -> Optional[FidelityRecord]:
    index, point = item
    try:
        return scan_point(index, point, config)
    except Exception as exc:
        logger.error("scan_point_failed", index=index, tau=list(point), error=repr(exc))
        get_metrics_collector().record_scan_point("failed")
        raise ScanPointFailed(index, exc) from exc


async def run_scan(config: ScanConfig) -> List[FidelityRecord]:
    """Scan every grid point concurrently (``config.jobs`` workers).

    Points outside the tetrahedron are skipped; any other failure aborts the
    scan with ScanPointFailed once the remaining points have finished.
    """
    points = config.grid.tau_points()
    logger.info("scan_started", points=len(points), jobs=config.jobs, shots=config.tomography.shots)
    results = await BatchProcessor.process_parallel(
        list(enumerate(points)),
        lambda item: _scan_item(item, config),
        max_concurrent=config.jobs,
        raise_errors=True,
    )
    records = [r for r in results if r is not None]
    logger.info("scan_finished", records=len(records), skipped=len(points) - len(records))
    return records


def tetrahedron_scan(
    grid: ScanGrid,
    nm: NoiseModel,
    config: TomographyConfig,
    **scan_options,
) -> List[FidelityRecord]:
    """Synchronous wrapper around ``run_scan``; extra options go to ScanConfig."""
    scan_config = ScanConfig(grid=grid, noise=nm, tomography=config, **scan_options)
    return asyncio.run(run_scan(scan_config))


def records_frame(records: Sequence[FidelityRecord]) -> pd.DataFrame:
    frame = pd.DataFrame([r.to_row() for r in records], columns=list(CSV_COLUMNS))
    for column in ("shots", "seed"):
        frame[column] = frame[column].astype("Int64")
    return frame


def write_scan_csv(records: Sequence[FidelityRecord], path: Union[str, Path]) -> Path:
    """CSV with header tau1,tau2,tau3,f,lambda_1q,lambda_2q,epsilon,shots,seed."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    records_frame(records).to_csv(path, index=False, float_format="%.17g")
    return path


def read_scan_csv(path: Union[str, Path]) -> List[FidelityRecord]:
    frame = pd.read_csv(path)
    missing = set(CSV_COLUMNS) - set(frame.columns)
    if missing:
        raise DomainError(f"Scan CSV is missing columns {sorted(missing)}")
    return [FidelityRecord.from_row(row) for row in frame.to_dict(orient="records")]
