"""
Tomography: simulated one-qubit process tomography and tetrahedron scans.

Builds on circuits/ (synthesis, noisy simulation) and distance/ (diamond
fidelity). Every sampling call takes an explicit seed.
"""

from pauli_forge.tomography.config import (
    InputState,
    MeasurementBasis,
    ScanConfig,
    ScanGrid,
    TomographyConfig,
    default_scan_grid,
)
from pauli_forge.tomography.reconstruction import (
    PauliTransferMatrix,
    linear_inversion,
    project_cptp,
    reconstruct_channel,
)
from pauli_forge.tomography.sampling import (
    Counts,
    measurement_circuit,
    simulate_counts,
    simulate_tomography,
)
from pauli_forge.tomography.scan import (
    read_scan_csv,
    records_frame,
    run_scan,
    scan_point,
    tetrahedron_scan,
    write_scan_csv,
)

__all__ = [
    "InputState",
    "MeasurementBasis",
    "TomographyConfig",
    "ScanGrid",
    "ScanConfig",
    "default_scan_grid",
    "Counts",
    "measurement_circuit",
    "simulate_counts",
    "simulate_tomography",
    "PauliTransferMatrix",
    "linear_inversion",
    "project_cptp",
    "reconstruct_channel",
    "scan_point",
    "run_scan",
    "tetrahedron_scan",
    "records_frame",
    "write_scan_csv",
    "read_scan_csv",
]
