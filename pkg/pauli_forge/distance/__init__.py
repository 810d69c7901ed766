"""
Distance: trace norm, diamond distance and diamond fidelity.

Imports channels/ and pauli_algebra/. The closed form covers Pauli channels on
any number of qubits; the variational oracle is restricted to one qubit.
"""

from pauli_forge.distance.diamond import (
    CSV_COLUMNS,
    FidelityRecord,
    diamond_distance,
    diamond_distance_bruteforce,
    diamond_distance_pauli,
    diamond_fidelity,
)
from pauli_forge.distance.norms import trace_norm

__all__ = [
    "trace_norm",
    "diamond_distance_pauli",
    "diamond_distance_bruteforce",
    "diamond_distance",
    "diamond_fidelity",
    "FidelityRecord",
    "CSV_COLUMNS",
]
