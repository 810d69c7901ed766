"""
Pauli algebra: strings, the sign matrix A^{(x)N}, k <-> tau, tetrahedron geometry.

Depends only on shared/. Everything here is an immutable value or a pure
function, safe to share between threads.
"""

from pauli_forge.pauli_algebra.sign_matrix import SIGN_MATRIX_1Q, SignMatrixA, sign_matrix
from pauli_forge.pauli_algebra.strings import (
    PAULI_LABELS,
    PAULI_MATRICES,
    PauliString,
    all_pauli_matrices,
    iter_pauli_strings,
    pauli_string_from_flat,
    pauli_string_matrix,
)
from pauli_forge.pauli_algebra.vectors import (
    PauliProbVector,
    TauVector,
    k_to_tau,
    tau_to_k,
    tetrahedron_contains,
    tetrahedron_vertices,
)

__all__ = [
    "PAULI_LABELS",
    "PAULI_MATRICES",
    "PauliString",
    "pauli_string_matrix",
    "pauli_string_from_flat",
    "iter_pauli_strings",
    "all_pauli_matrices",
    "SIGN_MATRIX_1Q",
    "SignMatrixA",
    "sign_matrix",
    "PauliProbVector",
    "TauVector",
    "k_to_tau",
    "tau_to_k",
    "tetrahedron_contains",
    "tetrahedron_vertices",
]
