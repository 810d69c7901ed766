"""Pauli strings and their flat base-4 index."""

from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Tuple

import numpy as np

from pauli_forge.shared.errors import DomainError
from pauli_forge.shared.types import ComplexMatrix

PAULI_LABELS = ("I", "X", "Y", "Z")

PAULI_MATRICES: Tuple[ComplexMatrix, ...] = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True)
class PauliString:
    """Tensor product of single-qubit Paulis, leftmost qubit first.

    The flat index is the base-4 number spelled by ``indices`` with the leftmost
    qubit as most significant digit, e.g. (3, 1) -> 13.
    """

    indices: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.indices) < 1:
            raise DomainError("A Pauli string needs at least one qubit")
        if any(i not in (0, 1, 2, 3) for i in self.indices):
            raise DomainError(f"Pauli indices must be in {{0,1,2,3}}, got {self.indices}")
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))

    @property
    def n_qubits(self) -> int:
        return len(self.indices)

    @property
    def flat_index(self) -> int:
        return reduce(lambda acc, i: 4 * acc + i, self.indices, 0)

    @property
    def label(self) -> str:
        return "".join(PAULI_LABELS[i] for i in self.indices)

    @classmethod
    def from_flat(cls, index: int, n_qubits: int) -> "PauliString":
        return pauli_string_from_flat(index, n_qubits)

    def matrix(self) -> ComplexMatrix:
        return pauli_string_matrix(self)


def pauli_string_from_flat(index: int, n_qubits: int) -> PauliString:
    """Decode a flat base-4 index into a PauliString on ``n_qubits``."""
    if n_qubits < 1 or not 0 <= index < 4**n_qubits:
        raise DomainError(f"Flat index {index} out of range for {n_qubits} qubits")
    digits = []
    for _ in range(n_qubits):
        index, digit = divmod(index, 4)
        digits.append(digit)
    return PauliString(tuple(reversed(digits)))


def pauli_string_matrix(s: PauliString) -> ComplexMatrix:
    """Kronecker product sigma_{a1} x ... x sigma_{aN}."""
    return reduce(np.kron, (PAULI_MATRICES[i] for i in s.indices))


def iter_pauli_strings(n_qubits: int) -> Iterator[PauliString]:
    """All 4^N Pauli strings in flat-index order."""
    for index in range(4**n_qubits):
        yield pauli_string_from_flat(index, n_qubits)


def all_pauli_matrices(n_qubits: int) -> np.ndarray:
    """Array of shape (4^N, 2^N, 2^N) holding every Pauli string matrix in flat order."""
    return np.stack([pauli_string_matrix(s) for s in iter_pauli_strings(n_qubits)])
