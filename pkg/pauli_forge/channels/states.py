"""Density matrices, Bloch coefficients and partial traces."""

import math
from dataclasses import dataclass
from typing import Any, Dict, Sequence

import numpy as np

from pauli_forge.pauli_algebra import all_pauli_matrices
from pauli_forge.shared.constants import STATE_TOL
from pauli_forge.shared.errors import DimensionMismatch, DomainError, NotAChannel
from pauli_forge.shared.types import ComplexMatrix


def _qubits_for_dim(dim: int) -> int:
    n = int(round(math.log2(dim))) if dim > 0 else -1
    if n < 0 or 2**n != dim:
        raise DimensionMismatch(f"Dimension {dim} is not a power of 2")
    return n


@dataclass(frozen=True)
class DensityMatrix:
    """Validated density matrix on N qubits (qubit 0 most significant)."""

    matrix: ComplexMatrix

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatch(f"Density matrix must be square, got shape {m.shape}")
        _qubits_for_dim(m.shape[0])
        if np.max(np.abs(m - m.conj().T), initial=0.0) > STATE_TOL:
            raise DomainError("Density matrix is not Hermitian")
        if abs(np.trace(m) - 1.0) > STATE_TOL:
            raise DomainError(f"Density matrix trace is {np.trace(m).real:.12f}, not 1")
        if np.linalg.eigvalsh((m + m.conj().T) / 2).min() < -STATE_TOL:
            raise NotAChannel("Density matrix has a negative eigenvalue")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_qubits(self) -> int:
        return _qubits_for_dim(self.dim)

    @classmethod
    def from_pure(cls, psi: Sequence[complex]) -> "DensityMatrix":
        psi = np.asarray(psi, dtype=complex)
        psi = psi / np.linalg.norm(psi)
        return cls(np.outer(psi, psi.conj()))

    @classmethod
    def basis_state(cls, index: int, n_qubits: int) -> "DensityMatrix":
        psi = np.zeros(2**n_qubits, dtype=complex)
        psi[index] = 1.0
        return cls.from_pure(psi)

    @classmethod
    def maximally_mixed(cls, n_qubits: int) -> "DensityMatrix":
        return cls(np.eye(2**n_qubits, dtype=complex) / 2**n_qubits)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DensityMatrix":
        """Parse {"n_qubits", "re": [[...]], "im": [[...]]} ("im" optional)."""
        re = np.asarray(data["re"], dtype=float)
        im = np.asarray(data.get("im", np.zeros_like(re)), dtype=float)
        rho = cls(re + 1j * im)
        if "n_qubits" in data and int(data["n_qubits"]) != rho.n_qubits:
            raise DimensionMismatch(f"n_qubits={data['n_qubits']} does not match matrix size")
        return rho

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n_qubits": self.n_qubits,
            "re": self.matrix.real.tolist(),
            "im": self.matrix.imag.tolist(),
        }


@dataclass(frozen=True)
class BlochCoefficients:
    """r_alpha = Tr(rho sigma_alpha) over all Pauli strings; r[0] = 1."""

    r: np.ndarray

    def __post_init__(self) -> None:
        r = np.array(self.r, dtype=float).reshape(-1)
        n = round(math.log(r.size, 4)) if r.size > 0 else 0
        if n < 1 or 4**n != r.size:
            raise DimensionMismatch(f"Length {r.size} is not a power of 4")
        if abs(r[0] - 1.0) > STATE_TOL:
            raise DomainError(f"r[0] must be 1, got {r[0]}")
        r.setflags(write=False)
        object.__setattr__(self, "r", r)

    @property
    def n_qubits(self) -> int:
        return round(math.log(self.r.size, 4))

    @property
    def bloch_vector(self) -> np.ndarray:
        """(r1, r2, r3) for one qubit."""
        if self.r.size != 4:
            raise DimensionMismatch("The Bloch vector is defined for one qubit only")
        return self.r[1:].copy()


def bloch_decompose(rho: DensityMatrix) -> BlochCoefficients:
    paulis = all_pauli_matrices(rho.n_qubits)
    r = np.einsum("aij,ji->a", paulis, rho.matrix).real
    return BlochCoefficients(r)


def bloch_compose(r: BlochCoefficients) -> DensityMatrix:
    """rho = (1/2^N) sum_alpha r_alpha sigma_alpha.

    Raises:
        NotAChannel: If the result has an eigenvalue below -1e-10
    """
    n = r.n_qubits
    m = np.einsum("a,aij->ij", r.r, all_pauli_matrices(n)) / 2**n
    return DensityMatrix(m)


def partial_trace(rho: ComplexMatrix, keep: Sequence[int], n_qubits: int) -> ComplexMatrix:
    """Trace out every qubit not listed in ``keep``; kept qubits stay in ascending order."""
    keep = sorted(set(int(q) for q in keep))
    if any(q < 0 or q >= n_qubits for q in keep):
        raise DimensionMismatch(f"Qubits {keep} out of range for {n_qubits} qubits")
    rho = np.asarray(rho)
    if rho.shape != (2**n_qubits, 2**n_qubits):
        raise DimensionMismatch(f"Expected {2**n_qubits}x{2**n_qubits}, got {rho.shape}")
    traced = [q for q in range(n_qubits) if q not in keep]
    tensor = rho.reshape((2,) * (2 * n_qubits))
    # einsum labels: row axes 0..n-1, column axes n..2n-1; traced columns reuse row labels
    row_labels = list(range(n_qubits))
    col_labels = [q if q in traced else n_qubits + q for q in range(n_qubits)]
    out_labels = keep + [n_qubits + q for q in keep]
    result = np.einsum(tensor, row_labels + col_labels, out_labels)
    d = 2 ** len(keep)
    return result.reshape(d, d)
