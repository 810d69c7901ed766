"""
1PR circuits in normal form: U(s) = A . R(s) . B.

R(s) is RZ(2s) on the last qubit, controlled (value 1) by a set of the other
qubits. Every basis column of U(s) then decomposes as
e^{is}|a^j> + e^{-is}|b^j> + |c^j> with p-independent orthogonal parts, and
conversely any valid decomposition is realized by choosing the columns of A and
B accordingly.
"""

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence, Tuple

import numpy as np
import structlog
from scipy.linalg import null_space, polar

from pauli_forge.circuits import Circuit, Gate, GateKind, compile_unitary
from pauli_forge.onepr.decomposition import OneprDecomposition
from pauli_forge.shared.determinism import DeterministicRandom
from pauli_forge.shared.errors import DimensionMismatch, DomainError
from pauli_forge.shared.types import ComplexMatrix, ComplexVector

logger = structlog.get_logger(__name__)

_ZERO_NORM = 1e-12


@dataclass(frozen=True)
class OneprCircuit:
    """Normal-form 1PR circuit on ``n_qubits`` with the rotation on the last qubit."""

    a_matrix: ComplexMatrix
    b_matrix: ComplexMatrix
    n_qubits: int
    controls: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        dim = 2**self.n_qubits
        for name in ("a_matrix", "b_matrix"):
            m = np.asarray(getattr(self, name), dtype=complex)
            if m.shape != (dim, dim):
                raise DimensionMismatch(f"{name} of shape {m.shape} for {self.n_qubits} qubits")
            if not np.allclose(m.conj().T @ m, np.eye(dim), atol=1e-10):
                raise DomainError(f"{name} is not unitary")
            m.setflags(write=False)
            object.__setattr__(self, name, m)
        controls = tuple(sorted(int(q) for q in self.controls))
        if any(not 0 <= q < self.target for q in controls) or len(set(controls)) != len(controls):
            raise DomainError(f"Controls {self.controls} must be distinct qubits below {self.target}")
        object.__setattr__(self, "controls", controls)

    @property
    def dim(self) -> int:
        return 2**self.n_qubits

    @property
    def target(self) -> int:
        return self.n_qubits - 1

    def rotation(self, s: float) -> Gate:
        return Gate(GateKind.RZ, self.target, 2 * s, controls=tuple((q, 1) for q in self.controls))

    def _bit(self, q: int) -> np.ndarray:
        return (np.arange(self.dim) >> (self.n_qubits - 1 - q)) & 1

    def _branches(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Masks of basis states picking up e^{is}, e^{-is} and no phase."""
        active = np.ones(self.dim, dtype=bool)
        for q in self.controls:
            active &= self._bit(q) == 1
        last = self._bit(self.target) == 1
        return active & last, active & ~last, ~active

    def rotation_matrix(self, s: float) -> ComplexMatrix:
        plus, minus, _ = self._branches()
        diagonal = np.ones(self.dim, dtype=complex)
        diagonal[plus] = np.exp(1j * s)
        diagonal[minus] = np.exp(-1j * s)
        return np.diag(diagonal)

    def unitary(self, s: float) -> ComplexMatrix:
        return self.a_matrix @ self.rotation_matrix(s) @ self.b_matrix

    def column_decomposition(self, j: int = 0) -> Tuple[ComplexVector, ComplexVector, ComplexVector]:
        """(a^j, b^j, c^j) with U(s)|j> = e^{is} a^j + e^{-is} b^j + c^j."""
        column = self.b_matrix[:, j]
        return tuple(self.a_matrix @ np.where(mask, column, 0.0) for mask in self._branches())

    @cached_property
    def _compiled(self) -> Tuple[Tuple[Gate, ...], Tuple[Gate, ...], float]:
        qubits = list(range(self.n_qubits))
        b_gates, b_phase = compile_unitary(self.b_matrix, qubits)
        a_gates, a_phase = compile_unitary(self.a_matrix, qubits)
        return tuple(b_gates), tuple(a_gates), b_phase + a_phase

    def bind(self, s: float) -> Circuit:
        """Gate-level circuit at phase s: compiled B, the rotation, compiled A."""
        b_gates, a_gates, phase = self._compiled
        return Circuit(self.n_qubits, b_gates + (self.rotation(s),) + a_gates, (), phase)

    def output_state(self, s: float) -> ComplexVector:
        return self.unitary(s)[:, 0]


def _complete(fixed: dict, dim: int) -> ComplexMatrix:
    """Unitary whose column i is fixed[i]; the rest span the orthogonal complement."""
    matrix = np.zeros((dim, dim), dtype=complex)
    for index, column in fixed.items():
        matrix[:, index] = column
    free = [i for i in range(dim) if i not in fixed]
    if fixed:
        complement = null_space(np.stack(list(fixed.values())).conj())
    else:
        complement = np.eye(dim, dtype=complex)
    matrix[:, free] = complement[:, : len(free)]
    unitary, _ = polar(matrix)
    return unitary


def synthesize_onepr_circuit(d: OneprDecomposition, n_qubits: Optional[int] = None) -> OneprCircuit:
    """Circuit whose output A R(s) B |0> equals evaluate_decomposition(d, p) at s = s(p).

    B|0> = |a| e_{D-1} + |b| e_{D-2} + |c| e_{D-3} and A maps e_{D-1}, e_{D-2},
    e_{D-3} to a/|a|, b/|b|, c/|c|. The rotation is controlled by every other
    qubit, so only e_{D-1} and e_{D-2} acquire phases. Zero-norm parts leave
    their column of A free. Vectors shorter than 2^n_qubits are zero padded.

    Raises:
        DomainError: If the register is too small, or one qubit is asked to
            carry a decomposition with c != 0
    """
    n_qubits = int(math.ceil(math.log2(d.dim))) if n_qubits is None else n_qubits
    dim = 2**n_qubits
    if dim < d.dim:
        raise DomainError(f"{n_qubits} qubits cannot hold vectors of dimension {d.dim}")
    parts = [np.concatenate([v, np.zeros(dim - d.dim, dtype=complex)]) for v in (d.a, d.b, d.c)]
    norms = [float(np.linalg.norm(v)) for v in parts]
    if dim == 2 and norms[2] > _ZERO_NORM:
        raise DomainError("A one-qubit 1PR circuit cannot carry a nonzero c")

    slots = [dim - 1, dim - 2, dim - 3] if dim > 2 else [1, 0]
    prepared = np.zeros(dim, dtype=complex)
    targets = {}
    for slot, vector, norm in zip(slots, parts, norms):
        prepared[slot] = norm
        if norm > _ZERO_NORM:
            targets[slot] = vector / norm
    b_matrix = _complete({0: prepared}, dim)
    a_matrix = _complete(targets, dim)
    logger.debug("onepr_synthesized", n_qubits=n_qubits, norms=norms)
    return OneprCircuit(a_matrix, b_matrix, n_qubits, tuple(range(n_qubits - 1)))


def random_onepr_circuit(
    n_qubits: int, seed: int = 0, controls: Optional[Sequence[int]] = None
) -> OneprCircuit:
    """Haar-random A and B with a random (or given) control set."""
    rng = DeterministicRandom(seed)
    dim = 2**n_qubits
    b_matrix = rng.haar_unitary(dim)
    a_matrix = rng.haar_unitary(dim)
    if controls is None:
        mask = rng.uniform(0.0, 1.0, n_qubits - 1) < 0.5
        controls = tuple(int(q) for q in np.flatnonzero(mask))
    return OneprCircuit(a_matrix, b_matrix, n_qubits, tuple(controls))

