"""
Dense exact simulation.

Qubit 0 is the most significant bit (Kronecker order). States are kept as
tensors of shape (2,)*n (statevector) or (2,)*2n (density matrix, row axes
first) and gates are contracted onto the axes they touch.
"""

from typing import Optional, Sequence

import numpy as np
import structlog

from pauli_forge.channels import DensityMatrix, partial_trace
from pauli_forge.circuits.circuit import Circuit
from pauli_forge.circuits.noise import NoiseModel, depolarize_tensor
from pauli_forge.observability.metrics.collector import get_metrics_collector
from pauli_forge.shared.errors import DimensionMismatch
from pauli_forge.shared.resource_limits import get_resource_limiter
from pauli_forge.shared.types import ChannelEvaluator, ComplexMatrix, ComplexVector

logger = structlog.get_logger(__name__)


def _apply_matrix(tensor: np.ndarray, matrix: np.ndarray, axes: Sequence[int]) -> np.ndarray:
    k = len(axes)
    gate = matrix.reshape((2,) * (2 * k))
    moved = np.tensordot(gate, tensor, axes=(list(range(k, 2 * k)), list(axes)))
    return np.moveaxis(moved, list(range(k)), list(axes))


def simulate_unitary(c: Circuit, psi: ComplexVector) -> ComplexVector:
    """Exact statevector evolution (global phase included).

    Raises:
        DimensionMismatch: If ``psi`` does not have 2^n entries
    """
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (2**c.n_qubits,):
        raise DimensionMismatch(f"State of shape {psi.shape} for a {c.n_qubits}-qubit circuit")
    get_resource_limiter().check_statevector(c.n_qubits)
    tensor = psi.reshape((2,) * c.n_qubits)
    for gate in c.gates:
        tensor = _apply_matrix(tensor, gate.matrix(), gate.qubits)
    get_metrics_collector().record_simulation("unitary")
    return np.exp(1j * c.global_phase) * tensor.reshape(-1)


def circuit_unitary(c: Circuit) -> ComplexMatrix:
    """The full 2^n x 2^n unitary of a circuit."""
    get_resource_limiter().check_density(c.n_qubits)
    dim = 2**c.n_qubits
    tensor = np.eye(dim, dtype=complex).reshape((2,) * c.n_qubits + (dim,))
    for gate in c.gates:
        tensor = _apply_matrix(tensor, gate.matrix(), gate.qubits)
    return np.exp(1j * c.global_phase) * tensor.reshape(dim, dim)


def evolve_density(
    c: Circuit, rho: ComplexMatrix, noise: Optional[NoiseModel] = None
) -> ComplexMatrix:
    """Evolve an operator on the full register, with gate-local depolarizing noise if given."""
    n = c.n_qubits
    get_resource_limiter().check_density(n)
    tensor = np.asarray(rho, dtype=complex).reshape((2,) * (2 * n))
    for gate in c.gates:
        matrix = gate.matrix()
        tensor = _apply_matrix(tensor, matrix, gate.qubits)
        tensor = _apply_matrix(tensor, matrix.conj(), [q + n for q in gate.qubits])
        if noise is not None:
            strength = noise.gate_strength(len(gate.qubits))
            tensor = depolarize_tensor(tensor, gate.qubits, strength, n)
    get_metrics_collector().record_simulation("density" if noise is None else "noisy")
    return tensor.reshape(2**n, 2**n)


def _embed_main(c: Circuit, op_main: ComplexMatrix) -> ComplexMatrix:
    """op_main on the main qubits (in ascending order) tensored with |0..0><0..0| ancillas."""
    n = c.n_qubits
    main = list(c.main_qubits)
    ancillas = [q for q in range(n) if q not in main]
    zero = np.zeros((2 ** len(ancillas), 2 ** len(ancillas)), dtype=complex)
    zero[0, 0] = 1.0
    full = np.kron(op_main, zero)
    order = main + ancillas
    position = [order.index(q) for q in range(n)]
    tensor = full.reshape((2,) * (2 * n)).transpose(position + [n + p for p in position])
    return tensor.reshape(2**n, 2**n)


def _run_on_main(c: Circuit, op_main: ComplexMatrix, noise: Optional[NoiseModel]) -> ComplexMatrix:
    main = c.main_qubits
    op_main = np.asarray(op_main, dtype=complex)
    if op_main.shape != (2 ** len(main), 2 ** len(main)):
        raise DimensionMismatch(
            f"Operator of shape {op_main.shape} for {len(main)} main qubits"
        )
    full = evolve_density(c, _embed_main(c, op_main), noise)
    return partial_trace(full, main, c.n_qubits)


def simulate_channel(
    c: Circuit, rho_main: DensityMatrix, noise: Optional[NoiseModel] = None
) -> DensityMatrix:
    """Evolve rho_main (x) |0><0|_anc under ``c`` and trace out the ancillas."""
    out = _run_on_main(c, rho_main.matrix, noise)
    return DensityMatrix((out + out.conj().T) / 2)


def apply_noise(c: Circuit, nm: NoiseModel, rho_main: DensityMatrix) -> DensityMatrix:
    """simulate_channel with gate-local depolarizing noise (no sampling)."""
    return simulate_channel(c, rho_main, nm)


def induced_channel(c: Circuit, noise: Optional[NoiseModel] = None) -> ChannelEvaluator:
    """Evaluator of the map induced on the main qubits; accepts arbitrary operators."""

    def evaluate(op: ComplexMatrix) -> ComplexMatrix:
        return _run_on_main(c, op, noise)

    return evaluate
