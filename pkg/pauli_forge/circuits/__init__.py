"""
Circuits: gate IR, exact simulation, Pauli-channel synthesis, decompositions, QASM.

Builds on channels/ (density matrices, partial trace) and pauli_algebra/.
Circuits are immutable; simulation functions are pure apart from metrics.
"""

from pauli_forge.circuits.circuit import Circuit
from pauli_forge.circuits.decompositions import (
    compile_unitary,
    decompose_for_export,
    diagonal_gates,
    uniformly_controlled_rotation,
    zyz_angles,
)
from pauli_forge.circuits.gates import (
    Gate,
    GateKind,
    cx,
    cy,
    cz,
    h,
    rotation_matrix,
    rx,
    ry,
    rz,
    x,
    y,
    z,
)
from pauli_forge.circuits.noise import NOISELESS, NoiseModel, depolarize_tensor
from pauli_forge.circuits.qasm import export_qasm, parse_qasm
from pauli_forge.circuits.simulator import (
    apply_noise,
    circuit_unitary,
    evolve_density,
    induced_channel,
    simulate_channel,
    simulate_unitary,
)
from pauli_forge.circuits.synthesis import (
    AngleTriple,
    ancilla_state_gates,
    three_rotation_circuit,
    one_qubit_angles,
    prepare_ancilla_state,
    synthesize_channel_circuit,
)

__all__ = [
    "Gate",
    "GateKind",
    "rotation_matrix",
    "rx",
    "ry",
    "rz",
    "x",
    "y",
    "z",
    "h",
    "cx",
    "cy",
    "cz",
    "Circuit",
    "NoiseModel",
    "NOISELESS",
    "depolarize_tensor",
    "simulate_unitary",
    "circuit_unitary",
    "evolve_density",
    "simulate_channel",
    "apply_noise",
    "induced_channel",
    "AngleTriple",
    "one_qubit_angles",
    "three_rotation_circuit",
    "ancilla_state_gates",
    "prepare_ancilla_state",
    "synthesize_channel_circuit",
    "uniformly_controlled_rotation",
    "diagonal_gates",
    "zyz_angles",
    "compile_unitary",
    "decompose_for_export",
    "export_qasm",
    "parse_qasm",
]
