"""
Exact decompositions into rotations and CX.

Uniformly-controlled rotations use the Gray-code cascade: for controls c_0..c_{k-1}
(c_0 most significant) and angles alpha_j indexed by the control value j,

    theta = M alpha / 2^k,  M[i, j] = (-1)^popcount(g_i & j),  g_i = i ^ (i >> 1)

and the gate list is R(theta_0), CX, R(theta_1), CX, ... where the CX after
R(theta_i) is controlled by the bit in which g_i and g_{i+1 mod 2^k} differ.
The same cascade serves RY and RZ because X R(t) X = R(-t) for both.
"""

import math
from typing import List, Sequence, Tuple

import numpy as np
from scipy.linalg import cossin, schur

from pauli_forge.circuits.circuit import Circuit
from pauli_forge.circuits.gates import Gate, GateKind, cx, h, rz, x
from pauli_forge.shared.errors import DimensionMismatch, UnsupportedGate
from pauli_forge.shared.types import ComplexMatrix

_ZERO_ANGLE = 1e-15

GateList = List[Gate]


def _gray(i: int) -> int:
    return i ^ (i >> 1)


def uniformly_controlled_rotation(
    kind: GateKind, angles: Sequence[float], controls: Sequence[int], target: int
) -> GateList:
    """Multiplexed rotation: angle ``angles[j]`` when the controls read j."""
    kind = GateKind(kind)
    if kind not in (GateKind.RY, GateKind.RZ):
        raise UnsupportedGate(f"Uniformly-controlled {kind.value} is not supported")
    controls = list(controls)
    k = len(controls)
    alpha = np.asarray(angles, dtype=float)
    if alpha.shape != (2**k,):
        raise DimensionMismatch(f"{k} controls need {2**k} angles, got {alpha.size}")
    if np.all(np.abs(alpha) < _ZERO_ANGLE):
        return []
    if k == 0:
        return [Gate(kind, target, float(alpha[0]))]

    n = 2**k
    gray = [_gray(i) for i in range(n)]
    signs = np.array(
        [[(-1) ** bin(gray[i] & j).count("1") for j in range(n)] for i in range(n)], dtype=float
    )
    theta = signs @ alpha / n

    gates: GateList = []
    for i in range(n):
        if abs(theta[i]) >= _ZERO_ANGLE:
            gates.append(Gate(kind, target, float(theta[i])))
        bit = (gray[i] ^ gray[(i + 1) % n]).bit_length() - 1
        gates.append(cx(controls[k - 1 - bit], target))
    return gates


def diagonal_gates(phases: Sequence[float], qubits: Sequence[int]) -> Tuple[GateList, float]:
    """diag(exp(i phases)) on ``qubits`` as multiplexed RZ gates plus a global phase."""
    phases = np.asarray(phases, dtype=float)
    qubits = list(qubits)
    if phases.shape != (2 ** len(qubits),):
        raise DimensionMismatch(f"{len(qubits)} qubits need {2 ** len(qubits)} phases")
    if not qubits:
        return [], float(phases[0])
    pairs = phases.reshape(-1, 2)
    gates = uniformly_controlled_rotation(
        GateKind.RZ, pairs[:, 1] - pairs[:, 0], qubits[:-1], qubits[-1]
    )
    rest, phase = diagonal_gates(pairs.mean(axis=1), qubits[:-1])
    return gates + rest, phase


def zyz_angles(u: ComplexMatrix) -> Tuple[float, float, float, float]:
    """(phase, alpha, beta, gamma) with u = e^{i phase} RZ(alpha) RY(beta) RZ(gamma)."""
    u = np.asarray(u, dtype=complex)
    phase = float(np.angle(np.linalg.det(u)) / 2)
    v = u * np.exp(-1j * phase)
    a, b = v[0, 0], v[1, 0]
    beta = 2 * math.atan2(abs(b), abs(a))
    alpha = float(np.angle(b) - np.angle(a))
    gamma = float(-np.angle(a) - np.angle(b))
    return phase, alpha, beta, gamma


def compile_unitary(u: ComplexMatrix, qubits: Sequence[int]) -> Tuple[GateList, float]:
    """Compile any unitary on ``qubits`` (first qubit most significant).

    Cosine-sine split on the first qubit, each side block demultiplexed into two
    smaller unitaries around a multiplexed RZ, ZYZ rotations at single qubits.
    """
    u = np.asarray(u, dtype=complex)
    qubits = list(qubits)
    dim = 2 ** len(qubits)
    if u.shape != (dim, dim):
        raise DimensionMismatch(f"Unitary of shape {u.shape} for {len(qubits)} qubits")
    if len(qubits) == 1:
        phase, alpha, beta, gamma = zyz_angles(u)
        gates = [Gate(GateKind.RZ, qubits[0], gamma), Gate(GateKind.RY, qubits[0], beta),
                 Gate(GateKind.RZ, qubits[0], alpha)]
        return [g for g in gates if abs(g.angle) >= _ZERO_ANGLE], phase

    half = dim // 2
    (u1, u2), theta, (v1h, v2h) = cossin(u, p=half, q=half, separate=True)
    right, right_phase = _demultiplex(v1h, v2h, qubits)
    middle = uniformly_controlled_rotation(GateKind.RY, 2 * np.asarray(theta), qubits[1:], qubits[0])
    left, left_phase = _demultiplex(u1, u2, qubits)
    return right + middle + left, right_phase + left_phase


def _demultiplex(a: ComplexMatrix, b: ComplexMatrix, qubits: List[int]) -> Tuple[GateList, float]:
    """a (+) b (selected by qubits[0]) as (I (x) V)(D (+) D^dag)(I (x) W)."""
    t, v = schur(a @ b.conj().T, output="complex")
    phi = np.angle(np.diag(t)) / 2
    w = np.diag(np.exp(1j * phi)) @ v.conj().T @ b
    w_gates, w_phase = compile_unitary(w, qubits[1:])
    d_gates = uniformly_controlled_rotation(GateKind.RZ, -2 * phi, qubits[1:], qubits[0])
    v_gates, v_phase = compile_unitary(v, qubits[1:])
    return w_gates + d_gates + v_gates, w_phase + v_phase


def _lower_gate(gate: Gate) -> Tuple[GateList, float]:
    if not gate.controls:
        return [gate], 0.0

    flips = [x(q) for q, v in gate.controls if v == 0]
    ctrl = [q for q, _ in gate.controls]
    t = gate.target
    k = len(ctrl)
    phase = 0.0

    def controlled_rotation(kind: GateKind, angle: float) -> GateList:
        angles = np.zeros(2**k)
        angles[-1] = angle
        return uniformly_controlled_rotation(kind, angles, ctrl, t)

    def controlled_z() -> Tuple[GateList, float]:
        phases = np.zeros(2 ** (k + 1))
        phases[-1] = math.pi
        return diagonal_gates(phases, ctrl + [t])

    if gate.kind.is_pauli and k == 1:
        core = [Gate(gate.kind, t, controls=((ctrl[0], 1),))]
    elif gate.kind in (GateKind.RY, GateKind.RZ):
        core = controlled_rotation(gate.kind, gate.angle)
    elif gate.kind is GateKind.RX:
        core = [h(t)] + controlled_rotation(GateKind.RZ, gate.angle) + [h(t)]
    elif gate.kind is GateKind.Z:
        core, phase = controlled_z()
    elif gate.kind is GateKind.X:
        zs, phase = controlled_z()
        core = [h(t)] + zs + [h(t)]
    elif gate.kind is GateKind.Y:
        zs, phase = controlled_z()
        core = [rz(t, -math.pi / 2), h(t)] + zs + [h(t), rz(t, math.pi / 2)]
    else:
        raise UnsupportedGate(f"Controlled {gate.kind.value} has no decomposition")
    return flips + core + flips, phase


def decompose_for_export(c: Circuit) -> Circuit:
    """Rewrite gates into {rx, ry, rz, x, y, z, h, cx, cy, cz} with an exact global phase."""
    gates: GateList = []
    phase = c.global_phase
    for gate in c.gates:
        lowered, extra = _lower_gate(gate)
        gates.extend(lowered)
        phase += extra
    return Circuit(c.n_qubits, tuple(gates), c.ancilla_range, phase)
