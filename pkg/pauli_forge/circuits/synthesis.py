"""
Circuits implementing Pauli channels with ancillas.

Layout for N main qubits: main qubits 0..N-1, ancillas N..3N-1. The ancilla pair
of main qubit i is (N + 2i, N + 2i + 1) = (high bit, low bit), so the ancilla
register read as an integer equals the flat Pauli index gamma. After the ancillas
are prepared in sum_gamma sqrt(k_gamma)|gamma>, each main qubit receives CX from
its low bit and CY from its high bit: 01 -> X, 10 -> Y, 11 -> YX = iZ. Branch
phases such as the i in YX disappear when the ancillas are traced out.
"""

import math
from dataclasses import dataclass
from typing import List

import numpy as np

from pauli_forge.circuits.circuit import Circuit
from pauli_forge.circuits.decompositions import uniformly_controlled_rotation
from pauli_forge.circuits.gates import Gate, GateKind, cx, cy, ry
from pauli_forge.pauli_algebra import PauliProbVector
from pauli_forge.shared.errors import DimensionMismatch

_TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class AngleTriple:
    """Three rotation angles preparing a one-qubit ancilla pair, each in [0, 2pi)."""

    theta0: float
    theta1: float
    theta2: float

    def signed(self) -> tuple:
        """Angles mapped back to (-pi, pi].

        RY has period 4pi, so the circuit must use these rather than the stored
        [0, 2pi) representatives to keep every amplitude nonnegative.
        """
        return tuple(t - _TWO_PI if t > math.pi else t for t in (self.theta0, self.theta1, self.theta2))


def _half_angle(numerator: float, denominator: float) -> float:
    """arctan(sqrt(num / den)) in [0, pi/2]; 0/0 is taken as 0."""
    if numerator <= 0.0 and denominator <= 0.0:
        return 0.0
    return math.atan2(math.sqrt(max(numerator, 0.0)), math.sqrt(max(denominator, 0.0)))


def one_qubit_angles(k: PauliProbVector) -> AngleTriple:
    """Angles with cos(t0/2) = sqrt(k0+k1), tan((t1+t2)/2) = sqrt(k1/k0),
    tan((t2-t1)/2) = sqrt(k3/k2)."""
    if k.k.size != 4:
        raise DimensionMismatch("one_qubit_angles needs a one-qubit probability vector")
    k0, k1, k2, k3 = k.k
    theta0 = 2 * math.acos(min(1.0, math.sqrt(k0 + k1)))
    upper = _half_angle(k1, k0)  # (t1 + t2) / 2
    lower = _half_angle(k3, k2)  # (t2 - t1) / 2
    theta1 = upper - lower
    theta2 = upper + lower
    return AngleTriple(theta0 % _TWO_PI, theta1 % _TWO_PI, theta2 % _TWO_PI)


def three_rotation_circuit(angles: AngleTriple, high: int = 0, low: int = 1, n_qubits: int = 2) -> Circuit:
    """Three-rotation preparation of sum_gamma sqrt(k_gamma)|gamma> on (high, low).

    RY(t0) on the high bit, then the uniformly-controlled RY on the low bit
    realised as RY(t2), CX, RY(t1), CX: the low bit sees RY(t1 + t2) when the high
    bit is 0 and RY(t2 - t1) when it is 1.
    """
    t0, t1, t2 = angles.signed()
    gates = [ry(high, t0), ry(low, t2), cx(high, low), ry(low, t1), cx(high, low)]
    return Circuit(n_qubits, tuple(gates))


def _subtree_norms(amplitudes: np.ndarray, level: int) -> np.ndarray:
    """Norms of the 2^level subtrees of the binary amplitude tree."""
    return np.sqrt((amplitudes.reshape(2**level, -1) ** 2).sum(axis=1))


def ancilla_state_gates(k: PauliProbVector, qubits: List[int]) -> List[Gate]:
    """RY/CX gates preparing sum_gamma sqrt(k_gamma)|gamma> on ``qubits`` (MSB first)."""
    n_bits = len(qubits)
    if k.k.size != 2**n_bits:
        raise DimensionMismatch(f"{k.k.size} probabilities for a {n_bits}-bit register")
    amplitudes = np.sqrt(k.k)
    gates: List[Gate] = []
    for level in range(n_bits):
        children = _subtree_norms(amplitudes, level + 1).reshape(-1, 2)
        angles = np.array(
            [0.0 if n0 == 0.0 and n1 == 0.0 else 2 * math.atan2(n1, n0) for n0, n1 in children]
        )
        gates.extend(
            uniformly_controlled_rotation(GateKind.RY, angles, qubits[:level], qubits[level])
        )
    return gates


def prepare_ancilla_state(k: PauliProbVector) -> Circuit:
    """Circuit on 2N qubits producing real nonnegative amplitudes sqrt(k) from |0...0>."""
    n_bits = 2 * k.n_qubits
    return Circuit(n_bits, tuple(ancilla_state_gates(k, list(range(n_bits)))))


def synthesize_channel_circuit(k: PauliProbVector, n_qubits: int) -> Circuit:
    """N main + 2N ancilla circuit whose induced map on the main qubits is the Pauli channel k."""
    if k.n_qubits != n_qubits:
        raise DimensionMismatch(f"{k.k.size} probabilities do not describe {n_qubits} qubits")
    ancillas = list(range(n_qubits, 3 * n_qubits))
    gates = ancilla_state_gates(k, ancillas)
    for i in range(n_qubits):
        high, low = n_qubits + 2 * i, n_qubits + 2 * i + 1
        gates.append(cx(low, i))
        gates.append(cy(high, i))
    return Circuit(3 * n_qubits, tuple(gates), tuple(ancillas))
