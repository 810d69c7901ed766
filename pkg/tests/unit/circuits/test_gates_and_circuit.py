import math

import numpy as np
import pytest

from pauli_forge.circuits import Circuit, Gate, GateKind, cx, cy, h, rotation_matrix, rx, ry, rz, x
from pauli_forge.pauli_algebra import PAULI_MATRICES
from pauli_forge.shared.errors import DimensionMismatch, DomainError


@pytest.mark.parametrize("kind, pauli", [(GateKind.RX, 1), (GateKind.RY, 2), (GateKind.RZ, 3)])
def test_rotation_is_exponential_of_pauli(kind, pauli):
    angle = 0.731
    expected = math.cos(angle / 2) * np.eye(2) - 1j * math.sin(angle / 2) * PAULI_MATRICES[pauli]
    np.testing.assert_allclose(rotation_matrix(kind, angle), expected, atol=1e-15)


def test_controlled_matrix_places_block_at_control_value():
    np.testing.assert_array_equal(
        cx(0, 1).matrix(),
        np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    )
    zero_controlled = Gate(GateKind.X, 1, controls=((0, 0),))
    np.testing.assert_array_equal(zero_controlled.matrix()[:2, :2], PAULI_MATRICES[1])
    np.testing.assert_array_equal(zero_controlled.matrix()[2:, 2:], np.eye(2))


def test_gate_validation():
    with pytest.raises(DomainError):
        Gate(GateKind.RX, 0)
    with pytest.raises(DomainError):
        Gate(GateKind.H, 0, angle=0.1)
    with pytest.raises(DomainError):
        Gate(GateKind.X, 0, controls=((0, 1),))
    with pytest.raises(DomainError):
        Gate(GateKind.X, 0, controls=((1, 2),))
    with pytest.raises(DomainError):
        rz(0, float("nan"))


def test_gate_inverse_and_remap():
    assert ry(0, 0.3).inverse() == ry(0, -0.3)
    assert h(2).inverse() == h(2)
    assert cy(0, 1).remap({0: 5, 1: 4}) == cy(5, 4)


def test_gate_dict_round_trip():
    gate = Gate(GateKind.RZ, 2, 0.25, ((0, 1), (1, 0)))
    assert Gate.from_dict(gate.to_dict()) == gate
    with pytest.raises(DomainError):
        Gate.from_dict({"kind": "x", "targets": [0, 1]})


def test_circuit_bounds_checked():
    with pytest.raises(DimensionMismatch):
        Circuit(2, (cx(0, 2),))
    with pytest.raises(DimensionMismatch):
        Circuit(2, (), ancilla_range=(3,))
    with pytest.raises(DomainError):
        Circuit(0)


def test_circuit_bookkeeping():
    c = Circuit(3, (h(0), cx(0, 1), rx(2, 0.5)), ancilla_range=(1, 2))
    assert len(c) == 3
    assert c.main_qubits == (0,)
    assert c.depth_count() == {"1q": 2, "multi": 1}
    assert c.inverse().gates == (rx(2, -0.5), cx(0, 1), h(0))
    assert c.compose(Circuit(3, (x(1),))).gates[-1] == x(1)
    with pytest.raises(DimensionMismatch):
        c.compose(Circuit(2))


def test_circuit_json_round_trip():
    c = Circuit(2, (h(0), cx(0, 1), rz(1, -0.4)), ancilla_range=(1,), global_phase=0.3)
    assert Circuit.from_json(c.to_json()) == c
    assert "global_phase" not in Circuit(1).to_dict()
