import math

import numpy as np
import pytest

from pauli_forge.channels import named_dynamical_map, named_map
from pauli_forge.circuits import Circuit, GateKind, circuit_unitary, rotation_matrix
from pauli_forge.onepr import (
    AxisRotation,
    OneprDecomposition,
    StateCurve,
    axis_to_z_normal_form,
    check_conditions,
    curve_from_decomposition,
    evaluate_decomposition,
    lift_map,
    named_decomposition,
)
from pauli_forge.shared.errors import DimensionMismatch, DomainError


class TestNormalForm:
    def _product(self, rot: AxisRotation, s: float) -> np.ndarray:
        pre, middle, post = axis_to_z_normal_form(AxisRotation(rot.axis, s))
        return circuit_unitary(Circuit(1, tuple(pre + [middle] + post)))

    def test_z_axis_needs_no_conjugation(self):
        pre, middle, post = axis_to_z_normal_form(AxisRotation((0.0, 0.0, 1.0), 0.4))
        assert pre == [] and post == []
        assert middle.kind is GateKind.RZ and middle.angle == pytest.approx(0.8)

    def test_x_axis_quarter_turn_is_rx(self):
        rot = AxisRotation((1.0, 0.0, 0.0))
        np.testing.assert_allclose(
            self._product(rot, math.pi / 4), rotation_matrix(GateKind.RX, math.pi / 2), atol=1e-12
        )

    @pytest.mark.parametrize("s", [-1.2, 0.0, 0.37, 2.9])
    def test_diagonal_axis(self, s):
        rot = AxisRotation(tuple(np.ones(3) / math.sqrt(3)))
        np.testing.assert_allclose(self._product(rot, s), rot.matrix(s), atol=1e-12)

    def test_random_axis(self, rng):
        axis = rng.generator.standard_normal(3)
        rot = AxisRotation(tuple(axis / np.linalg.norm(axis)), 0.8)
        np.testing.assert_allclose(self._product(rot, 0.8), rot.matrix(), atol=1e-12)

    def test_axis_must_be_unit(self):
        with pytest.raises(DomainError):
            AxisRotation((1.0, 1.0, 0.0))


class TestDecomposition:
    def test_conditions(self):
        a = np.array([0.5, -0.5j])
        assert check_conditions(a, a.conj(), np.zeros(2))
        assert not check_conditions(a, a, np.zeros(2))
        with pytest.raises(DimensionMismatch):
            check_conditions(a, a, np.zeros(3))

    @pytest.mark.parametrize("name", ["bitflip", "phaseflip", "bitphaseflip", "depolarizing", "parabolic"])
    def test_named_decompositions_reproduce_sqrt_k(self, name):
        d = named_decomposition(name)
        for p in d.p_samples[::12]:
            np.testing.assert_allclose(
                evaluate_decomposition(d, p), np.sqrt(named_map(name, p).k), atol=1e-12
            )

    def test_named_norms(self):
        np.testing.assert_allclose(named_decomposition("bitflip").norms_squared, (0.5, 0.5, 0.0))
        np.testing.assert_allclose(named_decomposition("parabolic").norms_squared, (0.25, 0.25, 0.5))

    def test_bitflip_schedule(self):
        assert math.sin(named_decomposition("bitflip").s(0.25)) == pytest.approx(0.5, abs=1e-4)

    def test_unknown_name(self):
        with pytest.raises(DomainError):
            named_decomposition("amplitude-damping")

    def test_schedule_outside_domain(self):
        with pytest.raises(DomainError):
            evaluate_decomposition(named_decomposition("bitflip"), 1.5)

    def test_validation(self):
        a = np.array([0.5, -0.5j])
        p = np.array([0.0, 0.5, 1.0])
        with pytest.raises(DomainError):
            OneprDecomposition(a, a, np.zeros(2), p, np.zeros(3))
        with pytest.raises(DomainError):
            OneprDecomposition(a, a.conj(), np.zeros(2), p, np.array([0.0, 1.0, 0.5]))
        with pytest.raises(DomainError):
            OneprDecomposition(a, a.conj(), np.zeros(2), p[::-1], np.zeros(3))
        with pytest.raises(DimensionMismatch):
            OneprDecomposition(a, a.conj(), np.zeros(2), p, np.zeros(2))

    def test_decreasing_schedule_is_monotone_too(self):
        a = np.array([0.5, -0.5j])
        d = OneprDecomposition(a, a.conj(), np.zeros(2), np.array([0.0, 1.0]), np.array([0.0, -1.0]))
        assert d.s(0.5) == pytest.approx(-0.5)

    def test_dict_round_trip(self):
        d = named_decomposition("parabolic", n_samples=11)
        restored = OneprDecomposition.from_dict(d.to_dict())
        for name in ("a", "b", "c", "p_samples", "s_samples"):
            np.testing.assert_array_equal(getattr(restored, name), getattr(d, name))


class TestStateCurve:
    def test_from_decomposition(self):
        d = named_decomposition("depolarizing")
        curve = curve_from_decomposition(d, [0.0, 0.5, 1.0])
        assert len(curve) == 3
        assert curve.dim == 4
        np.testing.assert_allclose(curve.states[2], np.full(4, 0.5), atol=1e-12)

    def test_validation(self):
        with pytest.raises(DomainError):
            StateCurve(np.array([0.0, 1.0]), np.array([[1.0, 0.0], [1.0, 1.0]]))
        with pytest.raises(DomainError):
            StateCurve(np.array([1.0, 0.0]), np.eye(2))
        with pytest.raises(DimensionMismatch):
            StateCurve(np.array([0.0, 1.0, 2.0]), np.eye(2))

    def test_dict_round_trip(self):
        curve = lift_map(named_dynamical_map("bitflip"), 5)
        data = curve.to_dict()
        np.testing.assert_array_equal(StateCurve.from_dict(data).states, curve.states)
        del data["samples"][0]["im"]
        assert StateCurve.from_dict(data).dim == 4
        with pytest.raises(DimensionMismatch):
            StateCurve.from_dict({**data, "dim": 2})

    def test_lift_is_sqrt_k_in_real_gauge(self):
        curve = lift_map(named_dynamical_map("phaseflip"), 11)
        np.testing.assert_allclose(curve.states[3], np.sqrt(named_map("phaseflip", 0.3).k), atol=1e-12)

    def test_lift_with_phases(self):
        m = named_dynamical_map("depolarizing")
        curve = lift_map(m, 5, phases=[0.1, 0.2, 0.3])
        np.testing.assert_allclose(np.angle(curve.states[-1][1:]), [0.1, 0.2, 0.3], atol=1e-12)
        with pytest.raises(DimensionMismatch):
            lift_map(m, 5, phases=[0.1, 0.2])
