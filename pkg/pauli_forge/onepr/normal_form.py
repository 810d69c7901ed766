"""Reduce a rotation about any axis to a Z rotation between fixed gates."""

import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from pauli_forge.circuits import Gate, GateKind
from pauli_forge.pauli_algebra import PAULI_MATRICES
from pauli_forge.shared.errors import DomainError
from pauli_forge.shared.types import ComplexMatrix


@dataclass(frozen=True)
class AxisRotation:
    """R_n(2s) = exp(-i s n.sigma) for a unit axis n."""

    axis: Tuple[float, float, float]
    s: float = 0.0

    def __post_init__(self) -> None:
        axis = tuple(float(a) for a in self.axis)
        if len(axis) != 3 or abs(math.sqrt(sum(a * a for a in axis)) - 1.0) > 1e-12:
            raise DomainError(f"Rotation axis must be a unit 3-vector, got {self.axis}")
        object.__setattr__(self, "axis", axis)

    @property
    def polar(self) -> float:
        return math.acos(max(-1.0, min(1.0, self.axis[2])))

    @property
    def azimuth(self) -> float:
        return math.atan2(self.axis[1], self.axis[0])

    def matrix(self, s: float | None = None) -> ComplexMatrix:
        s = self.s if s is None else s
        n_sigma = sum(n * p for n, p in zip(self.axis, PAULI_MATRICES[1:]))
        return math.cos(s) * np.eye(2) - 1j * math.sin(s) * n_sigma


def axis_to_z_normal_form(rot: AxisRotation, target: int = 0) -> Tuple[List[Gate], Gate, List[Gate]]:
    """(pre, RZ(2s), post) in time order with post . RZ(2s) . pre = R_n(2s).

    pre = RZ(-phi), RY(-theta); post = RY(theta), RZ(phi) with theta = arccos(n3)
    and phi = atan2(n2, n1). Zero-angle gates are dropped.
    """
    theta, phi = rot.polar, rot.azimuth
    pre = [Gate(GateKind.RZ, target, -phi), Gate(GateKind.RY, target, -theta)]
    post = [Gate(GateKind.RY, target, theta), Gate(GateKind.RZ, target, phi)]
    pre = [g for g in pre if g.angle != 0.0]
    post = [g for g in post if g.angle != 0.0]
    return pre, Gate(GateKind.RZ, target, 2 * rot.s), post
