"""Gate IR: single-target gates with an optional list of (qubit, value) controls."""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

import numpy as np

from pauli_forge.pauli_algebra import PAULI_MATRICES
from pauli_forge.shared.errors import DomainError
from pauli_forge.shared.types import ComplexMatrix


class GateKind(str, Enum):
    RX = "rx"
    RY = "ry"
    RZ = "rz"
    X = "x"
    Y = "y"
    Z = "z"
    H = "h"

    @property
    def is_rotation(self) -> bool:
        return self in (GateKind.RX, GateKind.RY, GateKind.RZ)

    @property
    def is_pauli(self) -> bool:
        return self in (GateKind.X, GateKind.Y, GateKind.Z)


_FIXED = {
    GateKind.X: PAULI_MATRICES[1],
    GateKind.Y: PAULI_MATRICES[2],
    GateKind.Z: PAULI_MATRICES[3],
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2),
}


def rotation_matrix(kind: GateKind, angle: float) -> ComplexMatrix:
    """exp(-i angle P / 2) for P in {X, Y, Z}."""
    c, s = math.cos(angle / 2), math.sin(angle / 2)
    if kind is GateKind.RX:
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    if kind is GateKind.RY:
        return np.array([[c, -s], [s, c]], dtype=complex)
    if kind is GateKind.RZ:
        return np.array([[c - 1j * s, 0], [0, c + 1j * s]], dtype=complex)
    raise DomainError(f"{kind} is not a rotation")


@dataclass(frozen=True)
class Gate:
    """One gate. CX/CY/CZ are X/Y/Z with a single control of value 1.

    ``controls`` holds (qubit, value) pairs; the base operation applies only when
    every control qubit is in the given computational state.
    """

    kind: GateKind
    target: int
    angle: Optional[float] = None
    controls: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        kind = GateKind(self.kind)
        object.__setattr__(self, "kind", kind)
        controls = tuple((int(q), int(v)) for q, v in self.controls)
        object.__setattr__(self, "controls", controls)
        if kind.is_rotation:
            if self.angle is None or not math.isfinite(self.angle):
                raise DomainError(f"{kind.value} needs a finite angle")
            object.__setattr__(self, "angle", float(self.angle))
        elif self.angle is not None:
            raise DomainError(f"{kind.value} takes no angle")
        control_qubits = [q for q, _ in controls]
        if self.target in control_qubits or len(set(control_qubits)) != len(control_qubits):
            raise DomainError(f"Targets and controls overlap: {self.target}, {controls}")
        if any(v not in (0, 1) for _, v in controls):
            raise DomainError(f"Control values must be 0 or 1: {controls}")

    @property
    def qubits(self) -> Tuple[int, ...]:
        """Touched qubits in local-matrix order: controls first, then the target."""
        return tuple(q for q, _ in self.controls) + (self.target,)

    def base_matrix(self) -> ComplexMatrix:
        if self.kind.is_rotation:
            return rotation_matrix(self.kind, self.angle)
        return _FIXED[self.kind]

    def matrix(self) -> ComplexMatrix:
        """Matrix on ``self.qubits`` with the first listed qubit most significant."""
        base = self.base_matrix()
        if not self.controls:
            return base
        k = len(self.controls)
        full = np.eye(2 ** (k + 1), dtype=complex)
        active = 0
        for _, value in self.controls:
            active = 2 * active + value
        sl = slice(2 * active, 2 * active + 2)
        full[sl, sl] = base
        return full

    def inverse(self) -> "Gate":
        if self.kind.is_rotation:
            return Gate(self.kind, self.target, -self.angle, self.controls)
        return self

    def remap(self, mapping: Dict[int, int]) -> "Gate":
        return Gate(
            self.kind,
            mapping[self.target],
            self.angle,
            tuple((mapping[q], v) for q, v in self.controls),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "angle": self.angle,
            "targets": [self.target],
            "controls": [[q, v] for q, v in self.controls],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Gate":
        targets = data["targets"]
        if len(targets) != 1:
            raise DomainError(f"Gates have exactly one target, got {targets}")
        return cls(
            GateKind(str(data["kind"]).lower()),
            int(targets[0]),
            data.get("angle"),
            tuple((int(q), int(v)) for q, v in data.get("controls", [])),
        )


def rx(target: int, angle: float) -> Gate:
    return Gate(GateKind.RX, target, angle)


def ry(target: int, angle: float) -> Gate:
    return Gate(GateKind.RY, target, angle)


def rz(target: int, angle: float) -> Gate:
    return Gate(GateKind.RZ, target, angle)


def x(target: int) -> Gate:
    return Gate(GateKind.X, target)


def y(target: int) -> Gate:
    return Gate(GateKind.Y, target)


def z(target: int) -> Gate:
    return Gate(GateKind.Z, target)


def h(target: int) -> Gate:
    return Gate(GateKind.H, target)


def cx(control: int, target: int) -> Gate:
    return Gate(GateKind.X, target, controls=((control, 1),))


def cy(control: int, target: int) -> Gate:
    return Gate(GateKind.Y, target, controls=((control, 1),))


def cz(control: int, target: int) -> Gate:
    return Gate(GateKind.Z, target, controls=((control, 1),))
