"""Circuit container and its JSON form."""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Tuple

from pauli_forge.circuits.gates import Gate
from pauli_forge.shared.errors import DimensionMismatch, DomainError


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list on ``n_qubits`` (main + ancilla).

    ``ancilla_range`` names the qubits that start in |0> and are traced out by
    ``simulate_channel``. ``global_phase`` is carried so compiled unitaries are
    reproduced exactly; OpenQASM 2.0 has no way to express it.
    """

    n_qubits: int
    gates: Tuple[Gate, ...] = field(default_factory=tuple)
    ancilla_range: Tuple[int, ...] = field(default_factory=tuple)
    global_phase: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "ancilla_range", tuple(int(q) for q in self.ancilla_range))
        if self.n_qubits < 1:
            raise DomainError("A circuit needs at least one qubit")
        for gate in self.gates:
            if max(gate.qubits) >= self.n_qubits or min(gate.qubits) < 0:
                raise DimensionMismatch(
                    f"Gate on qubits {gate.qubits} does not fit a {self.n_qubits}-qubit circuit"
                )
        if any(not 0 <= q < self.n_qubits for q in self.ancilla_range):
            raise DimensionMismatch(f"Ancilla range {self.ancilla_range} out of bounds")

    @property
    def main_qubits(self) -> Tuple[int, ...]:
        return tuple(q for q in range(self.n_qubits) if q not in self.ancilla_range)

    def __len__(self) -> int:
        return len(self.gates)

    def depth_count(self) -> Dict[str, int]:
        """Gate counts split by the number of touched qubits."""
        one = sum(1 for g in self.gates if len(g.qubits) == 1)
        return {"1q": one, "multi": len(self.gates) - one}

    def inverse(self) -> "Circuit":
        return Circuit(
            self.n_qubits,
            tuple(g.inverse() for g in reversed(self.gates)),
            self.ancilla_range,
            -self.global_phase,
        )

    def compose(self, other: "Circuit") -> "Circuit":
        """``self`` followed by ``other`` on the same register."""
        if other.n_qubits != self.n_qubits:
            raise DimensionMismatch(f"Cannot compose {self.n_qubits} and {other.n_qubits} qubits")
        return Circuit(
            self.n_qubits,
            self.gates + other.gates,
            self.ancilla_range or other.ancilla_range,
            self.global_phase + other.global_phase,
        )

    def with_gates(self, gates: Iterable[Gate], global_phase: float = 0.0) -> "Circuit":
        """Append gates (and a phase) to a copy of this circuit."""
        return Circuit(
            self.n_qubits,
            self.gates + tuple(gates),
            self.ancilla_range,
            self.global_phase + global_phase,
        )

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "n_qubits": self.n_qubits,
            "ancilla_range": list(self.ancilla_range),
            "gates": [g.to_dict() for g in self.gates],
        }
        if self.global_phase:
            data["global_phase"] = self.global_phase
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Circuit":
        return cls(
            int(data["n_qubits"]),
            tuple(Gate.from_dict(g) for g in data.get("gates", [])),
            tuple(data.get("ancilla_range", [])),
            float(data.get("global_phase", 0.0)),
        )

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "Circuit":
        return cls.from_dict(json.loads(text))
