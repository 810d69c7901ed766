"""OpenQASM 2.0 export and a parser for the subset we emit."""

import math
import re
from typing import List

from pauli_forge.circuits.circuit import Circuit
from pauli_forge.circuits.decompositions import decompose_for_export
from pauli_forge.circuits.gates import Gate, GateKind
from pauli_forge.shared.errors import QasmParseError, UnsupportedGate

HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";'

_CONTROLLED = {"cx": GateKind.X, "cy": GateKind.Y, "cz": GateKind.Z}
_SINGLE = {kind.value: kind for kind in GateKind}

_GATE_LINE = re.compile(
    r"^(?P<name>[a-z]+)\s*(?:\((?P<angle>[^)]*)\))?\s+(?P<args>q\[\d+\](?:\s*,\s*q\[\d+\])*)\s*;$"
)
_QREG = re.compile(r"^qreg\s+q\[(?P<n>\d+)\]\s*;$")
_PHASE = re.compile(r"^//\s*global_phase\s+(?P<phase>\S+)$")


def _format_angle(angle: float) -> str:
    return format(angle, ".17g")


def _gate_line(gate: Gate) -> str:
    if gate.controls:
        (control, value), = gate.controls
        if value != 1 or not gate.kind.is_pauli:
            raise UnsupportedGate(f"Cannot export controlled {gate.kind.value}")
        return f"c{gate.kind.value} q[{control}],q[{gate.target}];"
    if gate.kind.is_rotation:
        return f"{gate.kind.value}({_format_angle(gate.angle)}) q[{gate.target}];"
    return f"{gate.kind.value} q[{gate.target}];"


def export_qasm(c: Circuit) -> str:
    """OpenQASM 2.0 text; multi-controlled gates are decomposed first.

    A nonzero global phase is written as a ``// global_phase`` comment, which
    other consumers ignore and ``parse_qasm`` restores.
    """
    lowered = decompose_for_export(c)
    lines = [HEADER, f"qreg q[{c.n_qubits}];"]
    phase = math.remainder(lowered.global_phase, 2 * math.pi)
    if abs(phase) > 0.0:
        lines.append(f"// global_phase {_format_angle(phase)}")
    lines.extend(_gate_line(g) for g in lowered.gates)
    return "\n".join(lines) + "\n"


def parse_qasm(text: str) -> Circuit:
    """Parse the subset produced by export_qasm (one qreg named q)."""
    n_qubits = None
    phase = 0.0
    gates: List[Gate] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        match = _PHASE.match(line)
        if match:
            phase = float(match.group("phase"))
            continue
        if line.startswith("//") or line == "OPENQASM 2.0;" or line.startswith("include"):
            continue
        match = _QREG.match(line)
        if match:
            if n_qubits is not None:
                raise QasmParseError("only one qreg is supported", number)
            n_qubits = int(match.group("n"))
            continue
        match = _GATE_LINE.match(line)
        if not match:
            raise QasmParseError(f"cannot parse '{line}'", number)
        if n_qubits is None:
            raise QasmParseError("gate before qreg declaration", number)
        gates.append(_parse_gate(match, number))
    if n_qubits is None:
        raise QasmParseError("missing qreg declaration")
    return Circuit(n_qubits, tuple(gates), global_phase=phase)


def _parse_gate(match: re.Match, number: int) -> Gate:
    name = match.group("name")
    qubits = [int(q) for q in re.findall(r"q\[(\d+)\]", match.group("args"))]
    angle_text = match.group("angle")
    if name in _CONTROLLED:
        if len(qubits) != 2 or angle_text is not None:
            raise QasmParseError(f"{name} takes two qubits and no angle", number)
        return Gate(_CONTROLLED[name], qubits[1], controls=((qubits[0], 1),))
    if name not in _SINGLE:
        raise UnsupportedGate(f"line {number}: unsupported gate '{name}'")
    kind = _SINGLE[name]
    if len(qubits) != 1:
        raise QasmParseError(f"{name} takes one qubit", number)
    if kind.is_rotation:
        if angle_text is None:
            raise QasmParseError(f"{name} needs an angle", number)
        try:
            angle = float(angle_text)
        except ValueError:
            raise QasmParseError(f"bad angle '{angle_text}'", number) from None
        return Gate(kind, qubits[0], angle)
    if angle_text is not None:
        raise QasmParseError(f"{name} takes no angle", number)
    return Gate(kind, qubits[0])
