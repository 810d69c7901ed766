"""File formats read by the command line, validated with pydantic before use."""

import json
from pathlib import Path
from typing import Any, List, Optional, Tuple, Type, TypeVar, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from pauli_forge.channels import DensityMatrix
from pauli_forge.circuits import Circuit, GateKind
from pauli_forge.onepr import StateCurve
from pauli_forge.pauli_algebra import PauliProbVector

M = TypeVar("M", bound=BaseModel)


class ChannelFile(BaseModel):
    """{"n_qubits": N, "k": [...]}; a bare array of probabilities is also accepted."""

    model_config = ConfigDict(extra="forbid")

    n_qubits: Optional[int] = Field(default=None, ge=1, le=8)
    k: List[float] = Field(min_length=4)

    @model_validator(mode="before")
    @classmethod
    def _wrap_array(cls, data: Any) -> Any:
        return {"k": data} if isinstance(data, list) else data

    def to_domain(self) -> PauliProbVector:
        return PauliProbVector.from_json(self.model_dump(exclude_none=True))


class DensityFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n_qubits: Optional[int] = Field(default=None, ge=1)
    re: List[List[float]]
    im: Optional[List[List[float]]] = None

    def to_domain(self) -> DensityMatrix:
        return DensityMatrix.from_dict(self.model_dump(exclude_none=True))


class GateEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: GateKind
    angle: Optional[float] = None
    targets: List[int] = Field(min_length=1, max_length=1)
    controls: List[Tuple[int, int]] = Field(default_factory=list)


class CircuitFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n_qubits: int = Field(ge=1)
    gates: List[GateEntry] = Field(default_factory=list)
    ancilla_range: List[int] = Field(default_factory=list)
    global_phase: float = 0.0

    def to_domain(self) -> Circuit:
        return Circuit.from_dict(self.model_dump(mode="json"))


class CurveSample(BaseModel):
    model_config = ConfigDict(extra="forbid")

    p: float
    re: List[float] = Field(min_length=1)
    im: Optional[List[float]] = None


class CurveFile(BaseModel):
    """{"dim", "samples": [{"p", "re", "im"}]}."""

    model_config = ConfigDict(extra="forbid")

    dim: Optional[int] = Field(default=None, ge=1)
    samples: List[CurveSample] = Field(min_length=1)

    def to_domain(self) -> StateCurve:
        return StateCurve.from_dict(self.model_dump(exclude_none=True))


def read_json(path: Union[str, Path]) -> Any:
    return json.loads(Path(path).read_text())


def load_model(path: Union[str, Path], model: Type[M]) -> M:
    """Parse and validate a JSON file.

    Raises:
        pydantic.ValidationError: On malformed content
    """
    return model.model_validate(read_json(path))
