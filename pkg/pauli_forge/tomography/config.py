"""Tomography and scan configuration models."""

import json
from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np
import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from pauli_forge.circuits import NoiseModel
from pauli_forge.pauli_algebra import TauVector, tetrahedron_contains
from pauli_forge.shared.constants import (
    DEFAULT_DIAMOND_RESTARTS,
    DEFAULT_LATTICE_SPACING,
    DEFAULT_SCAN_JOBS,
    DEFAULT_SEED,
    DEFAULT_TAU3_SLICES,
)

TauPoint = Tuple[float, float, float]


class InputState(str, Enum):
    ZERO = "0"
    ONE = "1"
    PLUS = "+"
    PLUS_I = "+i"

    @property
    def bloch(self) -> np.ndarray:
        """(1, x, y, z) with rho = (I + x X + y Y + z Z) / 2."""
        return {
            InputState.ZERO: np.array([1.0, 0.0, 0.0, 1.0]),
            InputState.ONE: np.array([1.0, 0.0, 0.0, -1.0]),
            InputState.PLUS: np.array([1.0, 1.0, 0.0, 0.0]),
            InputState.PLUS_I: np.array([1.0, 0.0, 1.0, 0.0]),
        }[self]


class MeasurementBasis(str, Enum):
    X = "X"
    Y = "Y"
    Z = "Z"

    @property
    def pauli_index(self) -> int:
        return {"X": 1, "Y": 2, "Z": 3}[self.value]


class TomographyConfig(BaseModel):
    """Input states, measurement bases and shots of a one-qubit process tomography.

    ``shots=None`` uses exact Born probabilities instead of sampling.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    shots: Optional[int] = Field(default=4096, ge=1)
    input_states: Tuple[InputState, ...] = tuple(InputState)
    bases: Tuple[MeasurementBasis, ...] = tuple(MeasurementBasis)
    rng_seed: int = DEFAULT_SEED

    @model_validator(mode="after")
    def _informationally_complete(self) -> "TomographyConfig":
        design = np.array([state.bloch for state in self.input_states])
        if np.linalg.matrix_rank(design) < 4:
            raise ValueError("input_states are not informationally complete for one qubit")
        if set(self.bases) != set(MeasurementBasis):
            raise ValueError("bases must cover X, Y and Z")
        return self

    def settings(self) -> List[Tuple[InputState, MeasurementBasis]]:
        """Every (input, basis) pair in grid order."""
        return [(state, basis) for state in self.input_states for basis in self.bases]


class ScanGrid(BaseModel):
    """tau points of a tetrahedron scan.

    By default a square lattice in (tau1, tau2) on each tau3 slice, restricted
    to the tetrahedron. An explicit ``points`` list replaces the lattice and is
    passed through unfiltered.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    tau3_slices: Tuple[float, ...] = DEFAULT_TAU3_SLICES
    spacing: float = Field(default=DEFAULT_LATTICE_SPACING, gt=0.0, le=2.0)
    points: Optional[Tuple[TauPoint, ...]] = None

    @field_validator("tau3_slices")
    @classmethod
    def _slices_in_range(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        if any(not -1.0 <= t <= 1.0 for t in value):
            raise ValueError("tau3 slices must lie in [-1, 1]")
        return value

    def tau_points(self) -> List[TauPoint]:
        if self.points is not None:
            return [tuple(float(t) for t in point) for point in self.points]
        steps = int(round(2.0 / self.spacing))
        axis = np.round(np.linspace(-1.0, 1.0, steps + 1), 12)
        lattice = []
        for t3 in self.tau3_slices:
            for t1 in axis:
                for t2 in axis:
                    point = (float(t1), float(t2), float(t3))
                    if tetrahedron_contains(TauVector.from_bloch_multipliers(*point)):
                        lattice.append(point)
        return lattice


def default_scan_grid() -> ScanGrid:
    return ScanGrid()


class ScanConfig(BaseModel):
    """Everything a tetrahedron scan needs; loaded from JSON or YAML."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    grid: ScanGrid = Field(default_factory=ScanGrid)
    noise: NoiseModel = Field(default_factory=NoiseModel)
    tomography: TomographyConfig = Field(default_factory=TomographyConfig)
    seed: int = DEFAULT_SEED
    jobs: int = Field(default=DEFAULT_SCAN_JOBS, ge=1)
    diamond_restarts: int = Field(default=DEFAULT_DIAMOND_RESTARTS, ge=1)
    diamond_min_restarts: Optional[int] = Field(default=8, ge=2)
    diamond_agreement: float = Field(default=1e-5, gt=0.0)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "ScanConfig":
        path = Path(path)
        text = path.read_text()
        data = yaml.safe_load(text) if path.suffix in (".yaml", ".yml") else json.loads(text)
        return cls.model_validate(data or {})
