"""Measurement simulation: noisy density evolution, readout flips, multinomial shots."""

import math
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np
import structlog

from pauli_forge.channels import DensityMatrix
from pauli_forge.circuits import Circuit, Gate, NoiseModel, h, rx, simulate_channel, x
from pauli_forge.shared.determinism import DeterministicRandom
from pauli_forge.shared.errors import DomainError
from pauli_forge.tomography.config import InputState, MeasurementBasis, TomographyConfig

logger = structlog.get_logger(__name__)


def _preparation(state: InputState, qubit: int) -> List[Gate]:
    return {
        InputState.ZERO: [],
        InputState.ONE: [x(qubit)],
        InputState.PLUS: [h(qubit)],
        InputState.PLUS_I: [rx(qubit, -math.pi / 2)],
    }[state]


def _basis_change(basis: MeasurementBasis, qubit: int) -> List[Gate]:
    """Rotation taking the +1 eigenstate of the basis to |0>."""
    return {
        MeasurementBasis.Z: [],
        MeasurementBasis.X: [h(qubit)],
        MeasurementBasis.Y: [rx(qubit, math.pi / 2)],
    }[basis]


@dataclass(frozen=True)
class Counts:
    """Outcome counts (or exact probabilities when ``shots`` is None) of one setting."""

    input_state: InputState
    basis: MeasurementBasis
    counts: np.ndarray
    shots: Optional[int] = None

    @property
    def probabilities(self) -> np.ndarray:
        return np.asarray(self.counts, dtype=float) / float(np.sum(self.counts))

    @property
    def expectation(self) -> float:
        """<sigma_basis> estimated as p(0) - p(1)."""
        p = self.probabilities
        return float(p[0] - p[1])

    def to_dict(self) -> Dict[str, object]:
        return {
            "input": self.input_state.value,
            "basis": self.basis.value,
            "counts": [float(c) for c in self.counts],
            "shots": self.shots,
        }


def measurement_circuit(c: Circuit, state: InputState, basis: MeasurementBasis) -> Circuit:
    """``c`` sandwiched between input preparation and basis change on its main qubit."""
    if len(c.main_qubits) != 1:
        raise DomainError(f"Process tomography covers one main qubit, got {len(c.main_qubits)}")
    main = c.main_qubits[0]
    gates = _preparation(state, main) + list(c.gates) + _basis_change(basis, main)
    return Circuit(c.n_qubits, tuple(gates), c.ancilla_range, c.global_phase)


def simulate_counts(
    c: Circuit,
    nm: NoiseModel,
    input_state: InputState,
    basis: MeasurementBasis,
    shots: Optional[int],
    seed: int,
) -> Counts:
    """Exact noisy output, readout confusion, then ``shots`` multinomial samples.

    With ``shots=None`` the returned counts are the exact outcome probabilities.
    """
    full = measurement_circuit(c, input_state, basis)
    rho = simulate_channel(full, DensityMatrix.basis_state(0, 1), nm)
    born = np.clip(np.real(np.diag(rho.matrix)), 0.0, None)
    observed = nm.readout_matrix(1) @ (born / born.sum())
    if shots is None:
        return Counts(input_state, basis, observed, None)
    sampled = DeterministicRandom(seed).multinomial(shots, observed)
    return Counts(input_state, basis, sampled, shots)


def simulate_tomography(
    c: Circuit, nm: NoiseModel, config: TomographyConfig, seed: Optional[int] = None
) -> List[Counts]:
    """Counts for every (input, basis) setting; setting i samples with seed XOR i."""
    rng = DeterministicRandom(config.rng_seed if seed is None else seed)
    table = [
        simulate_counts(c, nm, state, basis, config.shots, rng.spawn(index).seed)
        for index, (state, basis) in enumerate(config.settings())
    ]
    logger.debug("tomography_simulated", settings=len(table), shots=config.shots)
    return table
