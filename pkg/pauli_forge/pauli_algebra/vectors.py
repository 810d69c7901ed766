"""Probability vectors k, multipliers tau, and the tetrahedron of one-qubit channels."""

import json
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple, Union

import numpy as np

from pauli_forge.pauli_algebra.sign_matrix import sign_matrix
from pauli_forge.shared.constants import PROBABILITY_TOL
from pauli_forge.shared.errors import DimensionMismatch, DomainError, NotAChannel

ArrayLike = Union[Sequence[float], np.ndarray]


def _qubits_for_length(length: int) -> int:
    n = round(math.log(length, 4)) if length > 0 else 0
    if n < 1 or 4**n != length:
        raise DimensionMismatch(f"Length {length} is not a power of 4")
    return n


@dataclass(frozen=True)
class PauliProbVector:
    """Probabilities k over the 4^N Pauli strings (flat order).

    Entries within ``PROBABILITY_TOL`` below zero are clamped to zero and the
    vector is renormalized; anything further outside the simplex raises
    NotAChannel.
    """

    k: np.ndarray

    def __post_init__(self) -> None:
        k = np.array(self.k, dtype=float).reshape(-1)
        _qubits_for_length(k.size)
        if not np.all(np.isfinite(k)):
            raise NotAChannel("Probabilities must be finite")
        if np.any(k < -PROBABILITY_TOL):
            raise NotAChannel(f"Negative probability {k.min():.3e}")
        if abs(k.sum() - 1.0) > PROBABILITY_TOL:
            raise NotAChannel(f"Probabilities sum to {k.sum():.15f}, not 1")
        k = np.clip(k, 0.0, None)
        k = k / k.sum()
        k.setflags(write=False)
        object.__setattr__(self, "k", k)

    @property
    def n_qubits(self) -> int:
        return _qubits_for_length(self.k.size)

    @classmethod
    def identity(cls, n_qubits: int = 1) -> "PauliProbVector":
        k = np.zeros(4**n_qubits)
        k[0] = 1.0
        return cls(k)

    @classmethod
    def from_json(cls, payload: Union[str, List[float], Dict[str, Any]]) -> "PauliProbVector":
        """Accept a JSON array of numbers or a channel object {"n_qubits", "k"}."""
        data = json.loads(payload) if isinstance(payload, str) else payload
        if isinstance(data, dict):
            vector = cls(np.asarray(data["k"], dtype=float))
            if "n_qubits" in data and int(data["n_qubits"]) != vector.n_qubits:
                raise DimensionMismatch(
                    f"n_qubits={data['n_qubits']} does not match {vector.k.size} probabilities"
                )
            return vector
        return cls(np.asarray(data, dtype=float))

    def to_json(self) -> List[float]:
        return [float(x) for x in self.k]

    def to_dict(self) -> Dict[str, Any]:
        return {"n_qubits": self.n_qubits, "k": self.to_json()}


@dataclass(frozen=True)
class TauVector:
    """Multipliers tau of the Bloch coefficients; tau[0] = 1."""

    tau: np.ndarray

    def __post_init__(self) -> None:
        tau = np.array(self.tau, dtype=float).reshape(-1)
        _qubits_for_length(tau.size)
        if abs(tau[0] - 1.0) > PROBABILITY_TOL:
            raise DomainError(f"tau[0] must be 1, got {tau[0]}")
        tau[0] = 1.0
        tau.setflags(write=False)
        object.__setattr__(self, "tau", tau)

    @property
    def n_qubits(self) -> int:
        return _qubits_for_length(self.tau.size)

    @classmethod
    def from_bloch_multipliers(cls, tau1: float, tau2: float, tau3: float) -> "TauVector":
        return cls(np.array([1.0, tau1, tau2, tau3]))

    @classmethod
    def from_json(cls, payload: Union[str, List[float]]) -> "TauVector":
        data = json.loads(payload) if isinstance(payload, str) else payload
        return cls(np.asarray(data, dtype=float))

    def to_json(self) -> List[float]:
        return [float(x) for x in self.tau]


def k_to_tau(k: PauliProbVector) -> TauVector:
    """tau = A^{(x)N} k."""
    return TauVector(sign_matrix(k.n_qubits).matvec(k.k))


def tau_to_k(tau: TauVector) -> PauliProbVector:
    """k = A^{(x)N} tau / 4^N.

    Raises:
        NotAChannel: If any resulting probability is below -1e-12
    """
    n = tau.n_qubits
    k = sign_matrix(n).matvec(tau.tau) / 4**n
    if np.any(k < -PROBABILITY_TOL):
        raise NotAChannel(
            f"tau lies outside the channel polytope (min k = {k.min():.3e})"
        )
    return PauliProbVector(k)


def tetrahedron_contains(tau: TauVector) -> bool:
    """Whether a one-qubit tau lies inside the tetrahedron of Pauli channels."""
    if tau.tau.size != 4:
        raise DimensionMismatch("tetrahedron_contains is defined for one qubit only")
    _, t1, t2, t3 = tau.tau
    faces = (
        1 + t1 + t2 + t3,
        1 + t1 - t2 - t3,
        1 + t2 - t1 - t3,
        1 + t3 - t1 - t2,
    )
    return all(face >= -PROBABILITY_TOL for face in faces)


def tetrahedron_vertices() -> Tuple[Tuple[float, float, float], ...]:
    """(tau1, tau2, tau3) of the single-Pauli channels, vertex i <-> k = e_i."""
    return tuple(
        tuple(float(x) for x in sign_matrix(1).dense()[1:, gamma]) for gamma in range(4)
    )
