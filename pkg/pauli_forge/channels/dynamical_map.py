"""Pauli dynamical maps: continuous curves p -> k(p) starting at the identity."""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
import structlog

from pauli_forge.pauli_algebra import PauliProbVector
from pauli_forge.shared.constants import DEFAULT_CURVE_SAMPLES, STATE_TOL
from pauli_forge.shared.errors import DimensionMismatch, DomainError

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class DynamicalMap:
    """A curve of Pauli channels on a closed interval.

    ``k_of_p`` must return the probability vector at every point of ``domain``
    and the identity channel at ``domain[0]``.
    """

    n_qubits: int
    k_of_p: Callable[[float], PauliProbVector] = field(compare=False)
    domain: Tuple[float, float] = (0.0, 1.0)
    name: Optional[str] = None

    def __post_init__(self) -> None:
        a, b = self.domain
        if not a < b:
            raise DomainError(f"Empty domain {self.domain}")
        start = self.k_of_p(a)
        if start.n_qubits != self.n_qubits:
            raise DimensionMismatch(
                f"Map declared on {self.n_qubits} qubits returns {start.n_qubits}-qubit k"
            )
        identity = PauliProbVector.identity(self.n_qubits).k
        if np.max(np.abs(start.k - identity)) > STATE_TOL:
            raise DomainError(f"Map does not start at the identity channel: k(a) = {start.k}")

    def __call__(self, p: float) -> PauliProbVector:
        a, b = self.domain
        if not a - 1e-12 <= p <= b + 1e-12:
            raise DomainError(f"p={p} outside the domain [{a}, {b}]")
        return self.k_of_p(min(max(p, a), b))

    def sample_points(self, n_samples: int = DEFAULT_CURVE_SAMPLES) -> np.ndarray:
        return np.linspace(self.domain[0], self.domain[1], n_samples)

    def sample(self, n_samples: int = DEFAULT_CURVE_SAMPLES) -> Tuple[np.ndarray, np.ndarray]:
        """Sampled (p, k) arrays with shapes (n,) and (n, 4^N)."""
        points = self.sample_points(n_samples)
        return points, np.stack([self(p).k for p in points])

    def validate(self, n_samples: int = DEFAULT_CURVE_SAMPLES, continuity_tol: float = 0.5) -> bool:
        """Check validity at every sample and continuity at sample resolution.

        A jump in k larger than ``continuity_tol`` (max-entry) between neighbouring
        samples is reported as a discontinuity.
        """
        try:
            _, ks = self.sample(n_samples)
        except (DomainError, ValueError) as exc:
            logger.warning("dynamical_map_invalid_sample", name=self.name, error=str(exc))
            return False
        jumps = np.max(np.abs(np.diff(ks, axis=0)), axis=1) if len(ks) > 1 else np.zeros(0)
        if jumps.size and jumps.max() > continuity_tol:
            logger.warning(
                "dynamical_map_discontinuous", name=self.name, max_jump=float(jumps.max())
            )
            return False
        return True

    def to_dict(self, n_samples: int = DEFAULT_CURVE_SAMPLES) -> Dict[str, Any]:
        points, ks = self.sample(n_samples)
        return {
            "n_qubits": self.n_qubits,
            "name": self.name,
            "domain": list(self.domain),
            "samples": [{"p": float(p), "k": k.tolist()} for p, k in zip(points, ks)],
        }

    @classmethod
    def from_samples(
        cls, n_qubits: int, points: np.ndarray, ks: np.ndarray, name: Optional[str] = None
    ) -> "DynamicalMap":
        """Piecewise-linear map through sampled probability vectors."""
        points = np.asarray(points, dtype=float)
        ks = np.asarray(ks, dtype=float)
        if points.ndim != 1 or ks.shape != (points.size, 4**n_qubits):
            raise DimensionMismatch(f"Samples of shape {ks.shape} do not match {points.size} points")
        if np.any(np.diff(points) <= 0):
            raise DomainError("Sample points must be strictly increasing")

        def k_of_p(p: float) -> PauliProbVector:
            k = np.array([np.interp(p, points, ks[:, g]) for g in range(ks.shape[1])])
            return PauliProbVector(k / k.sum())

        return cls(n_qubits, k_of_p, (float(points[0]), float(points[-1])), name)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DynamicalMap":
        samples: List[Dict[str, Any]] = data["samples"]
        points = np.array([s["p"] for s in samples], dtype=float)
        ks = np.array([s["k"] for s in samples], dtype=float)
        return cls.from_samples(int(data["n_qubits"]), points, ks, data.get("name"))
