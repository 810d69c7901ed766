"""
Diamond distance and diamond fidelity.

Pauli channels have the closed form sum_gamma |k1_gamma - k2_gamma|: the maximally
entangled input attains it (the Choi difference is Bell-diagonal with those
eigenvalues) and the triangle inequality over the unitary conjugations sigma . sigma
bounds it from above. Any other pair of one-qubit channels goes through a
multi-start Nelder-Mead search over pure inputs on the doubled space.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Union

import numpy as np
import structlog
from scipy.optimize import minimize
from scipy.stats import qmc

from pauli_forge.channels import PauliChannel, choi_matrix, evaluator_from_ptm
from pauli_forge.distance.norms import trace_norm
from pauli_forge.observability.metrics.collector import get_metrics_collector
from pauli_forge.pauli_algebra import PauliProbVector, TauVector
from pauli_forge.shared.constants import DEFAULT_DIAMOND_RESTARTS
from pauli_forge.shared.errors import DimensionMismatch, DomainError
from pauli_forge.shared.types import ChannelEvaluator

logger = structlog.get_logger(__name__)

ChannelLike = Union[PauliChannel, PauliProbVector, np.ndarray, ChannelEvaluator]

CSV_COLUMNS = ("tau1", "tau2", "tau3", "f", "lambda_1q", "lambda_2q", "epsilon", "shots", "seed")


@dataclass(frozen=True)
class FidelityRecord:
    """Diamond fidelity of one implemented channel against its target tau."""

    tau: TauVector
    f: float
    lambda_1q: float = 0.0
    lambda_2q: float = 0.0
    epsilon: float = 0.0
    shots: Optional[int] = None
    seed: Optional[int] = None
    metadata: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.tau.tau.size != 4:
            raise DimensionMismatch("Fidelity records describe one-qubit channels")
        if not 0.0 <= self.f <= 1.0:
            raise DomainError(f"Fidelity {self.f} outside [0, 1]")

    def to_row(self) -> Dict[str, Any]:
        _, t1, t2, t3 = (float(t) for t in self.tau.tau)
        return {
            "tau1": t1,
            "tau2": t2,
            "tau3": t3,
            "f": float(self.f),
            "lambda_1q": self.lambda_1q,
            "lambda_2q": self.lambda_2q,
            "epsilon": self.epsilon,
            "shots": self.shots,
            "seed": self.seed,
        }

    @classmethod
    def from_row(cls, row: Dict[str, Any]) -> "FidelityRecord":
        def optional_int(value: Any) -> Optional[int]:
            if value is None or (isinstance(value, float) and np.isnan(value)):
                return None
            return int(value)

        return cls(
            tau=TauVector.from_bloch_multipliers(row["tau1"], row["tau2"], row["tau3"]),
            f=float(row["f"]),
            lambda_1q=float(row.get("lambda_1q", 0.0)),
            lambda_2q=float(row.get("lambda_2q", 0.0)),
            epsilon=float(row.get("epsilon", 0.0)),
            shots=optional_int(row.get("shots")),
            seed=optional_int(row.get("seed")),
        )


def diamond_distance_pauli(k1: PauliProbVector, k2: PauliProbVector) -> float:
    """sum_gamma |k1_gamma - k2_gamma|."""
    if k1.n_qubits != k2.n_qubits:
        raise DimensionMismatch(f"Channels on {k1.n_qubits} and {k2.n_qubits} qubits")
    return float(np.abs(k1.k - k2.k).sum())


def _unit_vector(params: np.ndarray) -> np.ndarray:
    """Hyperspherical magnitudes (3 angles) and relative phases (3) -> unit vector in C^4."""
    t1, t2, t3, p1, p2, p3 = params
    magnitudes = np.array(
        [
            np.cos(t1),
            np.sin(t1) * np.cos(t2),
            np.sin(t1) * np.sin(t2) * np.cos(t3),
            np.sin(t1) * np.sin(t2) * np.sin(t3),
        ]
    )
    return magnitudes * np.exp(1j * np.array([0.0, p1, p2, p3]))


def diamond_distance_bruteforce(
    e1: ChannelEvaluator,
    e2: ChannelEvaluator,
    n_qubits: int = 1,
    restarts: int = DEFAULT_DIAMOND_RESTARTS,
    seed: int = 0,
    min_restarts: Optional[int] = None,
    agreement: float = 1e-5,
) -> float:
    """Maximize ||((e1 - e2) (x) I)(|psi><psi|)||_1 over pure |psi> on the doubled space.

    With |psi> = sqrt(d) (M (x) I)|Omega> the output is d (M (x) I) J (M (x) I)^dag,
    J the Choi matrix of e1 - e2, so each objective call is two small products and
    one Hermitian eigensolve. Starts come from a scrambled Halton sequence.

    Args:
        e1, e2: One-qubit channel evaluators
        n_qubits: Must be 1
        restarts: Maximum number of local searches
        seed: Seed of the quasi-random starts
        min_restarts: If set, stop once at least this many restarts ran and the
            best two values agree within ``agreement``
        agreement: Tolerance of the early-stop test

    Returns:
        Best value found, a lower bound on the diamond distance

    Raises:
        DomainError: For channels on more than one qubit
    """
    if n_qubits != 1:
        raise DomainError("The brute-force diamond distance is only validated for one qubit")
    d = 2
    delta = choi_matrix(e1, 1) - choi_matrix(e2, 1)
    if np.max(np.abs(delta)) < 1e-14:
        return 0.0
    eye = np.eye(d)

    def objective(params: np.ndarray) -> float:
        m = _unit_vector(params).reshape(d, d)
        k = np.kron(m, eye)
        return -d * trace_norm(k @ delta @ k.conj().T)

    sampler = qmc.Halton(d=6, scramble=True, seed=seed)
    scale = np.array([np.pi / 2] * 3 + [2 * np.pi] * 3)
    starts = sampler.random(restarts) * scale

    values = []
    for index, x0 in enumerate(starts):
        result = minimize(
            objective,
            x0,
            method="Nelder-Mead",
            options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 4000},
        )
        values.append(-result.fun)
        if min_restarts is not None and index + 1 >= min_restarts:
            best_two = sorted(values)[-2:]
            if best_two[1] - best_two[0] <= agreement:
                logger.debug("diamond_restarts_agreed", restarts=index + 1, value=best_two[1])
                break

    get_metrics_collector().record_diamond_restarts(len(values))
    return float(min(max(values), 2.0))


def _as_pauli(ch: ChannelLike) -> Optional[PauliProbVector]:
    if isinstance(ch, PauliChannel):
        return ch.k
    if isinstance(ch, PauliProbVector):
        return ch
    return None


def _as_evaluator(ch: ChannelLike) -> ChannelEvaluator:
    if isinstance(ch, PauliChannel):
        return ch.evaluate
    if isinstance(ch, PauliProbVector):
        return PauliChannel(ch).evaluate
    if isinstance(ch, np.ndarray):
        return evaluator_from_ptm(ch)
    return ch


def _n_qubits(ch: ChannelLike) -> Optional[int]:
    pauli = _as_pauli(ch)
    if pauli is not None:
        return pauli.n_qubits
    if isinstance(ch, np.ndarray):
        return round(np.log(ch.shape[0]) / np.log(4))
    return None


def diamond_distance(e1: ChannelLike, e2: ChannelLike, **bruteforce_options: Any) -> float:
    """Closed form when both channels are Pauli, brute force for one-qubit channels otherwise."""
    k1, k2 = _as_pauli(e1), _as_pauli(e2)
    if k1 is not None and k2 is not None:
        return diamond_distance_pauli(k1, k2)
    sizes = {n for n in (_n_qubits(e1), _n_qubits(e2)) if n is not None}
    if sizes - {1}:
        raise DomainError("Non-Pauli diamond distances are refused beyond one qubit")
    return diamond_distance_bruteforce(_as_evaluator(e1), _as_evaluator(e2), 1, **bruteforce_options)


def diamond_fidelity(e1: ChannelLike, e2: ChannelLike, **bruteforce_options: Any) -> float:
    """f = 1 - distance / 2, clipped to [0, 1].

    Channels are PauliChannel / PauliProbVector (closed form), Pauli transfer
    matrices, or evaluators (one qubit only).
    """
    distance = diamond_distance(e1, e2, **bruteforce_options)
    return float(min(1.0, max(0.0, 1.0 - distance / 2)))
