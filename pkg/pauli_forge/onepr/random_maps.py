"""Random Pauli dynamical maps that admit a 1PR decomposition by construction."""

import math
from typing import Tuple

import numpy as np
import structlog

from pauli_forge.channels import DynamicalMap
from pauli_forge.onepr.decomposition import OneprDecomposition
from pauli_forge.pauli_algebra import PauliProbVector
from pauli_forge.shared.constants import DEFAULT_CURVE_SAMPLES
from pauli_forge.shared.determinism import DeterministicRandom

logger = structlog.get_logger(__name__)


def _orthogonal_row(rows: np.ndarray, candidate: np.ndarray) -> np.ndarray:
    """Gram-Schmidt step of ``candidate`` against orthonormal ``rows`` (conjugate-linear)."""
    for row in rows:
        candidate = candidate - np.vdot(row, candidate) * row
    return candidate / np.linalg.norm(candidate)


def random_unitary_with_first_row(first_row: np.ndarray, rng: DeterministicRandom) -> np.ndarray:
    """Unitary V whose first row is ``first_row`` (unit norm).

    Rows 1..D-2 come from random complex combinations orthogonalized against
    the previous rows; the last row is fixed up to a random phase.
    """
    dim = first_row.size
    rows = [np.asarray(first_row, dtype=complex)]
    for _ in range(1, dim - 1):
        rows.append(_orthogonal_row(np.array(rows), rng.complex_normal(dim)))
    last = _orthogonal_row(np.array(rows), rng.complex_normal(dim))
    rows.append(np.exp(1j * rng.uniform(0.0, 2 * math.pi)) * last)
    return np.array(rows)


def random_onepr_map(
    seed: int = 0,
    s_max: float = math.pi,
    n_qubits: int = 1,
    n_samples: int = DEFAULT_CURVE_SAMPLES,
) -> Tuple[OneprDecomposition, DynamicalMap]:
    """Random 1PR-feasible Pauli dynamical map on p in [0, 1] with s = s_max * p.

    mu, nu ~ U[0, pi/2] give |a| = sin nu cos mu, |b| = sin nu sin mu,
    |c| = cos nu. With V unitary and first row e^{i theta}(|a|, |b|, |c|, 0, ...),
    the parts a = |a| V[:, 0], b = |b| V[:, 1], c = |c| V[:, 2] are orthogonal
    and a + b + c = e^{i theta}|0>, so the map starts at the identity.
    """
    rng = DeterministicRandom(seed)
    dim = 4**n_qubits
    mu, nu = rng.uniform(0.0, math.pi / 2, 2)
    norms = np.array([math.sin(nu) * math.cos(mu), math.sin(nu) * math.sin(mu), math.cos(nu)])
    theta = rng.uniform(0.0, 2 * math.pi)
    first_row = np.zeros(dim, dtype=complex)
    first_row[:3] = np.exp(1j * theta) * norms
    v = random_unitary_with_first_row(first_row, rng)
    a, b, c = (norms[i] * v[:, i] for i in range(3))

    points = np.linspace(0.0, 1.0, n_samples)
    decomposition = OneprDecomposition(a, b, c, points, s_max * points)

    def k_of_p(p: float) -> PauliProbVector:
        beta = decomposition.at_phase(s_max * p)
        return PauliProbVector(np.abs(beta) ** 2)

    logger.debug("random_onepr_map", seed=seed, mu=float(mu), nu=float(nu))
    return decomposition, DynamicalMap(n_qubits, k_of_p, (0.0, 1.0), name=f"random-{seed}")
