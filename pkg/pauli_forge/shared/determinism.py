"""
Seeded randomness.

Every stochastic step (random maps, fit restarts, shot sampling) draws from a
DeterministicRandom so that a run is reproducible from one integer seed.
Independent tasks get their own generator via ``spawn(index)``, seeded with
``seed XOR index``.
"""

from typing import Optional

import numpy as np

from pauli_forge.shared.constants import DEFAULT_SEED
from pauli_forge.shared.types import ComplexMatrix


def task_seed(base_seed: int, index: int) -> int:
    """Seed of the ``index``-th independent task derived from ``base_seed``."""
    return int(base_seed) ^ int(index)


class DeterministicRandom:
    """Deterministic random number generator wrapper."""

    def __init__(self, seed: int = DEFAULT_SEED):
        self._seed = int(seed)
        self._generator = np.random.default_rng(self._seed)

    @property
    def seed(self) -> int:
        """Get the current seed."""
        return self._seed

    @property
    def generator(self) -> np.random.Generator:
        return self._generator

    def reset(self, seed: Optional[int] = None) -> None:
        """Reset the generator, optionally with a new seed."""
        if seed is not None:
            self._seed = int(seed)
        self._generator = np.random.default_rng(self._seed)

    def spawn(self, index: int) -> "DeterministicRandom":
        """Independent generator for task ``index``."""
        return DeterministicRandom(task_seed(self._seed, index))

    def uniform(self, low: float = 0.0, high: float = 1.0, size=None):
        return self._generator.uniform(low, high, size)

    def complex_normal(self, size) -> np.ndarray:
        """Standard complex Gaussian samples (unit variance)."""
        re = self._generator.standard_normal(size)
        im = self._generator.standard_normal(size)
        return (re + 1j * im) / np.sqrt(2.0)

    def unit_vector(self, dim: int) -> np.ndarray:
        """Haar-random complex unit vector."""
        v = self.complex_normal(dim)
        return v / np.linalg.norm(v)

    def probability_vector(self, dim: int) -> np.ndarray:
        """Uniform sample from the probability simplex."""
        return self._generator.dirichlet(np.ones(dim))

    def haar_unitary(self, dim: int) -> ComplexMatrix:
        """Haar-random unitary via QR of a Ginibre matrix with phase correction."""
        z = self.complex_normal((dim, dim))
        q, r = np.linalg.qr(z)
        phases = np.diag(r) / np.abs(np.diag(r))
        return q * phases

    def multinomial(self, shots: int, probabilities: np.ndarray) -> np.ndarray:
        return self._generator.multinomial(shots, probabilities)
