"""Shared fixtures."""

import os

import numpy as np
import pytest
import structlog

from pauli_forge.channels import DensityMatrix
from pauli_forge.pauli_algebra import PauliProbVector
from pauli_forge.shared.config import get_settings
from pauli_forge.shared.determinism import DeterministicRandom


@pytest.fixture
def rng() -> DeterministicRandom:
    return DeterministicRandom(1234)


@pytest.fixture
def random_k(rng) -> PauliProbVector:
    return PauliProbVector(rng.probability_vector(4))


@pytest.fixture
def random_k2(rng) -> PauliProbVector:
    return PauliProbVector(rng.probability_vector(16))


def random_density(rng: DeterministicRandom, n_qubits: int) -> DensityMatrix:
    """Full-rank random state from a Ginibre matrix."""
    dim = 2**n_qubits
    g = rng.complex_normal((dim, dim))
    rho = g @ g.conj().T
    return DensityMatrix(rho / np.trace(rho).real)


@pytest.fixture
def random_rho(rng) -> DensityMatrix:
    return random_density(rng, 1)


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch):
    """Settings come from configs/default.yaml only, never from the caller's shell."""
    for key in list(os.environ):
        if key.startswith("PAULI_FORGE_"):
            monkeypatch.delenv(key)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture(autouse=True)
def _restore_structlog():
    """configure_logging binds the current stderr, which pytest swaps per test."""
    yield
    structlog.reset_defaults()
