import asyncio

import numpy as np
import pytest

from pauli_forge.shared.batch_processor import BatchProcessor
from pauli_forge.shared.config import Settings, get_settings
from pauli_forge.shared.determinism import DeterministicRandom, task_seed
from pauli_forge.shared.errors import (
    DimensionMismatch,
    DomainError,
    NotFound,
    PauliForgeError,
    QasmParseError,
    ResourceLimitExceeded,
)
from pauli_forge.shared.resource_limits import (
    ResourceLimiter,
    get_resource_limiter,
    set_resource_limiter,
)


class TestDeterminism:
    def test_same_seed_same_stream(self):
        a = DeterministicRandom(5).uniform(size=8)
        b = DeterministicRandom(5).uniform(size=8)
        np.testing.assert_array_equal(a, b)

    def test_reset_replays(self):
        r = DeterministicRandom(9)
        first = r.uniform(size=4)
        r.reset()
        np.testing.assert_array_equal(first, r.uniform(size=4))
        r.reset(10)
        assert r.seed == 10

    def test_task_seed_is_xor(self):
        assert task_seed(42, 0) == 42
        assert task_seed(42, 3) == 42 ^ 3
        assert DeterministicRandom(42).spawn(7).seed == 42 ^ 7

    def test_haar_unitary_is_unitary(self, rng):
        u = rng.haar_unitary(8)
        np.testing.assert_allclose(u.conj().T @ u, np.eye(8), atol=1e-12)

    def test_unit_vector_and_simplex(self, rng):
        assert np.linalg.norm(rng.unit_vector(5)) == pytest.approx(1.0)
        p = rng.probability_vector(16)
        assert p.min() >= 0
        assert p.sum() == pytest.approx(1.0)


class TestErrors:
    def test_hierarchy(self):
        assert issubclass(DimensionMismatch, DomainError)
        assert issubclass(DomainError, ValueError)
        assert issubclass(ResourceLimitExceeded, PauliForgeError)

    def test_not_found_carries_certificate(self):
        err = NotFound("no fit", best_residual=0.3, certified=True)
        assert err.certified
        assert err.best_residual == 0.3

    def test_qasm_error_names_line(self):
        assert str(QasmParseError("bad gate", line=4)) == "line 4: bad gate"


class TestResourceLimiter:
    def test_qubit_caps(self):
        limiter = ResourceLimiter(max_statevector_qubits=4, max_density_qubits=2)
        limiter.check_statevector(4)
        limiter.check_density(2)
        with pytest.raises(ResourceLimitExceeded):
            limiter.check_statevector(5)
        with pytest.raises(ResourceLimitExceeded):
            limiter.check_density(3)

    def test_memory_cap(self):
        limiter = ResourceLimiter(max_statevector_qubits=40, max_memory_mb=1)
        limiter.check_statevector(10)
        with pytest.raises(ResourceLimitExceeded, match="Memory limit"):
            limiter.check_statevector(20)

    def test_usage_report(self):
        usage = ResourceLimiter(max_memory_mb=64).get_usage()
        assert usage["memory_limit_mb"] == 64
        assert usage["memory_available_mb"] > 0

    def test_global_limiter_can_be_replaced(self):
        original = get_resource_limiter()
        custom = ResourceLimiter(max_density_qubits=1)
        try:
            set_resource_limiter(custom)
            assert get_resource_limiter() is custom
        finally:
            set_resource_limiter(original)


class TestBatchProcessor:
    def test_results_keep_input_order(self):
        results = asyncio.run(BatchProcessor.process_parallel(list(range(20)), lambda i: i * i, 3))
        assert results == [i * i for i in range(20)]

    def test_failures_become_none(self):
        def processor(i: int) -> int:
            if i == 2:
                raise RuntimeError("boom")
            return i

        results = asyncio.run(BatchProcessor.process_parallel([0, 1, 2, 3], processor))
        assert results == [0, 1, None, 3]

    def test_raise_errors_reraises_first_failure(self):
        def processor(i: int) -> int:
            if i in (1, 3):
                raise RuntimeError(f"boom {i}")
            return i

        with pytest.raises(RuntimeError, match="boom 1"):
            asyncio.run(
                BatchProcessor.process_parallel([0, 1, 2, 3], processor, raise_errors=True)
            )


class TestSettings:
    def test_defaults_from_yaml(self):
        settings = get_settings()
        assert settings.seed == 42
        assert settings.onepr.restarts == 32
        assert settings.diamond.min_restarts == 8

    def test_environment_overrides_yaml(self, monkeypatch):
        monkeypatch.setenv("PAULI_FORGE_SEED", "11")
        monkeypatch.setenv("PAULI_FORGE_ONEPR__RESTARTS", "3")
        settings = Settings()
        assert settings.seed == 11
        assert settings.onepr.restarts == 3

    def test_alternate_yaml_file(self, monkeypatch, tmp_path):
        path = tmp_path / "custom.yaml"
        path.write_text("environment: custom\nscan:\n  jobs: 1\n")
        monkeypatch.setenv("PAULI_FORGE_CONFIG_FILE", str(path))
        settings = Settings()
        assert settings.environment == "custom"
        assert settings.scan.jobs == 1
