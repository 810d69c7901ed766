import numpy as np
import pytest

from pauli_forge.pauli_algebra import (
    PAULI_MATRICES,
    PauliProbVector,
    PauliString,
    TauVector,
    all_pauli_matrices,
    iter_pauli_strings,
    k_to_tau,
    pauli_string_from_flat,
    sign_matrix,
    tau_to_k,
    tetrahedron_contains,
    tetrahedron_vertices,
)
from pauli_forge.shared.errors import DimensionMismatch, DomainError, NotAChannel


class TestPauliStrings:
    def test_flat_index_leftmost_most_significant(self):
        s = PauliString((3, 1))
        assert s.flat_index == 13
        assert s.label == "ZX"
        assert pauli_string_from_flat(13, 2) == s

    def test_matrix_is_kronecker_product(self):
        np.testing.assert_array_equal(
            PauliString((1, 3)).matrix(), np.kron(PAULI_MATRICES[1], PAULI_MATRICES[3])
        )

    def test_iteration_order(self):
        labels = [s.label for s in iter_pauli_strings(1)]
        assert labels == ["I", "X", "Y", "Z"]
        assert all_pauli_matrices(2).shape == (16, 4, 4)

    @pytest.mark.parametrize("index, n", [(-1, 1), (4, 1), (16, 2), (0, 0)])
    def test_flat_index_out_of_range(self, index, n):
        with pytest.raises(DomainError):
            pauli_string_from_flat(index, n)

    def test_bad_index_rejected(self):
        with pytest.raises(DomainError):
            PauliString((0, 4))


class TestSignMatrix:
    @staticmethod
    def _index_pairs(n, rng):
        size = 4**n
        if n <= 2:
            return [(alpha, gamma) for alpha in range(size) for gamma in range(size)]
        draws = rng.generator.integers(0, size, size=(64, 2))
        return [(int(alpha), int(gamma)) for alpha, gamma in draws]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_entries_match_conjugation(self, n, rng):
        a = sign_matrix(n)
        for alpha, gamma in self._index_pairs(n, rng):
            p_alpha = pauli_string_from_flat(alpha, n).matrix()
            p_gamma = pauli_string_from_flat(gamma, n).matrix()
            np.testing.assert_allclose(
                p_gamma @ p_alpha @ p_gamma, a.entry(alpha, gamma) * p_alpha, atol=1e-12
            )

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matvec_matches_dense(self, n, rng):
        a = sign_matrix(n)
        v = rng.uniform(size=a.size)
        np.testing.assert_allclose(a.matvec(v), a.dense() @ v, atol=1e-9)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_dense_is_symmetric_and_squares_to_4n(self, n):
        a = sign_matrix(n).dense()
        np.testing.assert_array_equal(a, a.T)
        np.testing.assert_array_equal(a @ a, 4**n * np.eye(4**n))

    def test_large_order_is_implicit(self, rng):
        a = sign_matrix(5)
        assert a.is_implicit
        with pytest.raises(DomainError):
            a.dense()
        v = np.zeros(a.size)
        v[0] = 1.0
        np.testing.assert_array_equal(a.matvec(v), np.ones(a.size))

    def test_order_limits(self):
        with pytest.raises(DomainError):
            sign_matrix(0)
        with pytest.raises(DomainError):
            sign_matrix(9)

    def test_matvec_length_checked(self):
        with pytest.raises(DimensionMismatch):
            sign_matrix(1).matvec(np.ones(16))


class TestVectors:
    def test_k_to_tau_example(self):
        tau = k_to_tau(PauliProbVector([0.7, 0.1, 0.1, 0.1]))
        np.testing.assert_allclose(tau.tau, [1.0, 0.6, 0.6, 0.6], atol=1e-12)

    def test_round_trip(self, random_k, random_k2):
        np.testing.assert_allclose(tau_to_k(k_to_tau(random_k)).k, random_k.k, atol=1e-12)
        np.testing.assert_allclose(tau_to_k(k_to_tau(random_k2)).k, random_k2.k, atol=1e-12)

    def test_identity_has_unit_multipliers(self):
        np.testing.assert_array_equal(k_to_tau(PauliProbVector.identity(2)).tau, np.ones(16))

    def test_tau_outside_polytope(self):
        with pytest.raises(NotAChannel):
            tau_to_k(TauVector([1.0, 1.0, 1.0, -1.0]))

    def test_tiny_negative_probability_clamped(self):
        k = PauliProbVector([1.0 + 5e-13, -5e-13, 0.0, 0.0])
        assert k.k.min() == 0.0
        assert k.k.sum() == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize("k", [[0.5, 0.6, -0.1, 0.0], [0.5, 0.5, 0.5, 0.5], [np.nan, 1, 0, 0]])
    def test_invalid_probabilities(self, k):
        with pytest.raises(NotAChannel):
            PauliProbVector(k)

    def test_length_must_be_power_of_four(self):
        with pytest.raises(DimensionMismatch):
            PauliProbVector([0.5, 0.5])

    def test_tau_zero_must_be_one(self):
        with pytest.raises(DomainError):
            TauVector([0.9, 0.0, 0.0, 0.0])

    def test_json_forms(self):
        assert PauliProbVector.from_json("[0.25, 0.25, 0.25, 0.25]").to_json() == [0.25] * 4
        k = PauliProbVector.from_json({"n_qubits": 1, "k": [1, 0, 0, 0]})
        assert k.to_dict() == {"n_qubits": 1, "k": [1.0, 0.0, 0.0, 0.0]}
        with pytest.raises(DimensionMismatch):
            PauliProbVector.from_json({"n_qubits": 2, "k": [1, 0, 0, 0]})


class TestTetrahedron:
    def test_vertices_are_single_pauli_channels(self):
        vertices = tetrahedron_vertices()
        assert vertices[0] == (1.0, 1.0, 1.0)
        for gamma, vertex in enumerate(vertices):
            expected = np.zeros(4)
            expected[gamma] = 1.0
            np.testing.assert_allclose(tau_to_k(TauVector.from_bloch_multipliers(*vertex)).k, expected)

    @pytest.mark.parametrize(
        "tau, inside",
        [
            ((0.0, 0.0, 0.0), True),
            ((1.0, 1.0, 1.0), True),
            ((1.0, -1.0, -1.0), True),
            ((1.0, 1.0, -1.0), False),
            ((0.6, 0.6, -0.6), False),
            ((-1.0, -1.0, -1.0), False),
        ],
    )
    def test_membership(self, tau, inside):
        assert tetrahedron_contains(TauVector.from_bloch_multipliers(*tau)) is inside

    def test_one_qubit_only(self):
        with pytest.raises(DimensionMismatch):
            tetrahedron_contains(TauVector(np.ones(16)))
