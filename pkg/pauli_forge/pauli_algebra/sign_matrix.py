"""The sign matrix A and its tensor powers.

``A[alpha, gamma]`` is the sign in ``sigma_gamma sigma_alpha sigma_gamma = +- sigma_alpha``.
For one qubit the sign is -1 exactly when both indices are non-identity and
differ; tensor powers multiply the per-qubit signs.
"""

from dataclasses import dataclass

import numpy as np

from pauli_forge.shared.constants import DENSE_SIGN_MATRIX_QUBITS, MAX_SIGN_MATRIX_QUBITS
from pauli_forge.shared.errors import DimensionMismatch, DomainError

SIGN_MATRIX_1Q = np.array(
    [
        [1, 1, 1, 1],
        [1, 1, -1, -1],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
    ],
    dtype=float,
)


@dataclass(frozen=True)
class SignMatrixA:
    """A^{(x)N}, stored densely up to four qubits and computed on demand above."""

    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise DomainError("Sign matrix order must be >= 1")
        if self.order > MAX_SIGN_MATRIX_QUBITS:
            raise DomainError(
                f"Sign matrix order {self.order} exceeds the limit of {MAX_SIGN_MATRIX_QUBITS}"
            )

    @property
    def size(self) -> int:
        return 4**self.order

    @property
    def is_implicit(self) -> bool:
        return self.order > DENSE_SIGN_MATRIX_QUBITS

    def entry(self, alpha: int, gamma: int) -> int:
        """Entry (alpha, gamma) from the base-4 digits of both flat indices."""
        sign = 1
        for _ in range(self.order):
            alpha, a = divmod(alpha, 4)
            gamma, g = divmod(gamma, 4)
            if a and g and a != g:
                sign = -sign
        return sign

    def dense(self) -> np.ndarray:
        """The full 4^N x 4^N matrix.

        Raises:
            DomainError: If the order is above the dense-storage threshold
        """
        if self.is_implicit:
            raise DomainError(
                f"Dense sign matrix refused for N={self.order}; use matvec instead"
            )
        result = SIGN_MATRIX_1Q
        for _ in range(self.order - 1):
            result = np.kron(result, SIGN_MATRIX_1Q)
        return result

    def matvec(self, v: np.ndarray) -> np.ndarray:
        """A^{(x)N} v by contracting the 4x4 factor against each base-4 axis."""
        v = np.asarray(v, dtype=float)
        if v.shape != (self.size,):
            raise DimensionMismatch(f"Expected a vector of length {self.size}, got {v.shape}")
        tensor = v.reshape((4,) * self.order)
        for axis in range(self.order):
            tensor = np.moveaxis(np.tensordot(SIGN_MATRIX_1Q, tensor, axes=([1], [axis])), 0, axis)
        return tensor.reshape(self.size)


def sign_matrix(n_qubits: int) -> SignMatrixA:
    """Return A^{(x)N}."""
    return SignMatrixA(n_qubits)
