"""
Choi, superoperator and Pauli-transfer forms of linear maps on N qubits.

Conventions:
  - |Omega> = (1/sqrt(d)) sum_i |i>|i>, so Choi matrices have trace 1 for TP maps;
    the map acts on the SECOND tensor factor.
  - vec is row-major: vec(X)[i*d + j] = X[i, j].
  - PTM R[beta, alpha] = Tr(sigma_beta E(sigma_alpha)) / d, so Bloch coefficients
    transform as r' = R r and a Pauli channel has R = diag(tau).
"""

import numpy as np

from pauli_forge.pauli_algebra import all_pauli_matrices
from pauli_forge.shared.constants import STATE_TOL
from pauli_forge.shared.types import ChannelEvaluator, ComplexMatrix


def _matrix_units(dim: int):
    for i in range(dim):
        for j in range(dim):
            unit = np.zeros((dim, dim), dtype=complex)
            unit[i, j] = 1.0
            yield i, j, unit


def choi_matrix(evaluator: ChannelEvaluator, n_qubits: int) -> ComplexMatrix:
    """(I (x) E)|Omega><Omega| as a 4^N x 4^N matrix."""
    d = 2**n_qubits
    choi = np.zeros((d * d, d * d), dtype=complex)
    for i, j, unit in _matrix_units(d):
        block = np.asarray(evaluator(unit), dtype=complex)
        choi[i * d : (i + 1) * d, j * d : (j + 1) * d] = block
    return choi / d


def choi_to_evaluator(choi: ComplexMatrix) -> ChannelEvaluator:
    """Inverse of choi_matrix: E(X) = d * Tr_1[(X^T (x) I) J]."""
    choi = np.asarray(choi, dtype=complex)
    d = int(round(np.sqrt(choi.shape[0])))
    blocks = choi.reshape(d, d, d, d)  # [i, a, j, b] with rows (i, a), columns (j, b)

    def evaluate(x: ComplexMatrix) -> ComplexMatrix:
        return d * np.einsum("ij,iajb->ab", np.asarray(x, dtype=complex), blocks)

    return evaluate


def superoperator(evaluator: ChannelEvaluator, n_qubits: int) -> ComplexMatrix:
    """Matrix S with vec(E(X)) = S vec(X)."""
    d = 2**n_qubits
    s = np.zeros((d * d, d * d), dtype=complex)
    for i, j, unit in _matrix_units(d):
        s[:, i * d + j] = np.asarray(evaluator(unit), dtype=complex).reshape(-1)
    return s


def ptm_from_evaluator(evaluator: ChannelEvaluator, n_qubits: int) -> np.ndarray:
    """Pauli transfer matrix; real for Hermiticity-preserving maps."""
    d = 2**n_qubits
    paulis = all_pauli_matrices(n_qubits)
    images = np.stack([np.asarray(evaluator(p), dtype=complex) for p in paulis])
    return np.einsum("bij,aji->ba", paulis, images).real / d


def evaluator_from_ptm(ptm: np.ndarray) -> ChannelEvaluator:
    ptm = np.asarray(ptm, dtype=float)
    n = round(np.log(ptm.shape[0]) / np.log(4))
    paulis = all_pauli_matrices(n)
    d = 2**n

    def evaluate(x: ComplexMatrix) -> ComplexMatrix:
        r = np.einsum("aij,ji->a", paulis, np.asarray(x, dtype=complex))
        return np.einsum("a,aij->ij", ptm @ r, paulis) / d

    return evaluate


def choi_from_ptm(ptm: np.ndarray) -> ComplexMatrix:
    n = round(np.log(np.asarray(ptm).shape[0]) / np.log(4))
    return choi_matrix(evaluator_from_ptm(ptm), n)


def ptm_from_choi(choi: ComplexMatrix) -> np.ndarray:
    n = round(np.log2(np.asarray(choi).shape[0]) / 2)
    return ptm_from_evaluator(choi_to_evaluator(choi), n)


def is_completely_positive(
    evaluator: ChannelEvaluator, n_qubits: int, tol: float = STATE_TOL
) -> bool:
    """CP iff the smallest Choi eigenvalue is >= -tol."""
    choi = choi_matrix(evaluator, n_qubits)
    hermitian = (choi + choi.conj().T) / 2
    if np.max(np.abs(choi - hermitian)) > tol:
        return False
    return bool(np.linalg.eigvalsh(hermitian).min() >= -tol)


def is_trace_preserving(
    evaluator: ChannelEvaluator, n_qubits: int, tol: float = STATE_TOL
) -> bool:
    """TP iff Tr E(|i><j|) = delta_ij on the matrix-unit basis."""
    d = 2**n_qubits
    for i, j, unit in _matrix_units(d):
        if abs(np.trace(np.asarray(evaluator(unit))) - (1.0 if i == j else 0.0)) > tol:
            return False
    return True
