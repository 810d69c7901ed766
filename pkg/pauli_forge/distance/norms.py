"""Matrix norms."""

import numpy as np

from pauli_forge.shared.errors import DimensionMismatch


def trace_norm(m: np.ndarray) -> float:
    """Sum of singular values (sum of |eigenvalues| for Hermitian input)."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"trace_norm needs a square matrix, got {m.shape}")
    if np.allclose(m, m.conj().T, atol=1e-14, rtol=0.0):
        return float(np.abs(np.linalg.eigvalsh((m + m.conj().T) / 2)).sum())
    return float(np.linalg.svd(m, compute_uv=False).sum())
