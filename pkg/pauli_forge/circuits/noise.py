"""Gate-local depolarizing noise and readout flips."""

from typing import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class NoiseModel(BaseModel):
    """Depolarizing strength after 1q / multi-qubit gates plus a readout flip rate."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    lambda_1q: float = Field(default=0.0, ge=0.0, le=1.0)
    lambda_2q: float = Field(default=0.0, ge=0.0, le=1.0)
    epsilon: float = Field(default=0.0, ge=0.0, le=0.5)

    @property
    def is_noiseless(self) -> bool:
        return self.lambda_1q == 0.0 and self.lambda_2q == 0.0 and self.epsilon == 0.0

    def gate_strength(self, n_touched: int) -> float:
        """Depolarizing strength applied after a gate touching ``n_touched`` qubits."""
        return self.lambda_1q if n_touched == 1 else self.lambda_2q

    def readout_matrix(self, n_qubits: int) -> np.ndarray:
        """Confusion matrix P(observed | ideal) for independent per-bit flips."""
        flip = np.array([[1 - self.epsilon, self.epsilon], [self.epsilon, 1 - self.epsilon]])
        result = np.ones((1, 1))
        for _ in range(n_qubits):
            result = np.kron(result, flip)
        return result


NOISELESS = NoiseModel()


def depolarize_tensor(
    tensor: np.ndarray, qubits: Sequence[int], strength: float, n_qubits: int
) -> np.ndarray:
    """rho -> (1 - strength) rho + strength Tr_Q(rho) (x) I_Q / d_Q on a (2,)*2n tensor."""
    if strength == 0.0:
        return tensor
    qubits = sorted(set(qubits))
    rows = list(range(n_qubits))
    traced_cols = [q if q in qubits else n_qubits + q for q in rows]
    kept = [q for q in rows if q not in qubits]
    kept_labels = kept + [n_qubits + q for q in kept]
    reduced = np.einsum(tensor, rows + traced_cols, kept_labels)
    operands: list = [reduced, kept_labels]
    eye = np.eye(2, dtype=complex)
    for q in qubits:
        operands += [eye, [q, n_qubits + q]]
    mixed = np.einsum(*operands, rows + [n_qubits + q for q in rows]) / 2 ** len(qubits)
    return (1.0 - strength) * tensor + strength * mixed
