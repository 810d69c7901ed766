"""Pauli channels E(rho) = sum_gamma k_gamma sigma_gamma rho sigma_gamma."""

from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

from pauli_forge.channels.states import DensityMatrix
from pauli_forge.pauli_algebra import PauliProbVector, TauVector, all_pauli_matrices, k_to_tau
from pauli_forge.shared.errors import DimensionMismatch
from pauli_forge.shared.types import ChannelEvaluator, ComplexMatrix


@dataclass(frozen=True)
class PauliChannel:
    """A Pauli channel given by its probability vector."""

    k: PauliProbVector

    @property
    def n_qubits(self) -> int:
        return self.k.n_qubits

    @property
    def tau(self) -> TauVector:
        return k_to_tau(self.k)

    @classmethod
    def from_probabilities(cls, k) -> "PauliChannel":
        return cls(PauliProbVector(np.asarray(k, dtype=float)))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PauliChannel":
        return cls(PauliProbVector.from_json(data))

    def to_dict(self) -> Dict[str, Any]:
        return self.k.to_dict()

    def evaluate(self, rho: ComplexMatrix) -> ComplexMatrix:
        """Act on a raw 2^N x 2^N operator (not necessarily a state)."""
        rho = np.asarray(rho, dtype=complex)
        dim = 2**self.n_qubits
        if rho.shape != (dim, dim):
            raise DimensionMismatch(
                f"Channel acts on {self.n_qubits} qubits, operator has shape {rho.shape}"
            )
        paulis = all_pauli_matrices(self.n_qubits)
        support = np.nonzero(self.k.k)[0]
        return np.einsum(
            "g,gij,jk,gkl->il", self.k.k[support], paulis[support], rho, paulis[support]
        )

    def __call__(self, rho: ComplexMatrix) -> ComplexMatrix:
        return self.evaluate(rho)


def apply_channel(ch: PauliChannel, rho: DensityMatrix) -> DensityMatrix:
    """Apply a Pauli channel to a density matrix.

    Raises:
        DimensionMismatch: If the channel and state act on different qubit counts
    """
    if ch.n_qubits != rho.n_qubits:
        raise DimensionMismatch(
            f"Channel acts on {ch.n_qubits} qubits, state has {rho.n_qubits}"
        )
    out = ch.evaluate(rho.matrix)
    return DensityMatrix((out + out.conj().T) / 2)


def multiplier_map(tau) -> ChannelEvaluator:
    """The map multiplying every Bloch coefficient r_alpha by tau_alpha.

    It is a Pauli channel only when tau lies inside the polytope; outside it is
    positive on some states but not completely positive.
    """
    tau = np.asarray(tau.tau if isinstance(tau, TauVector) else tau, dtype=float)
    n = round(np.log(tau.size) / np.log(4))
    paulis = all_pauli_matrices(n)
    dim = 2**n

    def evaluate(rho: ComplexMatrix) -> ComplexMatrix:
        r = np.einsum("aij,ji->a", paulis, rho)
        return np.einsum("a,aij->ij", tau * r, paulis) / dim

    return evaluate
