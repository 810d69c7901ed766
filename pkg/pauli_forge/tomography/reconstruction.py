"""
Linear-inversion process tomography and projection onto CPTP maps.

Output Bloch coefficients r' = R r, so for input i and basis b the measured
<sigma_b> equals row b of R applied to the input Bloch vector. Each row is a
least-squares solve against the input design matrix; the identity row is fixed
to (1, 0, 0, 0) by trace preservation.
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Dict, Sequence

import numpy as np
import structlog

from pauli_forge.channels import choi_from_ptm, evaluator_from_ptm, ptm_from_choi
from pauli_forge.pauli_algebra import PauliProbVector, TauVector, tau_to_k
from pauli_forge.shared.constants import STATE_TOL
from pauli_forge.shared.errors import DimensionMismatch, SingularInversion
from pauli_forge.shared.types import ChannelEvaluator, ComplexMatrix
from pauli_forge.tomography.config import MeasurementBasis
from pauli_forge.tomography.sampling import Counts

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class PauliTransferMatrix:
    """A reconstructed one-qubit channel in Pauli-transfer form."""

    ptm: np.ndarray

    def __post_init__(self) -> None:
        ptm = np.array(self.ptm, dtype=float)
        if ptm.shape != (4, 4):
            raise DimensionMismatch(f"Expected a 4x4 transfer matrix, got {ptm.shape}")
        ptm.setflags(write=False)
        object.__setattr__(self, "ptm", ptm)

    def evaluator(self) -> ChannelEvaluator:
        return evaluator_from_ptm(self.ptm)

    def choi(self) -> ComplexMatrix:
        return choi_from_ptm(self.ptm)

    @property
    def tau(self) -> TauVector:
        """Diagonal of R: the multipliers of the Pauli-twirled channel."""
        return TauVector(np.diag(self.ptm))

    def pauli_twirl(self) -> PauliProbVector:
        return tau_to_k(self.tau)

    def to_dict(self) -> Dict[str, Any]:
        return {"ptm": self.ptm.tolist()}


def project_cptp(ptm: np.ndarray, tol: float = STATE_TOL) -> np.ndarray:
    """Clip negative Choi eigenvalues, renormalize, reset the identity row.

    Resetting the identity row can make the Choi matrix slightly indefinite again;
    the smallest admixture t of the completely depolarizing channel (Choi I/d^2)
    that restores positivity is then applied, which keeps trace preservation.
    """
    choi = choi_from_ptm(ptm)
    values, vectors = np.linalg.eigh((choi + choi.conj().T) / 2)
    values = np.clip(values, 0.0, None)
    choi = (vectors * values) @ vectors.conj().T
    choi /= np.trace(choi).real
    projected = ptm_from_choi(choi)
    projected[0] = 0.0
    projected[0, 0] = 1.0

    d2 = choi.shape[0]
    smallest = float(np.linalg.eigvalsh(choi_from_ptm(projected)).min())
    if smallest < -tol:
        t = -smallest / (1.0 / d2 - smallest)
        depolarizing = np.zeros_like(projected)
        depolarizing[0, 0] = 1.0
        projected = (1.0 - t) * projected + t * depolarizing
        logger.debug("cptp_depolarizing_admixture", weight=t)
    return projected


def linear_inversion(counts: Sequence[Counts]) -> np.ndarray:
    """Raw transfer-matrix estimate from expectation values.

    Raises:
        SingularInversion: If a basis is missing or its inputs do not span the
            one-qubit operator space
    """
    by_basis = defaultdict(list)
    for record in counts:
        by_basis[record.basis].append(record)
    ptm = np.zeros((4, 4))
    ptm[0, 0] = 1.0
    for basis in MeasurementBasis:
        records = by_basis.get(basis, [])
        design = np.array([r.input_state.bloch for r in records]).reshape(-1, 4)
        if len(records) < 4 or np.linalg.matrix_rank(design) < 4:
            raise SingularInversion(
                f"Inputs measured in the {basis.value} basis are not informationally complete"
            )
        values = np.array([r.expectation for r in records])
        row, *_ = np.linalg.lstsq(design, values, rcond=None)
        ptm[basis.pauli_index] = row
    return ptm


def reconstruct_channel(counts: Sequence[Counts], project: bool = True) -> PauliTransferMatrix:
    """Linear inversion followed (by default) by CPTP projection."""
    ptm = linear_inversion(counts)
    if project:
        ptm = project_cptp(ptm)
    return PauliTransferMatrix(ptm)
