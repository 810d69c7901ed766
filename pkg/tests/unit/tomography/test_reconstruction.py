import numpy as np
import pytest

from pauli_forge.channels import choi_from_ptm
from pauli_forge.circuits import NoiseModel, synthesize_channel_circuit
from pauli_forge.pauli_algebra import PauliProbVector
from pauli_forge.shared.errors import DimensionMismatch, SingularInversion
from pauli_forge.tomography import (
    Counts,
    InputState,
    MeasurementBasis,
    PauliTransferMatrix,
    TomographyConfig,
    linear_inversion,
    project_cptp,
    reconstruct_channel,
    simulate_tomography,
)

EXACT = TomographyConfig(shots=None)


def _exact_ptm(k, nm=NoiseModel()):
    circuit = synthesize_channel_circuit(PauliProbVector(k), 1)
    return reconstruct_channel(simulate_tomography(circuit, nm, EXACT, seed=0))


def test_identity_channel():
    np.testing.assert_allclose(_exact_ptm([1.0, 0.0, 0.0, 0.0]).ptm, np.eye(4), atol=1e-12)


def test_bitflip_multipliers():
    result = _exact_ptm([0.7, 0.3, 0.0, 0.0])
    np.testing.assert_allclose(result.tau.tau, [1.0, 1.0, 0.4, 0.4], atol=1e-10)
    np.testing.assert_allclose(result.pauli_twirl().k, [0.7, 0.3, 0.0, 0.0], atol=1e-10)


def test_random_pauli_channel(random_k):
    result = _exact_ptm(random_k.k)
    np.testing.assert_allclose(result.pauli_twirl().k, random_k.k, atol=1e-10)


def test_readout_error_shrinks_multipliers():
    result = reconstruct_channel(
        simulate_tomography(
            synthesize_channel_circuit(PauliProbVector.identity(1), 1),
            NoiseModel(epsilon=0.05),
            EXACT,
            seed=0,
        ),
        project=False,
    )
    # symmetric readout flips scale every <sigma> by 1 - 2 eps
    np.testing.assert_allclose(np.diag(result.ptm)[1:], [0.9, 0.9, 0.9], atol=1e-12)


def test_projection_of_tp_but_not_cp_map():
    # k = (1/2, 1/2, 1/2, -1/2): clip and renormalize to thirds
    projected = project_cptp(np.diag([1.0, 1.0, 1.0, -1.0]))
    np.testing.assert_allclose(projected, np.diag([1.0, 1 / 3, 1 / 3, -1 / 3]), atol=1e-12)


def test_projection_keeps_trace_preservation(rng):
    raw = np.eye(4)
    raw[1:, :] += rng.uniform(-0.3, 0.3, size=(3, 4))
    projected = project_cptp(raw)
    np.testing.assert_allclose(projected[0], [1.0, 0.0, 0.0, 0.0], atol=1e-12)
    assert np.linalg.eigvalsh(choi_from_ptm(projected)).min() >= -1e-10


def test_projection_leaves_channels_alone():
    ptm = np.diag([1.0, 0.5, 0.2, -0.1])
    np.testing.assert_allclose(project_cptp(ptm), ptm, atol=1e-12)


def test_missing_inputs_are_singular():
    counts = [
        Counts(state, basis, np.array([1.0, 0.0]))
        for state in (InputState.ZERO, InputState.ONE, InputState.PLUS)
        for basis in MeasurementBasis
    ]
    with pytest.raises(SingularInversion):
        linear_inversion(counts)


def test_missing_basis_is_singular():
    counts = [
        Counts(state, basis, np.array([1.0, 0.0]))
        for state in InputState
        for basis in (MeasurementBasis.X, MeasurementBasis.Z)
    ]
    with pytest.raises(SingularInversion):
        linear_inversion(counts)


def test_transfer_matrix_shape():
    with pytest.raises(DimensionMismatch):
        PauliTransferMatrix(np.eye(3))


def test_transfer_matrix_views():
    ptm = PauliTransferMatrix(np.diag([1.0, 0.6, 0.6, 1.0]))
    rho = np.array([[1.0, 0.0], [0.0, 0.0]])
    np.testing.assert_allclose(ptm.evaluator()(rho), rho, atol=1e-12)
    assert ptm.choi().shape == (4, 4)
    assert ptm.to_dict()["ptm"][1][1] == 0.6
