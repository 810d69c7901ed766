import json

import pytest
import yaml
from pydantic import ValidationError

from pauli_forge.pauli_algebra import TauVector, tetrahedron_contains
from pauli_forge.tomography import (
    InputState,
    MeasurementBasis,
    ScanConfig,
    ScanGrid,
    TomographyConfig,
    default_scan_grid,
)


class TestTomographyConfig:
    def test_defaults_cover_every_setting(self):
        config = TomographyConfig()
        assert config.shots == 4096
        assert len(config.settings()) == 12
        assert config.settings()[0] == (InputState.ZERO, MeasurementBasis.X)

    def test_exact_probabilities_allowed(self):
        assert TomographyConfig(shots=None).shots is None

    def test_inputs_must_be_informationally_complete(self):
        with pytest.raises(ValidationError):
            TomographyConfig(input_states=(InputState.ZERO, InputState.ONE, InputState.PLUS))

    def test_all_bases_required(self):
        with pytest.raises(ValidationError):
            TomographyConfig(bases=(MeasurementBasis.X, MeasurementBasis.Z))

    def test_shots_positive(self):
        with pytest.raises(ValidationError):
            TomographyConfig(shots=0)

    def test_states_from_strings(self):
        config = TomographyConfig(input_states=("0", "1", "+", "+i"))
        assert config.input_states[3] is InputState.PLUS_I


class TestScanGrid:
    def test_default_lattice_stays_inside(self):
        points = default_scan_grid().tau_points()
        assert (0.0, 0.0, 0.0) in points
        assert all(tetrahedron_contains(TauVector.from_bloch_multipliers(*p)) for p in points)
        assert {p[2] for p in points} == {-0.9, -0.5, 0.0, 0.5, 0.9}

    def test_coarse_slice(self):
        # |tau1| + |tau2| <= 1 on the tau3 = 0 slice
        points = ScanGrid(tau3_slices=(0.0,), spacing=0.5).tau_points()
        assert len(points) == 13
        assert (1.0, 0.0, 0.0) in points
        assert (0.5, 0.5, 0.0) in points
        assert (1.0, 0.5, 0.0) not in points

    def test_explicit_points_pass_through(self):
        grid = ScanGrid(points=((1.0, 1.0, -1.0), (0.1, 0.2, 0.3)))
        assert grid.tau_points() == [(1.0, 1.0, -1.0), (0.1, 0.2, 0.3)]

    @pytest.mark.parametrize("kwargs", [{"tau3_slices": (1.5,)}, {"spacing": 0.0}, {"spacing": 3.0}])
    def test_validation(self, kwargs):
        with pytest.raises(ValidationError):
            ScanGrid(**kwargs)


class TestScanConfig:
    def test_yaml_file(self, tmp_path):
        path = tmp_path / "scan.yaml"
        path.write_text(
            yaml.safe_dump(
                {
                    "grid": {"points": [[0.0, 0.0, 0.0]]},
                    "noise": {"lambda_1q": 0.002, "lambda_2q": 0.02, "epsilon": 0.01},
                    "tomography": {"shots": 8192},
                    "jobs": 2,
                }
            )
        )
        config = ScanConfig.from_file(path)
        assert config.noise.lambda_2q == 0.02
        assert config.tomography.shots == 8192
        assert config.grid.tau_points() == [(0.0, 0.0, 0.0)]
        assert config.jobs == 2

    def test_json_file(self, tmp_path):
        path = tmp_path / "scan.json"
        path.write_text(json.dumps({"seed": 7, "tomography": {"shots": None}}))
        config = ScanConfig.from_file(path)
        assert config.seed == 7
        assert config.tomography.shots is None

    def test_empty_yaml_is_default(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("")
        assert ScanConfig.from_file(path) == ScanConfig()

    def test_unknown_keys_rejected(self, tmp_path):
        path = tmp_path / "scan.json"
        path.write_text(json.dumps({"shots": 100}))
        with pytest.raises(ValidationError):
            ScanConfig.from_file(path)

    def test_noise_bounds(self):
        with pytest.raises(ValidationError):
            ScanConfig(noise={"epsilon": 0.7})
