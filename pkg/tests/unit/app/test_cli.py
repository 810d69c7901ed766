import importlib
import json

import numpy as np
import pandas as pd
import pytest

import pauli_forge.tomography.scan as scan_module
from pauli_forge import __version__
from pauli_forge.app import run
from pauli_forge.app.main import EXIT_OK, EXIT_RUNTIME, EXIT_USAGE
from pauli_forge.channels import DensityMatrix, named_dynamical_map
from pauli_forge.distance import CSV_COLUMNS
from pauli_forge.onepr import lift_map
from pauli_forge.shared.config import Settings
from tests.unit.onepr.test_gram import incompatible_curve

main_module = importlib.import_module("pauli_forge.app.main")


@pytest.fixture
def settings():
    return Settings(onepr={"restarts": 4, "max_iterations": 100}, diamond={"restarts": 8})


@pytest.fixture
def write_json(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return write


def _json_output(capsys):
    return json.loads(capsys.readouterr().out)


class TestParsing:
    def test_version(self, settings, capsys):
        assert run(["--version"], settings) == EXIT_OK
        assert __version__ in capsys.readouterr().out

    def test_missing_command(self, settings):
        assert run([], settings) == EXIT_USAGE

    def test_unknown_command(self, settings):
        assert run(["teleport"], settings) == EXIT_USAGE

    def test_missing_argument(self, settings):
        assert run(["named-map", "--name", "bitflip"], settings) == EXIT_USAGE


class TestNamedMap:
    def test_text_output(self, settings, capsys):
        assert run(["named-map", "--name", "depolarizing", "--p", "1"], settings) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == [
            "k = [0.25, 0.25, 0.25, 0.25]",
            "tau = [1, 0, 0, 0]",
        ]

    def test_json_output(self, settings, capsys):
        assert run(["named-map", "--name", "bitflip", "--p", "0.3", "--json"], settings) == EXIT_OK
        payload = _json_output(capsys)
        assert payload["k"] == pytest.approx([0.7, 0.3, 0.0, 0.0])
        assert payload["tau"] == pytest.approx([1.0, 1.0, 0.4, 0.4])

    def test_outside_domain(self, settings, capsys):
        assert run(["named-map", "--name", "bitflip", "--p", "2"], settings) == EXIT_USAGE
        assert "error:" in capsys.readouterr().err


class TestFidelity:
    def test_identity_against_full_depolarizing(self, settings, write_json, capsys):
        k1 = write_json("k1.json", [1.0, 0.0, 0.0, 0.0])
        k2 = write_json("k2.json", {"n_qubits": 1, "k": [0.25, 0.25, 0.25, 0.25]})
        assert run(["fidelity", "--k1", k1, "--k2", k2], settings) == EXIT_OK
        assert capsys.readouterr().out.strip() == "f = 0.25"

    def test_brute_force_agrees(self, settings, write_json, capsys):
        k1 = write_json("k1.json", [1.0, 0.0, 0.0, 0.0])
        k2 = write_json("k2.json", [0.7, 0.3, 0.0, 0.0])
        assert run(["fidelity", "--k1", k1, "--k2", k2, "--brute-force", "--json"], settings) == EXIT_OK
        payload = _json_output(capsys)
        assert payload["brute_force"] is True
        assert payload["f"] == pytest.approx(0.7, abs=1e-6)

    def test_brute_force_uses_diamond_settings(self, write_json, monkeypatch):
        calls = []

        def recording_fidelity(first, second, **options):
            calls.append(options)
            return 0.5

        monkeypatch.setattr(main_module, "diamond_fidelity", recording_fidelity)
        settings = Settings(diamond={"restarts": 12, "min_restarts": 3, "agreement": 1e-4})
        k = write_json("k.json", [1.0, 0.0, 0.0, 0.0])
        assert run(["fidelity", "--k1", k, "--k2", k, "--brute-force"], settings) == EXIT_OK
        assert calls[0]["restarts"] == 12
        assert calls[0]["min_restarts"] == 3
        assert calls[0]["agreement"] == 1e-4

    def test_not_a_channel(self, settings, write_json):
        k1 = write_json("k1.json", [0.9, 0.0, 0.0, 0.0])
        assert run(["fidelity", "--k1", k1, "--k2", k1], settings) == EXIT_USAGE

    def test_malformed_and_missing_files(self, settings, tmp_path, write_json):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        good = write_json("good.json", [1.0, 0.0, 0.0, 0.0])
        assert run(["fidelity", "--k1", str(bad), "--k2", good], settings) == EXIT_USAGE
        assert run(["fidelity", "--k1", str(tmp_path / "nope.json"), "--k2", good], settings) == EXIT_USAGE

    def test_schema_rejects_extra_keys(self, settings, write_json):
        k1 = write_json("k1.json", {"k": [1.0, 0.0, 0.0, 0.0], "p": 0.1})
        assert run(["fidelity", "--k1", k1, "--k2", k1], settings) == EXIT_USAGE


class TestCircuitCommands:
    def test_synth_simulate_export(self, settings, write_json, tmp_path, capsys):
        k = write_json("k.json", [0.0, 1.0, 0.0, 0.0])
        circuit = str(tmp_path / "out" / "circuit.json")
        qasm = str(tmp_path / "out" / "circuit.qasm")
        assert run(["synth", "--k", k, "--out", circuit, "--qasm", qasm, "--json"], settings) == EXIT_OK
        payload = _json_output(capsys)
        assert payload["n_qubits"] == 3
        assert payload["out"] == circuit
        assert open(qasm).read().startswith("OPENQASM 2.0;")

        rho = write_json("rho.json", DensityMatrix.basis_state(0, 1).to_dict())
        assert run(["simulate", "--circuit", circuit, "--rho", rho, "--json"], settings) == EXIT_OK
        out = _json_output(capsys)
        np.testing.assert_allclose(out["re"], [[0.0, 0.0], [0.0, 1.0]], atol=1e-12)

        assert run(["export-qasm", "--circuit", circuit], settings) == EXIT_OK
        assert capsys.readouterr().out.strip() == open(qasm).read().strip()

    def test_synth_to_stdout(self, settings, write_json, capsys):
        k = write_json("k.json", [1.0] + [0.0] * 15)
        assert run(["synth", "--k", k], settings) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["n_qubits"] == 6

    def test_simulate_with_noise(self, settings, write_json, tmp_path, capsys):
        k = write_json("k.json", [1.0, 0.0, 0.0, 0.0])
        circuit = str(tmp_path / "circuit.json")
        assert run(["synth", "--k", k, "--out", circuit], settings) == EXIT_OK
        capsys.readouterr()
        rho = write_json("rho.json", {"re": [[1.0, 0.0], [0.0, 0.0]]})
        noise = write_json("noise.json", {"epsilon": 0.1})
        assert run(["simulate", "--circuit", circuit, "--rho", rho, "--noise", noise], settings) == EXIT_OK
        assert capsys.readouterr().out.startswith("rho =")


class TestOnepr:
    def test_fit_curve(self, settings, write_json, capsys):
        curve = write_json("curve.json", lift_map(named_dynamical_map("bitflip")).to_dict())
        argv = ["onepr-fit", "--curve", curve, "--at", "0.25", "--json"]
        assert run(argv, settings) == EXIT_OK
        payload = _json_output(capsys)
        assert payload["residual"] <= 1e-6
        assert payload["schedule"][0]["sin_s"] == pytest.approx(0.5, abs=1e-6)
        assert payload["norms_squared"] == pytest.approx([0.5, 0.5, 0.0], abs=1e-6)

    def test_fit_sampled_map(self, settings, write_json, tmp_path, capsys):
        data = {"map": named_dynamical_map("depolarizing").to_dict(101)}
        out = tmp_path / "decomposition.json"
        argv = ["onepr-fit", "--map", write_json("map.json", data), "--out", str(out)]
        assert run(argv, settings) == EXIT_OK
        assert capsys.readouterr().out.startswith("residual = ")
        assert json.loads(out.read_text())["dim"] == 4

    def test_fit_not_found(self, settings, write_json):
        curve = write_json("curve.json", incompatible_curve().to_dict())
        assert run(["onepr-fit", "--curve", curve], settings) == EXIT_RUNTIME

    def test_curve_and_map_exclusive(self, settings, write_json):
        curve = write_json("curve.json", {"samples": []})
        assert run(["onepr-fit", "--curve", curve, "--map", curve], settings) == EXIT_USAGE

    def test_random_map(self, settings, tmp_path, capsys):
        out = tmp_path / "random.json"
        argv = ["onepr-random", "--seed", "5", "--samples", "11", "--out", str(out)]
        assert run(argv, settings) == EXIT_OK
        document = json.loads(out.read_text())
        assert document["seed"] == 5
        assert len(document["map"]["samples"]) == 11
        assert document["map"]["name"] == "random-5"
        assert "map with 11 samples" in capsys.readouterr().out


class TestScan:
    def _config(self, write_json, **extra):
        return write_json(
            "scan.json",
            {
                "grid": {"points": [[0.0, 0.0, 0.0], [0.5, 0.5, 0.5], [1.0, 1.0, -1.0]]},
                "tomography": {"shots": None},
                "diamond_restarts": 8,
                "diamond_min_restarts": 4,
                **extra,
            },
        )

    def test_scan_writes_csv(self, settings, write_json, tmp_path, capsys):
        out = tmp_path / "results" / "scan.csv"
        argv = ["scan", "--config", self._config(write_json), "--out", str(out), "--jobs", "2", "--json"]
        assert run(argv, settings) == EXIT_OK
        payload = _json_output(capsys)
        assert payload["records"] == 2
        assert payload["min_f"] == pytest.approx(1.0, abs=1e-8)
        frame = pd.read_csv(out)
        assert list(frame.columns) == list(CSV_COLUMNS)
        assert len(frame) == 2

    def test_seed_override(self, settings, write_json, tmp_path):
        out = tmp_path / "scan.csv"
        argv = ["scan", "--config", self._config(write_json), "--out", str(out), "--seed", "9"]
        assert run(argv, settings) == EXIT_OK
        assert pd.read_csv(out)["seed"].tolist() == [9, 9 ^ 1]

    def test_invalid_config(self, settings, write_json, tmp_path):
        config = self._config(write_json, colour="blue")
        assert run(["scan", "--config", config, "--out", str(tmp_path / "x.csv")], settings) == EXIT_USAGE

    @pytest.fixture
    def captured_config(self, monkeypatch, tmp_path):
        captured = []

        async def capture(config):
            captured.append(config)
            return []

        monkeypatch.setattr(main_module, "run_scan", capture)
        monkeypatch.setattr(main_module, "write_scan_csv", lambda records, out: tmp_path / "scan.csv")
        return captured

    def test_settings_fill_unset_fields(self, write_json, tmp_path, captured_config):
        settings = Settings(diamond={"agreement": 1e-3}, scan={"jobs": 3})
        assert run(["scan", "--config", self._config(write_json), "--out", str(tmp_path / "x.csv")], settings) == EXIT_OK
        config = captured_config[0]
        assert config.jobs == 3
        assert config.diamond_agreement == 1e-3
        assert (config.diamond_restarts, config.diamond_min_restarts) == (8, 4)

    def test_jobs_flag_beats_settings(self, write_json, tmp_path, captured_config):
        settings = Settings(scan={"jobs": 3})
        argv = ["scan", "--config", self._config(write_json, jobs=5), "--out", str(tmp_path / "x.csv"), "--jobs", "2"]
        assert run(argv, settings) == EXIT_OK
        assert captured_config[0].jobs == 2

    def test_config_file_beats_settings(self, write_json, tmp_path, captured_config):
        settings = Settings(scan={"jobs": 3})
        assert run(["scan", "--config", self._config(write_json, jobs=5), "--out", str(tmp_path / "x.csv")], settings) == EXIT_OK
        assert captured_config[0].jobs == 5

    def test_failed_point_exits_runtime(self, settings, write_json, tmp_path, monkeypatch):
        def crash(index, point, config):
            raise RuntimeError("simulator crashed")

        monkeypatch.setattr(scan_module, "scan_point", crash)
        out = tmp_path / "scan.csv"
        assert run(["scan", "--config", self._config(write_json), "--out", str(out)], settings) == EXIT_RUNTIME
        assert not out.exists()
