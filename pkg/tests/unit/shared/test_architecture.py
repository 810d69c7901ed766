from pathlib import Path

import pytest

import pauli_forge
from pauli_forge.shared.architecture import is_allowed, layer_of, validate_import
from pauli_forge.shared.import_validator import ImportValidator

PACKAGE_ROOT = Path(pauli_forge.__file__).resolve().parent


def test_layers_only_point_down():
    assert is_allowed("channels", "pauli_algebra")
    assert is_allowed("onepr", "onepr")
    assert not is_allowed("pauli_algebra", "channels")
    assert not is_allowed("circuits", "distance")  # same layer
    assert layer_of("app") > layer_of("tomography")


def test_validate_import_raises_on_upward_import():
    assert validate_import(["pauli_forge.shared.errors"], "pauli_forge.circuits.qasm")
    with pytest.raises(ValueError, match="ARCHITECTURE VIOLATION"):
        validate_import(["pauli_forge.onepr"], "pauli_forge.channels.choi")


def test_package_has_no_violations():
    assert ImportValidator(PACKAGE_ROOT).validate_directory() == []


def test_validator_flags_a_bad_file(tmp_path):
    package = tmp_path / "pauli_forge"
    (package / "pauli_algebra").mkdir(parents=True)
    bad = package / "pauli_algebra" / "leaky.py"
    bad.write_text("from pauli_forge.tomography import scan\n")
    assert ImportValidator(package).validate_file(bad) == [(str(bad), "pauli_algebra", "tomography")]
