"""
Architecture boundary enforcement and documentation.

ARCHITECTURE RULES:
==================

1. Sub-packages form a strict stack. A module may import its own sub-package
   and any sub-package on a LOWER layer, never one on the same or a higher layer.

2. Math lives low, plumbing lives high. pauli_algebra knows nothing about
   circuits; circuits know nothing about 1PR fitting or tomography.

3. app/ is the only place that wires settings, logging and the algorithms
   together. Library code receives parameters, it never reads settings itself.

LAYERS:
=======

0  shared         types, constants, errors, config, determinism, limits
1  observability  structured logs, prometheus metrics
2  pauli_algebra  Pauli strings, sign matrix, k <-> tau, tetrahedron
3  channels       states, Pauli channels, Choi/PTM, dynamical maps
4  circuits       gate IR, simulator, synthesis, decompositions, QASM
4  distance       trace norm, diamond distance and fidelity
5  onepr          1PR normal forms, decompositions, fitting, synthesis
5  tomography     counts, reconstruction, tetrahedron scan
6  app            CLI and bootstrap
"""

from typing import Dict, List

PACKAGE_NAME = "pauli_forge"

LAYERS: Dict[str, int] = {
    "shared": 0,
    "observability": 1,
    "pauli_algebra": 2,
    "channels": 3,
    "circuits": 4,
    "distance": 4,
    "onepr": 5,
    "tomography": 5,
    "app": 6,
}


def layer_of(subpackage: str) -> int:
    """Layer number of a sub-package.

    Raises:
        ValueError: If the sub-package is not part of the layer map
    """
    try:
        return LAYERS[subpackage]
    except KeyError:
        raise ValueError(f"Unknown sub-package '{subpackage}'") from None


def is_allowed(importing: str, imported: str) -> bool:
    """Whether ``importing`` may import ``imported`` (both sub-package names)."""
    if importing == imported:
        return True
    return layer_of(imported) < layer_of(importing)


def validate_import(imported_modules: List[str], importing_module: str) -> bool:
    """
    Validate that a module is allowed to import the given modules.

    Args:
        imported_modules: Dotted names being imported
        importing_module: Dotted name of the module doing the importing

    Returns:
        True if every import is allowed

    Raises:
        ValueError: On the first import that crosses a layer upward or sideways
    """
    importing = _subpackage(importing_module)
    if importing is None:
        return True
    for module in imported_modules:
        imported = _subpackage(module)
        if imported is not None and not is_allowed(importing, imported):
            raise ValueError(
                f"ARCHITECTURE VIOLATION: '{importing}' (layer {layer_of(importing)}) "
                f"cannot import '{imported}' (layer {layer_of(imported)})"
            )
    return True


def _subpackage(module: str) -> str | None:
    parts = module.split(".")
    if len(parts) < 2 or parts[0] != PACKAGE_NAME:
        return None
    return parts[1] if parts[1] in LAYERS else None
