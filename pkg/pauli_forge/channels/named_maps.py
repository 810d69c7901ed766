"""The named one-qubit Pauli dynamical maps."""

from typing import Callable, Dict, Tuple

import numpy as np

from pauli_forge.channels.dynamical_map import DynamicalMap
from pauli_forge.pauli_algebra import PauliProbVector
from pauli_forge.shared.errors import DomainError


def _bitflip(p: float) -> np.ndarray:
    return np.array([1 - p, p, 0.0, 0.0])


def _phaseflip(p: float) -> np.ndarray:
    return np.array([1 - p, 0.0, 0.0, p])


def _bitphaseflip(p: float) -> np.ndarray:
    return np.array([1 - p, 0.0, p, 0.0])


def _depolarizing(p: float) -> np.ndarray:
    return np.array([1 - 3 * p / 4, p / 4, p / 4, p / 4])


def _parabolic(p: float) -> np.ndarray:
    return np.array([(1 - p) ** 2, 1 - p**2, 1 - p**2, (1 + p) ** 2]) / 4


NAMED_MAPS: Dict[str, Tuple[Callable[[float], np.ndarray], Tuple[float, float]]] = {
    "bitflip": (_bitflip, (0.0, 1.0)),
    "phaseflip": (_phaseflip, (0.0, 1.0)),
    "bitphaseflip": (_bitphaseflip, (0.0, 1.0)),
    "depolarizing": (_depolarizing, (0.0, 1.0)),
    "parabolic": (_parabolic, (-1.0, 1.0)),
}


def _lookup(name: str):
    try:
        return NAMED_MAPS[name]
    except KeyError:
        raise DomainError(
            f"Unknown map '{name}'; expected one of {sorted(NAMED_MAPS)}"
        ) from None


def named_map(name: str, p: float) -> PauliProbVector:
    """k(p) of a named map.

    Raises:
        DomainError: If the name is unknown or p lies outside the map's domain
    """
    k_of_p, (a, b) = _lookup(name)
    if not a <= p <= b:
        raise DomainError(f"p={p} outside the domain [{a}, {b}] of '{name}'")
    return PauliProbVector(k_of_p(float(p)))


def named_dynamical_map(name: str) -> DynamicalMap:
    _, domain = _lookup(name)
    return DynamicalMap(1, lambda p: named_map(name, p), domain, name)
