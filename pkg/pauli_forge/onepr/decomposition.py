"""
1PR decompositions and curves of states.

A curve is 1PR-feasible when beta(p) = |c> + e^{i s(p)}|a> + e^{-i s(p)}|b> with
<a|b> = <a|c> = <b|c> = 0 and <a|a> + <b|b> + <c|c> = 1.
"""

import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from pauli_forge.channels import DynamicalMap
from pauli_forge.shared.constants import CONDITION_TOL, DEFAULT_CURVE_SAMPLES, STATE_TOL
from pauli_forge.shared.errors import DimensionMismatch, DomainError
from pauli_forge.shared.types import ComplexVector


def _complex(values: Any) -> np.ndarray:
    return np.asarray(values, dtype=complex).reshape(-1)


def check_conditions(a, b, c, tol: float = CONDITION_TOL) -> bool:
    """Mutual orthogonality and unit norm sum of the three parts."""
    a, b, c = _complex(a), _complex(b), _complex(c)
    if not a.size == b.size == c.size:
        raise DimensionMismatch(f"Vectors of sizes {a.size}, {b.size}, {c.size}")
    inner = (np.vdot(a, b), np.vdot(a, c), np.vdot(b, c))
    norm_sum = np.vdot(a, a).real + np.vdot(b, b).real + np.vdot(c, c).real
    return all(abs(v) <= tol for v in inner) and abs(norm_sum - 1.0) <= tol


@dataclass(frozen=True)
class OneprDecomposition:
    """(a, b, c) plus the phase schedule s(p), sampled and interpolated linearly."""

    a: ComplexVector
    b: ComplexVector
    c: ComplexVector
    p_samples: np.ndarray
    s_samples: np.ndarray

    def __post_init__(self) -> None:
        a, b, c = _complex(self.a), _complex(self.b), _complex(self.c)
        p = np.asarray(self.p_samples, dtype=float).reshape(-1)
        s = np.asarray(self.s_samples, dtype=float).reshape(-1)
        if not check_conditions(a, b, c):
            raise DomainError("a, b, c are not orthogonal with unit norm sum")
        if p.size != s.size or p.size < 2:
            raise DimensionMismatch("Need at least two matching (p, s) samples")
        if np.any(np.diff(p) <= 0):
            raise DomainError("p samples must be strictly increasing")
        steps = np.diff(s)
        if not (np.all(steps >= -1e-12) or np.all(steps <= 1e-12)):
            raise DomainError("s(p) must be monotone")
        for name, value in (("a", a), ("b", b), ("c", c), ("p_samples", p), ("s_samples", s)):
            value.setflags(write=False)
            object.__setattr__(self, name, value)

    @property
    def dim(self) -> int:
        return self.a.size

    @property
    def domain(self) -> Tuple[float, float]:
        return float(self.p_samples[0]), float(self.p_samples[-1])

    @property
    def norms_squared(self) -> Tuple[float, float, float]:
        return tuple(float(np.vdot(v, v).real) for v in (self.a, self.b, self.c))

    def s(self, p: float) -> float:
        lo, hi = self.domain
        if not lo - 1e-12 <= p <= hi + 1e-12:
            raise DomainError(f"p={p} outside the sampled domain [{lo}, {hi}]")
        return float(np.interp(p, self.p_samples, self.s_samples))

    def at_phase(self, s: float) -> ComplexVector:
        return self.c + np.exp(1j * s) * self.a + np.exp(-1j * s) * self.b

    def to_dict(self) -> Dict[str, Any]:
        def vector(v: np.ndarray) -> Dict[str, Any]:
            return {"re": v.real.tolist(), "im": v.imag.tolist()}

        return {
            "dim": self.dim,
            "a": vector(self.a),
            "b": vector(self.b),
            "c": vector(self.c),
            "samples": [{"p": float(p), "s": float(s)} for p, s in zip(self.p_samples, self.s_samples)],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "OneprDecomposition":
        def vector(v: Dict[str, Any]) -> np.ndarray:
            return np.asarray(v["re"], dtype=float) + 1j * np.asarray(v["im"], dtype=float)

        samples = data["samples"]
        return cls(
            vector(data["a"]),
            vector(data["b"]),
            vector(data["c"]),
            np.array([x["p"] for x in samples], dtype=float),
            np.array([x["s"] for x in samples], dtype=float),
        )


def evaluate_decomposition(d: OneprDecomposition, p: float) -> ComplexVector:
    """|c> + e^{i s(p)}|a> + e^{-i s(p)}|b>.

    Raises:
        DomainError: If p lies outside the sampled domain
    """
    return d.at_phase(d.s(p))


@dataclass(frozen=True)
class StateCurve:
    """Unit vectors beta(p_i) at strictly increasing p_i; ``states`` has shape (n, dim)."""

    p: np.ndarray
    states: np.ndarray

    def __post_init__(self) -> None:
        p = np.asarray(self.p, dtype=float).reshape(-1)
        states = np.asarray(self.states, dtype=complex)
        if states.ndim != 2 or states.shape[0] != p.size:
            raise DimensionMismatch(f"{p.size} sample points but states of shape {states.shape}")
        if np.any(np.diff(p) <= 0):
            raise DomainError("p must be strictly increasing")
        norms = np.linalg.norm(states, axis=1)
        if np.any(np.abs(norms - 1.0) > STATE_TOL):
            raise DomainError(f"States must be unit vectors (worst norm {norms.max():.12f})")
        p.setflags(write=False)
        states.setflags(write=False)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "states", states)

    @property
    def dim(self) -> int:
        return self.states.shape[1]

    def __len__(self) -> int:
        return self.p.size

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dim": self.dim,
            "samples": [
                {"p": float(p), "re": beta.real.tolist(), "im": beta.imag.tolist()}
                for p, beta in zip(self.p, self.states)
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "StateCurve":
        samples = data["samples"]
        states = np.array(
            [np.asarray(x["re"], dtype=float) + 1j * np.asarray(x.get("im", np.zeros(len(x["re"]))), dtype=float)
             for x in samples]
        )
        curve = cls(np.array([x["p"] for x in samples], dtype=float), states)
        if "dim" in data and int(data["dim"]) != curve.dim:
            raise DimensionMismatch(f"dim={data['dim']} does not match vectors of length {curve.dim}")
        return curve


def curve_from_decomposition(d: OneprDecomposition, points: Sequence[float]) -> StateCurve:
    points = np.asarray(points, dtype=float)
    return StateCurve(points, np.stack([evaluate_decomposition(d, p) for p in points]))


def lift_map(
    dynamical_map: DynamicalMap,
    n_samples: int = DEFAULT_CURVE_SAMPLES,
    phases: Optional[Sequence[float]] = None,
) -> StateCurve:
    """Amplitudes sqrt(k(p)) e^{i phi_gamma}; phi defaults to 0 (real nonnegative gauge).

    ``phases`` may have 4^N entries or 4^N - 1 (the identity component is then 0).
    """
    points, ks = dynamical_map.sample(n_samples)
    dim = ks.shape[1]
    phi = np.zeros(dim) if phases is None else np.asarray(phases, dtype=float)
    if phi.size == dim - 1:
        phi = np.concatenate([[0.0], phi])
    if phi.size != dim:
        raise DimensionMismatch(f"Expected {dim - 1} or {dim} phases, got {phi.size}")
    states = np.sqrt(np.clip(ks, 0.0, None)) * np.exp(1j * phi)
    states /= np.linalg.norm(states, axis=1, keepdims=True)
    return StateCurve(points, states)


def _real_pair(component: int, weight: complex, dim: int = 4) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    v[0] = 0.5
    v[component] = weight
    return v


def _named_parts(name: str) -> Tuple[np.ndarray, np.ndarray, np.ndarray, Callable[[float], float], Tuple[float, float]]:
    zero = np.zeros(4, dtype=complex)
    if name in ("bitflip", "bitphaseflip", "phaseflip"):
        component = {"bitflip": 1, "bitphaseflip": 2, "phaseflip": 3}[name]
        a = _real_pair(component, -0.5j)
        return a, a.conj(), zero, lambda p: math.asin(math.sqrt(p)), (0.0, 1.0)
    if name == "depolarizing":
        a = np.array([0.5] + [-1j / (2 * math.sqrt(3))] * 3, dtype=complex)
        return a, a.conj(), zero, lambda p: math.asin(math.sqrt(3 * p / 4)), (0.0, 1.0)
    if name == "parabolic":
        a = np.array([0.25j, 0.25, 0.25, -0.25j], dtype=complex)
        c = np.array([0.5, 0.0, 0.0, 0.5], dtype=complex)
        return a, a.conj(), c, lambda p: math.asin(max(-1.0, min(1.0, p))), (-1.0, 1.0)
    raise DomainError(f"No closed-form decomposition for '{name}'")


def named_decomposition(name: str, n_samples: int = DEFAULT_CURVE_SAMPLES) -> OneprDecomposition:
    """Closed-form triple of a named one-qubit map with its schedule s(p)."""
    a, b, c, s_of_p, (lo, hi) = _named_parts(name)
    points = np.linspace(lo, hi, n_samples)
    return OneprDecomposition(a, b, c, points, np.array([s_of_p(p) for p in points]))
