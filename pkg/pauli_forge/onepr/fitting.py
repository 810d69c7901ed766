"""
Fitting 1PR decompositions to curves of states.

Model: beta_i = e^{i s_i} a + e^{-i s_i} b + c. For fixed s the parts (a, b, c)
are a linear least-squares solution; for fixed parts each s_i minimizes a
degree-2 trigonometric polynomial. Alternating the two steps from several
starts, then refining s by variable projection, finds the decomposition when
one exists. The best candidate is brought to the canonical gauge
(s(p_first) = 0, s increasing) and its parts are made exactly orthogonal before
the residual is re-checked.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import structlog
from scipy.optimize import least_squares, minimize

from pauli_forge.channels import DynamicalMap
from pauli_forge.observability.metrics.collector import get_metrics_collector
from pauli_forge.onepr.decomposition import (
    OneprDecomposition,
    StateCurve,
    check_conditions,
    lift_map,
)
from pauli_forge.onepr.gram import curve_rank
from pauli_forge.shared.constants import (
    DEFAULT_CURVE_SAMPLES,
    DEFAULT_FIT_ITERATIONS,
    DEFAULT_FIT_RESTARTS,
    DEFAULT_SEED,
    FIT_RESIDUAL_TOL,
)
from pauli_forge.shared.determinism import DeterministicRandom
from pauli_forge.shared.errors import DomainError, NotFound

logger = structlog.get_logger(__name__)

MIN_SAMPLES = 7
_PHASE_GRID = np.linspace(-np.pi, np.pi, 257)[:-1]
_NEWTON_STEPS = 8
_POLISH_THRESHOLD = 1e-3
_EXACT_RESIDUAL = 1e-10
_ZERO_PART = 1e-12


@dataclass(frozen=True)
class _Candidate:
    restart: int
    residual: float
    decomposition: Optional[OneprDecomposition]


def _design(s: np.ndarray) -> np.ndarray:
    return np.stack([np.exp(1j * s), np.exp(-1j * s), np.ones_like(s, dtype=complex)], axis=1)


def _solve_parts(s: np.ndarray, states: np.ndarray) -> np.ndarray:
    parts, *_ = np.linalg.lstsq(_design(s), states, rcond=None)
    return parts


def _row_residuals(s: np.ndarray, parts: np.ndarray, states: np.ndarray) -> np.ndarray:
    return np.linalg.norm(states - _design(s) @ parts, axis=1)


def _update_phases(parts: np.ndarray, states: np.ndarray) -> np.ndarray:
    """Per-sample minimizer of ||beta_i - e^{is} a - e^{-is} b - c||^2."""
    a, b, c = parts
    u = states - c
    ab = np.vdot(a, b)
    ua = (u.conj() @ a)[:, None]
    ub = (u.conj() @ b)[:, None]

    # f(s) = 2 Re(e^{-2is} <a|b>) - 2 Re(e^{is} <u|a> + e^{-is} <u|b>) + const
    def derivatives(s: np.ndarray):
        e1, e2 = np.exp(1j * s), np.exp(-2j * s)
        value = 2 * np.real(e2 * ab) - 2 * np.real(e1 * ua + e1.conj() * ub)
        first = 2 * np.real(-2j * e2 * ab) - 2 * np.real(1j * e1 * ua - 1j * e1.conj() * ub)
        second = 2 * np.real(-4 * e2 * ab) + 2 * np.real(e1 * ua + e1.conj() * ub)
        return value, first, second

    grid_values, _, _ = derivatives(_PHASE_GRID[None, :] + np.zeros((len(states), 1)))
    s = _PHASE_GRID[np.argmin(grid_values, axis=1)][:, None]
    for _ in range(_NEWTON_STEPS):
        _, first, second = derivatives(s)
        safe = second > 1e-14
        s = s - np.where(safe, first / np.where(safe, second, 1.0), 0.0)
    return s[:, 0]


def _alternate(
    s: np.ndarray, states: np.ndarray, max_iterations: int, improvement_tol: float
) -> Tuple[np.ndarray, float]:
    previous = np.inf
    for _ in range(max_iterations):
        parts = _solve_parts(s, states)
        s = _update_phases(parts, states)
        objective = float((_row_residuals(s, _solve_parts(s, states), states) ** 2).sum())
        if previous - objective < improvement_tol:
            break
        previous = objective
    return s, float(_row_residuals(s, _solve_parts(s, states), states).max())


def _polish(s: np.ndarray, states: np.ndarray) -> np.ndarray:
    """Variable-projection refinement of s with the parts eliminated."""

    def residual_vector(phases: np.ndarray) -> np.ndarray:
        design = _design(phases)
        parts, *_ = np.linalg.lstsq(design, states, rcond=None)
        r = states - design @ parts
        return np.concatenate([r.real.ravel(), r.imag.ravel()])

    result = least_squares(residual_vector, s, xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=100)
    return result.x


def _orthogonalize(parts: np.ndarray) -> np.ndarray:
    """Nearest exactly-orthogonal parts with the same norms (then normalized to sum 1)."""
    norms = np.linalg.norm(parts, axis=1)
    active = norms**2 > _ZERO_PART
    result = np.zeros_like(parts)
    if active.any():
        units = (parts[active] / norms[active, None]).T  # (dim, m)
        overlap = units.conj().T @ units
        values, vectors = np.linalg.eigh(overlap)
        values = np.clip(values, 1e-300, None)
        inverse_sqrt = vectors @ np.diag(values**-0.5) @ vectors.conj().T
        result[active] = (units @ inverse_sqrt).T * norms[active, None]
    total = np.sqrt((np.abs(result) ** 2).sum())
    return result / total if total > 0 else result


def _finalize(p: np.ndarray, s: np.ndarray, states: np.ndarray) -> Tuple[Optional[OneprDecomposition], float]:
    s = np.unwrap(s)
    parts = _solve_parts(s, states)
    shift = s[0]
    s = s - shift
    parts[0] *= np.exp(1j * shift)
    parts[1] *= np.exp(-1j * shift)
    if s[-1] < 0:
        s = -s
        parts = parts[[1, 0, 2]]
    parts = _orthogonalize(parts)
    residual = float(_row_residuals(s, parts, states).max())
    if not check_conditions(*parts):
        return None, residual
    try:
        return OneprDecomposition(parts[0], parts[1], parts[2], p, s), residual
    except DomainError:
        return None, residual


def _initial_phases(curve: StateCurve, restart: int, rng: DeterministicRandom) -> np.ndarray:
    p, states = curve.p, curve.states
    if restart == 0:
        overlaps = np.abs(states.conj() @ states[0])
        return np.arccos(np.clip(overlaps, 0.0, 1.0))
    if restart == 1:
        return np.pi / 2 * (p - p[0]) / (p[-1] - p[0])
    task = rng.spawn(restart)
    steps = task.uniform(0.0, 1.0, len(p) - 1)
    ramp = np.concatenate([[0.0], np.cumsum(steps)])
    return task.uniform(-np.pi, np.pi) + task.uniform(0.1, 2 * np.pi) * ramp / ramp[-1]


def _constant_decomposition(curve: StateCurve) -> Optional[OneprDecomposition]:
    states = curve.states
    if np.max(np.linalg.norm(states - states[0], axis=1)) > _EXACT_RESIDUAL:
        return None
    c = states.mean(axis=0)
    c = c / np.linalg.norm(c)
    zero = np.zeros_like(c)
    return OneprDecomposition(zero, zero, c, curve.p, np.zeros(len(curve)))


def decomposition_residual(d: OneprDecomposition, curve: StateCurve) -> float:
    """max_i ||beta(p_i) - evaluate(d, p_i)||."""
    model = np.stack([d.at_phase(d.s(p)) for p in curve.p])
    return float(np.linalg.norm(curve.states - model, axis=1).max())


def _search(
    curve: StateCurve,
    restarts: int,
    max_iterations: int,
    improvement_tol: float,
    seed: int,
) -> _Candidate:
    rng = DeterministicRandom(seed)
    candidates = []
    best_als: Tuple[float, int, Optional[np.ndarray]] = (np.inf, -1, None)
    for restart in range(restarts):
        s0 = _initial_phases(curve, restart, rng)
        s, als_residual = _alternate(s0, curve.states, max_iterations, improvement_tol)
        logger.debug("fit_restart", restart=restart, als_residual=als_residual)
        if als_residual < best_als[0]:
            best_als = (als_residual, restart, s)
        if als_residual > _POLISH_THRESHOLD:
            continue
        decomposition, residual = _finalize(curve.p, _polish(s, curve.states), curve.states)
        candidates.append(_Candidate(restart, residual, decomposition))
        if decomposition is not None and residual <= _EXACT_RESIDUAL:
            break
    if not candidates and best_als[2] is not None:
        decomposition, residual = _finalize(curve.p, _polish(best_als[2], curve.states), curve.states)
        candidates.append(_Candidate(best_als[1], residual, decomposition))

    valid = [c for c in candidates if c.decomposition is not None]
    if valid:
        return min(valid, key=lambda c: (c.residual, c.restart))
    return _Candidate(-1, min((c.residual for c in candidates), default=np.inf), None)


def fit_onepr(
    curve: StateCurve,
    restarts: int = DEFAULT_FIT_RESTARTS,
    max_iterations: int = DEFAULT_FIT_ITERATIONS,
    improvement_tol: float = 1e-12,
    residual_tol: float = FIT_RESIDUAL_TOL,
    seed: int = DEFAULT_SEED,
) -> OneprDecomposition:
    """Find (a, b, c, s) reproducing the curve within ``residual_tol``.

    Raises:
        DomainError: With fewer than 7 samples
        NotFound: When no restart succeeds; ``certified`` is set only when the
            curve spans more than three dimensions
    """
    if len(curve) < MIN_SAMPLES:
        raise DomainError(f"fit_onepr needs at least {MIN_SAMPLES} samples, got {len(curve)}")
    metrics = get_metrics_collector()

    constant = _constant_decomposition(curve)
    if constant is not None:
        metrics.record_fit("constant")
        return constant

    rank = curve_rank(curve)
    if rank > 3:
        metrics.record_fit("infeasible")
        raise NotFound(f"Curve spans {rank} dimensions; at most 3 are possible", certified=True)

    best = _search(curve, restarts, max_iterations, improvement_tol, seed)
    if best.decomposition is None or best.residual > residual_tol:
        metrics.record_fit("not_found")
        raise NotFound(
            f"No 1PR decomposition found after {restarts} restarts "
            f"(best residual {best.residual:.3e})",
            best_residual=best.residual,
        )
    logger.info("fit_succeeded", restart=best.restart, residual=best.residual)
    metrics.record_fit("found")
    return best.decomposition


def fit_dynamical_map(
    dynamical_map: DynamicalMap,
    n_samples: int = DEFAULT_CURVE_SAMPLES,
    gauge_search: bool = False,
    gauge_restarts: int = 4,
    seed: int = DEFAULT_SEED,
    **fit_options,
) -> Tuple[OneprDecomposition, StateCurve]:
    """Lift a Pauli dynamical map to amplitudes and fit it.

    The real nonnegative gauge is tried first. With ``gauge_search`` a constant
    phase per Pauli component is optimized jointly (Nelder-Mead over 4^N - 1
    phases) before giving up.

    Returns:
        The decomposition and the lifted curve it reproduces
    """
    curve = lift_map(dynamical_map, n_samples)
    try:
        return fit_onepr(curve, seed=seed, **fit_options), curve
    except NotFound as exc:
        if not gauge_search or exc.certified:
            raise

    n_phases = 4**dynamical_map.n_qubits - 1
    rng = DeterministicRandom(seed)

    def objective(phases: np.ndarray) -> float:
        lifted = lift_map(dynamical_map, n_samples, phases)
        return _search(lifted, restarts=2, max_iterations=100, improvement_tol=1e-10, seed=seed).residual

    best_phases, best_value = None, np.inf
    for start in range(gauge_restarts):
        x0 = rng.spawn(start).uniform(-np.pi, np.pi, n_phases)
        result = minimize(objective, x0, method="Nelder-Mead", options={"maxiter": 200, "xatol": 1e-6})
        logger.debug("gauge_restart", start=start, residual=float(result.fun))
        if result.fun < best_value:
            best_phases, best_value = result.x, float(result.fun)

    curve = lift_map(dynamical_map, n_samples, best_phases)
    return fit_onepr(curve, seed=seed, **fit_options), curve

