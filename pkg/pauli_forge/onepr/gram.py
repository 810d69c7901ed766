"""
Necessary conditions for 1PR feasibility read off the Gram matrix of a curve.

For a feasible curve every inner product <beta(p)|beta(p')> equals
C + A e^{i d} + B e^{-i d} with A = <a|a>, B = <b|b>, C = <c|c> = 1 - A - B and
d = s(p') - s(p), i.e. it lies on one ellipse centred at C. The curve itself
spans at most three dimensions.
"""

import numpy as np
import structlog
from scipy.optimize import minimize

from pauli_forge.onepr.decomposition import StateCurve
from pauli_forge.shared.constants import FIT_RESIDUAL_TOL, RANK_TOL
from pauli_forge.shared.errors import DomainError

logger = structlog.get_logger(__name__)

_MAX_STATES = 32
_NEWTON_STEPS = 30


def curve_rank(curve: StateCurve, tol: float = RANK_TOL) -> int:
    """Dimension of the span of the curve (singular values below ``tol`` discarded)."""
    return int((np.linalg.svd(curve.states, compute_uv=False) > tol).sum())


def _weights(params: np.ndarray) -> tuple:
    mu, nu = params
    a = np.sin(nu) ** 2 * np.cos(mu) ** 2
    b = np.sin(nu) ** 2 * np.sin(mu) ** 2
    return a, b, 1.0 - a - b


def ellipse_distances(z: np.ndarray, a: float, b: float, grid_points: int = 181) -> np.ndarray:
    """Distance from each z to the ellipse C + (A+B) cos d + i (A-B) sin d."""
    c = 1.0 - a - b
    p, q = a + b, a - b
    grid = np.linspace(-np.pi, np.pi, grid_points)
    ellipse = c + p * np.cos(grid) + 1j * q * np.sin(grid)
    delta = grid[np.argmin(np.abs(z[:, None] - ellipse[None, :]), axis=1)]
    for _ in range(_NEWTON_STEPS):
        error = c + p * np.cos(delta) + 1j * q * np.sin(delta) - z
        first = -p * np.sin(delta) + 1j * q * np.cos(delta)
        second = -p * np.cos(delta) - 1j * q * np.sin(delta)
        slope = np.real(np.conj(error) * first)
        curvature = np.abs(first) ** 2 + np.real(np.conj(error) * second)
        step = np.where(curvature > 1e-14, slope / np.where(curvature > 1e-14, curvature, 1.0), 0.0)
        delta = delta - step
    return np.abs(c + p * np.cos(delta) + 1j * q * np.sin(delta) - z)


def fit_gram_ellipse(curve: StateCurve) -> tuple:
    """Best (A, B, C) for the pairwise inner products and the max distance to the ellipse."""
    states = curve.states
    if len(states) > _MAX_STATES:
        states = states[np.unique(np.linspace(0, len(states) - 1, _MAX_STATES).round().astype(int))]
    gram = states.conj() @ states.T
    z = gram[np.triu_indices(len(states), 1)]

    def objective(params: np.ndarray) -> float:
        a, b, _ = _weights(params)
        return float((ellipse_distances(z, a, b) ** 2).sum())

    axis = np.linspace(0.0, np.pi / 2, 21)
    coarse = sorted(
        ((objective(np.array([mu, nu])), mu, nu) for mu in axis for nu in axis),
        key=lambda item: item[0],
    )
    best = None
    for _, mu, nu in coarse[:3]:
        result = minimize(
            objective,
            np.array([mu, nu]),
            method="Nelder-Mead",
            options={"xatol": 1e-12, "fatol": 1e-20, "maxiter": 2000},
        )
        if best is None or result.fun < best.fun:
            best = result
    a, b, c = _weights(best.x)
    residual = float(ellipse_distances(z, a, b, grid_points=721).max())
    return (a, b, c), residual


def gram_circle_test(
    curve: StateCurve, rank_tol: float = RANK_TOL, residual_tol: float = FIT_RESIDUAL_TOL
) -> bool:
    """True iff the curve spans at most 3 dimensions and its inner products share one ellipse.

    A False from the rank condition proves the curve is not 1PR-feasible.
    """
    if len(curve) < 3:
        raise DomainError("gram_circle_test needs at least 3 samples")
    rank = curve_rank(curve, rank_tol)
    if rank > 3:
        logger.debug("gram_rank_exceeded", rank=rank)
        return False
    weights, residual = fit_gram_ellipse(curve)
    logger.debug("gram_ellipse_fit", weights=[float(w) for w in weights], residual=residual)
    return residual <= residual_tol
