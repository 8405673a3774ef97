"""Damped least-squares Newton iteration on the log-form gluing equations."""
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from app.config import settings
from app.shared.errors import DegenerateSolutionError, SolverConvergenceError
from app.shared.observability.tracing import pipeline_span
from app.solver.domain.equations import gluing_equations, multiplicative_residuals
from app.solver.domain.models import GluingEquation, ShapeAssignment
from app.triangulation.domain.models import Triangulation

DEFAULT_SEED = complex(0.5, math.sqrt(3) / 2)
MAX_HALVINGS = 40
DEGENERACY_BOUND = 1e-8


def _is_degenerate(z: np.ndarray) -> bool:
    return bool(
        np.any(~np.isfinite(z))
        or np.any(np.abs(z) < DEGENERACY_BOUND)
        or np.any(np.abs(1 - z) < DEGENERACY_BOUND)
        or np.any(np.abs(z) > 1 / DEGENERACY_BOUND)
    )


def log_residuals(equations: Sequence[GluingEquation], z: np.ndarray) -> np.ndarray:
    shapes = [complex(value) for value in z]
    return np.array([equation.log_residual(shapes) for equation in equations], dtype=complex)


def jacobian(equations: Sequence[GluingEquation], z: np.ndarray) -> np.ndarray:
    shapes = [complex(value) for value in z]
    return np.array([equation.gradient(shapes) for equation in equations], dtype=complex)


def jacobian_rank(equations: Sequence[GluingEquation], shapes: Sequence[complex], tolerance: float = 1e-8) -> int:
    """Numerical rank of the log-form Jacobian at ``shapes``."""
    return int(np.linalg.matrix_rank(jacobian(equations, np.asarray(shapes, dtype=complex)), tol=tolerance))


def _iterate(equations: Sequence[GluingEquation], start: np.ndarray) -> Tuple[np.ndarray, float, int]:
    z = start.copy()
    residual = log_residuals(equations, z)
    norm = float(np.max(np.abs(residual)))
    for iteration in range(settings.newton_max_iterations):
        if norm < settings.solver_tolerance:
            return z, norm, iteration
        step = np.linalg.lstsq(jacobian(equations, z), -residual, rcond=None)[0]
        scale = 1.0
        accepted = False
        for _ in range(MAX_HALVINGS):
            candidate = z + scale * step
            if not _is_degenerate(candidate):
                candidate_residual = log_residuals(equations, candidate)
                candidate_norm = float(np.max(np.abs(candidate_residual)))
                if candidate_norm < norm:
                    accepted = True
                    break
            scale /= 2
        if not accepted:
            logger.debug(f"Newton stalled at iteration {iteration}", residual=norm)
            return z, norm, iteration
        z, residual, norm = candidate, candidate_residual, candidate_norm
    return z, norm, settings.newton_max_iterations


def _restart_points(seed: np.ndarray) -> List[np.ndarray]:
    """Fixed sequence of perturbed seeds drawn from ``settings.restart_seed``."""
    rng = np.random.default_rng(settings.restart_seed)
    points = []
    for restart in range(settings.newton_max_restarts):
        spread = 0.1 * (restart + 1)
        noise = rng.normal(size=seed.shape) + 1j * rng.normal(size=seed.shape)
        points.append(seed + spread * noise * np.maximum(np.abs(seed), 1.0))
    return points


def solve(
    triangulation: Triangulation,
    equations: Optional[Sequence[GluingEquation]] = None,
    seed: Optional[Sequence[complex]] = None
) -> ShapeAssignment:
    """
    Solve the gluing equations by Newton's method in logarithmic form.

    Args:
        triangulation: Triangulation whose equations are solved
        equations: Equations to solve; defaults to edge plus file cusp equations
        seed: Initial shapes; (1+i sqrt 3)/2 for every tetrahedron when omitted

    Returns:
        ShapeAssignment with log residuals below the solver tolerance

    Raises:
        SolverConvergenceError: If no start converges
        DegenerateSolutionError: If the limit has a shape at 0, 1 or infinity
    """
    equations = list(equations) if equations is not None else gluing_equations(triangulation)
    if seed is None:
        seed = [DEFAULT_SEED] * triangulation.n_tetrahedra
    start = np.asarray(seed, dtype=complex)
    if _is_degenerate(start):
        raise DegenerateSolutionError("Seed contains a degenerate shape")

    logger.info(
        "Solving gluing equations",
        tetrahedra=triangulation.n_tetrahedra,
        equations=len(equations)
    )
    with pipeline_span("cvol.solve", tetrahedra=triangulation.n_tetrahedra) as span:
        best_z, best_norm, iterations = _iterate(equations, start)
        attempts = 0
        if best_norm >= settings.solver_tolerance:
            for attempts, restart in enumerate(_restart_points(start), start=1):
                logger.warning(f"Newton restart {attempts}", residual=best_norm)
                z, norm, iterations = _iterate(equations, restart)
                if norm < best_norm:
                    best_z, best_norm = z, norm
                if best_norm < settings.solver_tolerance:
                    break
        span.set_attribute("restarts", attempts)

    if best_norm >= settings.solver_tolerance:
        raise SolverConvergenceError(
            f"Newton did not converge after {attempts} restarts",
            residual=best_norm
        )
    if _is_degenerate(best_z):
        raise DegenerateSolutionError("Newton converged to a degenerate shape")

    shapes = tuple(complex(value) for value in best_z)
    residuals = multiplicative_residuals(equations, shapes)
    logger.info("Gluing equations solved", iterations=iterations, residual=best_norm)
    return ShapeAssignment(shapes=shapes, residuals=residuals, iterations=iterations, source="newton")
