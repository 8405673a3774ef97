"""Exact shapes given as polynomials in a root of an integer polynomial."""
from typing import Optional

import numpy as np
from loguru import logger
from numpy.polynomial import polynomial as P

from app.config import settings
from app.shared.errors import AmbiguousRootError, FieldInconsistencyError, MissingDataError
from app.solver.domain.equations import gluing_equations, multiplicative_residuals
from app.solver.domain.models import ShapeAssignment
from app.triangulation.domain.models import ShapeField, Triangulation

POLISH_STEPS = 60


def select_root(poly: np.ndarray, approximation: complex) -> complex:
    """
    Pick the root closest to ``approximation`` and polish it by Newton.

    The approximation must be closer to that root than half the distance to
    any other root. A real approximation snaps onto an exactly real root.

    Raises:
        AmbiguousRootError: If the approximation does not single out one
            simple root
    """
    roots = np.atleast_1d(P.polyroots(poly)).astype(complex)
    distances = np.abs(roots - approximation)
    order = np.argsort(distances)
    nearest = complex(roots[order[0]])
    others = [complex(r) for k, r in enumerate(roots) if k != order[0]]
    if others:
        separation = min(abs(nearest - other) for other in others)
        if distances[order[0]] >= separation / 2:
            raise AmbiguousRootError(
                f"Approximation {approximation} is not closer to one root than to the others",
                residual=float(distances[order[0]])
            )

    x = nearest
    if approximation.imag == 0 and abs(x.imag) <= 1e-8 * max(1.0, abs(x)):
        x = complex(x.real, 0.0)
    derivative = P.polyder(poly)
    for _ in range(POLISH_STEPS):
        slope = complex(P.polyval(x, derivative))
        if slope == 0:
            raise AmbiguousRootError(f"Root {x} is repeated")
        step = complex(P.polyval(x, poly)) / slope
        x -= step
        if abs(step) <= 1e-17 * max(1.0, abs(x)):
            break
    return x


def shapes_from_field(
    triangulation: Triangulation,
    field: Optional[ShapeField] = None,
    root: Optional[complex] = None
) -> ShapeAssignment:
    """
    Evaluate shapes from a number-field description and verify them.

    Args:
        triangulation: Triangulation the shapes belong to
        field: Field description; defaults to the file's ``shape_field``
        root: Root approximation overriding the field's own

    Returns:
        ShapeAssignment with source ``field``

    Raises:
        MissingDataError: If no field is available
        AmbiguousRootError: If the root approximation is ambiguous
        FieldInconsistencyError: If the shapes fail a gluing equation
    """
    field = field or triangulation.shape_field
    if field is None:
        raise MissingDataError("Triangulation has no shape_field")
    approximation = complex(field.root if root is None else root)
    poly = np.asarray(field.poly, dtype=float)
    x = select_root(poly, approximation)
    logger.info(f"Selected field generator x = {x:.16g}")

    shapes = tuple(complex(P.polyval(x, np.asarray(expr, dtype=float))) for expr in field.shape_exprs)
    if any(z == 0 or z == 1 for z in shapes):
        raise FieldInconsistencyError("Field expressions give a degenerate shape")

    residuals = multiplicative_residuals(gluing_equations(triangulation), shapes)
    worst = max(residuals, default=0.0)
    if worst > settings.assertion_tolerance:
        raise FieldInconsistencyError(
            "Shapes from the field do not satisfy the gluing equations",
            residual=worst
        )
    return ShapeAssignment(shapes=shapes, residuals=residuals, source="field")
