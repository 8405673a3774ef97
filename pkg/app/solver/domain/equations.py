"""Gluing equations read off a triangulation."""
from typing import List, Sequence, Tuple

from app.config import settings
from app.shared.errors import GluingResidualError
from app.solver.domain.models import GluingEquation
from app.triangulation.domain.combinatorics import edge_classes
from app.triangulation.domain.models import Triangulation


def edge_equations(triangulation: Triangulation) -> List[GluingEquation]:
    """One equation per edge class: the product of the corner parameters is 1."""
    equations = []
    for edge_class in edge_classes(triangulation):
        exponents = [[0, 0, 0] for _ in range(triangulation.n_tetrahedra)]
        for corner in edge_class.corners:
            exponents[corner.tet][corner.parameter] += 1
        equations.append(GluingEquation(
            kind="edge",
            label=f"edge {edge_class.index}",
            exponents=tuple(tuple(row) for row in exponents),
        ))
    return equations


def cusp_equations(triangulation: Triangulation) -> List[GluingEquation]:
    """Completeness equations supplied with the triangulation file."""
    equations = []
    for index, row in enumerate(triangulation.cusp_equations):
        exponents = [[0, 0, 0] for _ in range(triangulation.n_tetrahedra)]
        for term in row:
            exponents[term.tet][0] += term.a
            exponents[term.tet][1] += term.b
            exponents[term.tet][2] += term.c
        equations.append(GluingEquation(
            kind="cusp",
            label=f"cusp {index}",
            exponents=tuple(tuple(r) for r in exponents),
        ))
    return equations


def gluing_equations(triangulation: Triangulation) -> List[GluingEquation]:
    return edge_equations(triangulation) + cusp_equations(triangulation)


def multiplicative_residuals(
    equations: Sequence[GluingEquation],
    shapes: Sequence[complex]
) -> Tuple[float, ...]:
    return tuple(abs(equation.product(shapes) - 1) for equation in equations)


def verify_shapes(triangulation: Triangulation, shapes: Sequence[complex]) -> Tuple[float, ...]:
    """
    Check every gluing equation multiplicatively.

    Returns:
        Residual |product - 1| per equation

    Raises:
        GluingResidualError: If a residual exceeds the assertion tolerance
    """
    equations = gluing_equations(triangulation)
    residuals = multiplicative_residuals(equations, shapes)
    for equation, residual in zip(equations, residuals):
        if residual > settings.assertion_tolerance:
            raise GluingResidualError(
                "Shapes do not satisfy the gluing equations",
                location=equation.label,
                residual=residual
            )
    return residuals
