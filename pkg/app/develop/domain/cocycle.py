"""Long-edge labels from a decoration and the resulting flattened fundamental class."""
import cmath
from typing import Dict, List, Sequence

from loguru import logger

from app.bloch.domain.models import PreBlochElement
from app.config import settings
from app.develop.domain.cusp import _shape_values, corner_parameter, next_corner
from app.develop.domain.models import Decoration, EdgeLogC, PsiResult
from app.numerics.domain.logarithm import principal_log
from app.numerics.domain.models import Flattening
from app.shared.errors import CocycleInconsistencyError, FlatteningIntegralityError
from app.triangulation.domain.combinatorics import edge_class_of, edge_classes
from app.triangulation.domain.models import Triangulation


def edge_log_c(triangulation: Triangulation, decoration: Decoration) -> List[EdgeLogC]:
    """
    Compute c and Log c for every edge class.

    c^-2 equals alpha^i_kj * alpha^j_ik at every corner ij of the class and for
    both choices of k; all of them are compared against the first one.

    Raises:
        CocycleInconsistencyError: If the corner products disagree
    """
    result = []
    for edge_class in edge_classes(triangulation):
        products = []
        for corner in edge_class.corners:
            i, j = corner.vertices
            for k in range(4):
                if k not in (i, j):
                    products.append(decoration.corner_product(corner.tet, i, j, k))
        reference = products[0]
        spread = max(abs(product - reference) for product in products) / abs(reference)
        if spread > settings.assertion_tolerance:
            raise CocycleInconsistencyError(
                "Corner products of an edge class disagree",
                location=f"edge class {edge_class.index}",
                residual=spread
            )
        log_c = -0.5 * principal_log(reference)
        result.append(EdgeLogC(
            edge_class=edge_class.index,
            c=cmath.exp(log_c),
            log_c=log_c,
            corner_product=reference,
            spread=spread,
        ))
    return result


def psi_flatten(
    triangulation: Triangulation,
    shapes: Sequence[complex],
    log_cs: Sequence[EdgeLogC]
) -> PsiResult:
    """
    Flatten every tetrahedron from the Log c of its six edges.

    With l the Log c per local edge (01, 12, 02, 23, 03, 13):
    w0 = l03 + l12 - l02 - l13 and w1 = l02 + l13 - l01 - l23.
    """
    shapes = _shape_values(shapes)
    lookup = edge_class_of(triangulation)
    by_class: Dict[int, complex] = {entry.edge_class: entry.log_c for entry in log_cs}
    flattenings = []
    for tet in range(triangulation.n_tetrahedra):
        l = [by_class[lookup[(tet, edge)]] for edge in range(6)]
        w0 = l[4] + l[1] - l[2] - l[5]
        w1 = l[2] + l[5] - l[0] - l[3]
        try:
            flattenings.append(Flattening.from_log_parameters(w0, w1, shapes[tet]))
        except FlatteningIntegralityError as exc:
            exc.location = f"tetrahedron {tet}"
            raise
    element = PreBlochElement.from_terms(
        zip(triangulation.orientation_signs, flattenings)
    )
    logger.debug("Flattened fundamental class", terms=len(element))
    return PsiResult(element=element, flattenings=flattenings)


def corner_relation_residual(
    triangulation: Triangulation,
    shapes: Sequence[complex],
    decoration: Decoration
) -> float:
    """
    Largest relative deviation of the developed corners from the shapes.

    At corner j of the triangle of vertex i the side towards next(j) must be
    param(i, j) times the side towards the corner after it.
    """
    shapes = _shape_values(shapes)
    worst = 0.0
    for (tet, vertex), corners in decoration.positions.items():
        for j in corners:
            k = next_corner(vertex, j)
            l = next_corner(vertex, k)
            parameter = corner_parameter(shapes, tet, vertex, j)
            ratio = (corners[k] - corners[j]) / (corners[l] - corners[j])
            worst = max(worst, abs(ratio - parameter) / abs(parameter))
    return worst


def semi_strong_edge_sums(triangulation: Triangulation, flattenings: Sequence[Flattening]) -> List[complex]:
    """Signed sum of the log-parameters around each edge class."""
    sums = []
    for edge_class in edge_classes(triangulation):
        total = 0j
        for corner in edge_class.corners:
            sign = triangulation.orientation_signs[corner.tet]
            total += sign * flattenings[corner.tet].log_parameters[corner.parameter]
        sums.append(total)
    return sums
