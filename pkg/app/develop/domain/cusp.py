"""Breadth-first development of cusp links into the plane."""
import cmath
from collections import deque
from typing import Dict, Optional, Sequence, Tuple

from loguru import logger

from app.config import settings
from app.develop.domain.models import Base, Decoration, TriangleKey
from app.numerics.domain.functions import cross_ratio_parameters
from app.numerics.domain.logarithm import principal_log
from app.numerics.domain.simplex import parameter_index
from app.shared.errors import InconsistentInputError, NonParabolicHolonomyError
from app.triangulation.domain.combinatorics import cusp_link, edge_classes
from app.triangulation.domain.models import Cusp, Triangulation

# Counterclockwise order of the corners of the link triangle of each vertex.
CUSP_CYCLE: Dict[int, Tuple[int, int, int]] = {
    0: (1, 2, 3),
    1: (0, 3, 2),
    2: (0, 1, 3),
    3: (0, 2, 1),
}


def next_corner(vertex: int, corner: int) -> int:
    cycle = CUSP_CYCLE[vertex]
    return cycle[(cycle.index(corner) + 1) % 3]


def corner_parameter(shapes: Sequence[complex], tet: int, vertex: int, corner: int) -> complex:
    return cross_ratio_parameters(shapes[tet])[parameter_index(vertex, corner)]


def third_corner(
    shapes: Sequence[complex],
    tet: int,
    vertex: int,
    placed: Dict[int, complex]
) -> Tuple[int, complex]:
    """
    Position of the remaining corner from two placed ones.

    At corner j the side towards next(j) is param(vertex, j) times the side
    towards the corner after that.
    """
    j, k = sorted(placed)
    remaining = 6 - vertex - j - k
    if next_corner(vertex, j) != k:
        j, k = k, j
    position = placed[j] + (placed[k] - placed[j]) / corner_parameter(shapes, tet, vertex, j)
    return remaining, position


def default_base(cusp: Cusp) -> Base:
    """Lexicographically smallest (tet, vertex, side) of the cusp."""
    tet, vertex = min(triangle.key for triangle in cusp.triangles)
    return tet, vertex, min(side for side in range(4) if side != vertex)


def _shape_values(shapes) -> Tuple[complex, ...]:
    return tuple(complex(z) for z in getattr(shapes, "shapes", shapes))


def develop_cusp(
    triangulation: Triangulation,
    shapes: Sequence[complex],
    cusp: int,
    base: Optional[Base] = None
) -> Decoration:
    """
    Lay out the triangles of one cusp starting from a base side on [0, 1].

    Args:
        triangulation: Triangulation
        shapes: Cross-ratio per tetrahedron
        cusp: Cusp index
        base: (tet, vertex, side); the side's lower corner goes to 0, the upper to 1

    Returns:
        Decoration covering the triangles of this cusp

    Raises:
        NonParabolicHolonomyError: If a revisited side does not match its
            earlier placement up to translation
    """
    shapes = _shape_values(shapes)
    link = cusp_link(triangulation)[cusp]
    triangles = {triangle.key: triangle for triangle in link.triangles}
    base = base or default_base(link)
    tet, vertex, side = base
    if (tet, vertex) not in triangles or side == vertex or not 0 <= side <= 3:
        raise InconsistentInputError(f"Base {base} is not a side of cusp {cusp}")

    low, high = sorted(c for c in range(4) if c not in (vertex, side))
    start = {low: 0j, high: 1 + 0j}
    remaining, position = third_corner(shapes, tet, vertex, start)
    start[remaining] = position
    positions: Dict[TriangleKey, Dict[int, complex]] = {(tet, vertex): start}
    order = [(tet, vertex)]
    queue = deque([(tet, vertex)])
    tolerance = settings.revisit_tolerance

    while queue:
        key = queue.popleft()
        triangle = triangles[key]
        placed = positions[key]
        diameter = max(abs(placed[a] - placed[b]) for a in placed for b in placed)
        for side in triangle.sides:
            neighbor_tet, neighbor_vertex, _ = triangle.neighbors[side]
            perm = triangulation.gluings[key[0]][side].perm
            a, b = (c for c in triangle.corners if c != side)
            neighbor_key = (neighbor_tet, neighbor_vertex)
            if neighbor_key not in positions:
                shared = {perm[a]: placed[a], perm[b]: placed[b]}
                remaining, position = third_corner(shapes, neighbor_tet, neighbor_vertex, shared)
                shared[remaining] = position
                positions[neighbor_key] = shared
                order.append(neighbor_key)
                queue.append(neighbor_key)
                continue
            other = positions[neighbor_key]
            mismatch = abs((other[perm[b]] - other[perm[a]]) - (placed[b] - placed[a]))
            if mismatch > tolerance * diameter:
                raise NonParabolicHolonomyError(
                    "Cusp holonomy is not a translation",
                    location=f"cusp {cusp}, tetrahedron {key[0]} vertex {key[1]} side {side}",
                    residual=mismatch / diameter
                )

    logger.debug(f"Developed cusp {cusp}", triangles=len(positions), base=list(base))
    return Decoration(
        positions=positions,
        cusp_of={key: cusp for key in positions},
        bases={cusp: base},
        placement_order=tuple(order),
    )


def develop(
    triangulation: Triangulation,
    shapes: Sequence[complex],
    bases: Optional[Dict[int, Base]] = None,
    unit_edge: Optional[int] = None
) -> Decoration:
    """
    Develop every cusp and optionally normalise one edge class to c = 1.

    Args:
        triangulation: Triangulation
        shapes: Cross-ratio per tetrahedron (or a ShapeAssignment)
        bases: Base side per cusp; missing cusps use the default base
        unit_edge: Edge class whose corner product is scaled to 1
    """
    bases = dict(bases or {})
    positions: Dict[TriangleKey, Dict[int, complex]] = {}
    cusp_of: Dict[TriangleKey, int] = {}
    used_bases: Dict[int, Base] = {}
    order = []
    for cusp in cusp_link(triangulation):
        partial = develop_cusp(triangulation, shapes, cusp.index, bases.get(cusp.index))
        positions.update(partial.positions)
        cusp_of.update(partial.cusp_of)
        used_bases.update(partial.bases)
        order.extend(partial.placement_order)
    decoration = Decoration(
        positions=positions,
        cusp_of=cusp_of,
        bases=used_bases,
        placement_order=tuple(order),
    )
    if unit_edge is not None:
        decoration = normalize_unit_edge(triangulation, decoration, unit_edge)
    return decoration


def normalize_unit_edge(triangulation: Triangulation, decoration: Decoration, unit_edge: int) -> Decoration:
    """
    Rescale a cusp so that the corner product of ``unit_edge`` becomes 1.

    When both ends of the edge lie in one cusp the scale factor is the
    principal square root of the inverse product.
    """
    classes = edge_classes(triangulation)
    if not 0 <= unit_edge < len(classes):
        raise InconsistentInputError(f"Edge class {unit_edge} does not exist")
    corner = classes[unit_edge].corners[0]
    i, j = corner.vertices
    k = min(v for v in range(4) if v not in (i, j))
    product = decoration.corner_product(corner.tet, i, j, k)
    cusp_i = decoration.cusp_of[(corner.tet, i)]
    cusp_j = decoration.cusp_of[(corner.tet, j)]
    if cusp_i == cusp_j:
        factor = cmath.exp(-0.5 * principal_log(product))
    else:
        factor = 1 / product
    logger.debug(f"Normalising edge class {unit_edge}", cusp=cusp_i, factor=str(factor))
    return decoration.rescaled(cusp_i, factor)
