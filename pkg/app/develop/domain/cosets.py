"""Decorated configurations of ideal points given by coset representatives."""
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.config import settings
from app.develop.domain.models import CosetNormalization, TruncatedSimplex
from app.numerics.domain.functions import Point, cross_ratio
from app.numerics.domain.logarithm import principal_log
from app.numerics.domain.models import ExtComplex, Flattening
from app.shared.errors import DegenerateSimplexError, InconsistentInputError, SameCosetError

INFINITY_RATE = 0.2


def unipotent(x: complex) -> np.ndarray:
    return np.array([[1, x], [0, 1]], dtype=complex)


def _inverse(g: np.ndarray) -> np.ndarray:
    """Inverse of a unit-determinant matrix via its adjugate."""
    (a, b), (c, d) = g
    return np.array([[d, -b], [-c, a]], dtype=complex)


def _check_unimodular(g: np.ndarray) -> np.ndarray:
    g = np.asarray(g, dtype=complex)
    if g.shape != (2, 2):
        raise InconsistentInputError(f"Expected a 2x2 matrix, got shape {g.shape}")
    determinant = complex(np.linalg.det(g))
    if abs(determinant - 1) > settings.assertion_tolerance * max(1.0, float(np.abs(g).max()) ** 2):
        raise InconsistentInputError(f"Matrix has determinant {determinant}, expected 1")
    return g


def normalize_cosets(g: np.ndarray, h: np.ndarray) -> CosetNormalization:
    """
    Unique p, q with (g u(p))^-1 h u(q) counter-diagonal.

    With g^-1 h = [[a, b], [c, d]] this is p = a/c and q = -d/c.

    Raises:
        SameCosetError: If the lower-left entry c vanishes
    """
    m = _inverse(_check_unimodular(g)) @ _check_unimodular(h)
    (a, _), (c, d) = m
    if abs(c) <= settings.assertion_tolerance * max(1.0, float(np.abs(m).max())):
        raise SameCosetError("g and h lie in the same coset of the upper-triangular subgroup")
    return CosetNormalization(p=complex(a / c), q=complex(-d / c), c=complex(c))


def standard_matrix(point: Point) -> np.ndarray:
    """Unit-determinant matrix sending infinity to ``point``."""
    point = ExtComplex.of(point)
    if point.is_infinite:
        return np.eye(2, dtype=complex)
    return np.array([[point.value, -1], [1, 0]], dtype=complex)


def image_of_infinity(g: np.ndarray) -> ExtComplex:
    (a, _), (c, _) = g
    if abs(c) <= settings.assertion_tolerance * abs(a):
        return ExtComplex.infinity()
    return ExtComplex(complex(a / c))


def _same_point(first: ExtComplex, second: ExtComplex) -> bool:
    if first.is_infinite or second.is_infinite:
        return first.is_infinite and second.is_infinite
    return abs(first.value - second.value) <= settings.assertion_tolerance * max(1.0, abs(first.value))


def psi_of_configuration(
    points: Sequence[Point],
    matrices: Optional[Sequence[np.ndarray]] = None
) -> TruncatedSimplex:
    """
    Label a decorated configuration of n + 1 points.

    Long edge ij (i < j) carries c_ij, the lower-left entry of g_i^-1 g_j.
    Short edge jk at vertex i carries alpha^i_jk = p_ik - p_ij, where p_ij is
    the adjustment of g_i towards j from normalize_cosets(g_i, g_j).
    For four points the flattening has w0 = Log c03 + Log c12 - Log c02 - Log c13
    and w1 = Log c02 + Log c13 - Log c01 - Log c23.

    Args:
        points: Ideal points, pairwise distinct
        matrices: Decorating matrices with g_i(infinity) = points[i];
            defaults to standard_matrix of each point

    Raises:
        DegenerateSimplexError: If two points coincide
        InconsistentInputError: If a matrix does not send infinity to its point
        SameCosetError: If two decorating matrices are in one coset
    """
    points = tuple(ExtComplex.of(point) for point in points)
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if points[i] == points[j]:
                raise DegenerateSimplexError(f"Points {i} and {j} coincide at {points[i]}")
    if matrices is None:
        matrices = [standard_matrix(point) for point in points]
    matrices = [np.asarray(g, dtype=complex) for g in matrices]
    if len(matrices) != len(points):
        raise InconsistentInputError("Need one decorating matrix per point")
    for index, (point, g) in enumerate(zip(points, matrices)):
        if not _same_point(image_of_infinity(g), point):
            raise InconsistentInputError(f"Matrix {index} does not send infinity to {point}")

    size = len(points)
    adjustments = {}
    long_edges = {}
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            normalization = normalize_cosets(matrices[i], matrices[j])
            adjustments[(i, j)] = normalization.p
            if i < j:
                long_edges[(i, j)] = normalization.c
    short_edges = {
        (i, j, k): adjustments[(i, k)] - adjustments[(i, j)]
        for i in range(size) for j in range(size) for k in range(size)
        if len({i, j, k}) == 3
    }

    flattening = None
    if size == 4:
        log_c = {edge: principal_log(c) for edge, c in long_edges.items()}
        w0 = log_c[(0, 3)] + log_c[(1, 2)] - log_c[(0, 2)] - log_c[(1, 3)]
        w1 = log_c[(0, 2)] + log_c[(1, 3)] - log_c[(0, 1)] - log_c[(2, 3)]
        flattening = Flattening.from_log_parameters(w0, w1, cross_ratio(*points))
    return TruncatedSimplex(
        points=points,
        long_edges=long_edges,
        short_edges=short_edges,
        flattening=flattening,
    )


def face_flattenings(points: Sequence[Point], matrices: Optional[Sequence[np.ndarray]] = None) -> List[Flattening]:
    """Flattenings of the five faces of a decorated 4-simplex, indexed by the omitted point."""
    if len(points) != 5:
        raise InconsistentInputError("A 4-simplex has five points")
    if matrices is None:
        matrices = [standard_matrix(point) for point in points]
    faces = []
    for omitted in range(5):
        keep = [k for k in range(5) if k != omitted]
        faces.append(psi_of_configuration(
            [points[k] for k in keep],
            [matrices[k] for k in keep],
        ).flattening)
    return faces


def random_configuration(
    rng: np.random.Generator,
    n_points: int = 5
) -> Tuple[List[ExtComplex], List[np.ndarray]]:
    """
    Random distinct points, one of them occasionally infinity, with random decorations.

    Each decorating matrix is standard_matrix(point) diag(lambda, 1/lambda) u(t)
    for random nonzero lambda and random t.
    """
    values = rng.normal(size=n_points) + 1j * rng.normal(size=n_points)
    points = [ExtComplex(complex(v)) for v in values]
    if rng.random() < INFINITY_RATE:
        points[int(rng.integers(n_points))] = ExtComplex.infinity()
    matrices = []
    for point in points:
        scale = complex(np.exp(rng.normal() * 0.5 + 1j * rng.uniform(-np.pi, np.pi)))
        shift = complex(rng.normal() + 1j * rng.normal())
        diagonal = np.array([[scale, 0], [0, 1 / scale]], dtype=complex)
        matrices.append(standard_matrix(point) @ diagonal @ unipotent(shift))
    return points, matrices
