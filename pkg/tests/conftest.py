"""Test configuration and fixtures."""
import cmath
import json
import math

import pytest

from app.triangulation.domain.models import FaceGluing, Triangulation
from app.triangulation.repository import FIXTURES_DIR, TriangulationRepository

# 5_2 knot complement, geometric solution.
FIVE_TWO_VOL = 2.828122088330783
FIVE_TWO_CS = 3.024128376509301
# 5_2, real Galois conjugate.
FIVE_TWO_REAL_CS = -1.1134545524739240
FIVE_TWO_REAL_ROOT = complex(-0.7548776662466927, 0.0)
# Twice the volume of the regular ideal tetrahedron.
FIGURE_EIGHT_VOL = 2.029883212819307


@pytest.fixture
def repository():
    """Repository over the bundled fixtures."""
    return TriangulationRepository()


@pytest.fixture
def five_two(repository):
    """5_2 knot complement: three tetrahedra, one cusp."""
    return repository.get("5_2")


@pytest.fixture
def figure_eight(repository):
    """Figure-eight knot complement: two tetrahedra with opposite orientation signs."""
    return repository.get("figure_eight")


@pytest.fixture
def five_two_document():
    return json.loads((FIXTURES_DIR / "5_2.json").read_text(encoding="utf-8"))


@pytest.fixture
def figure_eight_document():
    return json.loads((FIXTURES_DIR / "figure_eight.json").read_text(encoding="utf-8"))


@pytest.fixture
def five_two_shapes(five_two):
    """Geometric 5_2 shapes u = x^2, v = w = 1 - x + x^2 for the root x of x^3 - x^2 + 1 in the upper half-plane."""
    from app.solver.domain.field import shapes_from_field
    return shapes_from_field(five_two)


@pytest.fixture
def figure_eight_shapes():
    """Geometric shapes: tetrahedron 0 is ordered against the orientation, so its shape is conjugated."""
    return (cmath.exp(-1j * math.pi / 3), cmath.exp(1j * math.pi / 3))


@pytest.fixture
def single_tetrahedron():
    """One tetrahedron with faces 0 <-> 3 and 1 <-> 2 paired; two edge orbits of valence 5 and 1."""
    return Triangulation(
        n_tetrahedra=1,
        gluings=((
            FaceGluing(tet=0, perm=(3, 0, 1, 2)),
            FaceGluing(tet=0, perm=(0, 2, 1, 3)),
            FaceGluing(tet=0, perm=(0, 2, 1, 3)),
            FaceGluing(tet=0, perm=(1, 2, 3, 0)),
        ),),
        orientation_signs=(1,),
        name="single",
    )
