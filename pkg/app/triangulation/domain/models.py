"""Triangulation domain models."""
from dataclasses import dataclass
from typing import Optional, Tuple

from app.numerics.domain.simplex import EDGES, LOG_PARAMETER_OF_EDGE
from app.shared.errors import NonInvolutiveGluingError, PermutationError

Permutation = Tuple[int, int, int, int]
TriangleKey = Tuple[int, int]


def invert_permutation(perm: Permutation) -> Permutation:
    inverse = [0, 0, 0, 0]
    for source, target in enumerate(perm):
        inverse[target] = source
    return tuple(inverse)


def permutation_sign(perm: Permutation) -> int:
    inversions = sum(
        1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class FaceGluing:
    """Face f of a tetrahedron glued to face perm[f] of ``tet`` by k -> perm[k]."""
    tet: int
    perm: Permutation

    @property
    def sign(self) -> int:
        return permutation_sign(self.perm)


@dataclass(frozen=True)
class CuspTerm:
    """Factor z^a z'^b z''^c of tetrahedron ``tet`` in a cusp equation."""
    tet: int
    a: int = 0
    b: int = 0
    c: int = 0


@dataclass(frozen=True)
class ShapeField:
    """Shapes as polynomials in a root x of an integer polynomial (ascending coefficients)."""
    poly: Tuple[int, ...]
    root: complex
    shape_exprs: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class DecorationSpec:
    """Decoration choices stored with a triangulation file."""
    unit_edge: Optional[int] = None
    base: Optional[Tuple[int, int, int]] = None


@dataclass(frozen=True)
class EdgeCorner:
    """One tetrahedron edge inside an edge class."""
    tet: int
    edge: int

    @property
    def vertices(self) -> Tuple[int, int]:
        return EDGES[self.edge]

    @property
    def parameter(self) -> int:
        """Index into (z, z', z'') of the shape parameter on this edge."""
        return LOG_PARAMETER_OF_EDGE[self.edge]


@dataclass(frozen=True)
class EdgeClass:
    """Cyclic orbit of tetrahedron edges around one edge of the triangulation."""
    index: int
    corners: Tuple[EdgeCorner, ...]

    @property
    def valence(self) -> int:
        return len(self.corners)


@dataclass(frozen=True)
class CuspTriangle:
    """
    Link triangle of vertex ``vertex`` of tetrahedron ``tet``.

    Corners are the other three vertices j; corner j carries the shape
    parameter of edge (vertex, j). Side l lies in face l and is opposite
    corner l; ``neighbors[l]`` is the (tet, vertex, side) glued to it.
    """
    tet: int
    vertex: int
    cusp: int
    neighbors: Tuple[Optional[Tuple[int, int, int]], ...]

    @property
    def key(self) -> TriangleKey:
        return self.tet, self.vertex

    @property
    def corners(self) -> Tuple[int, ...]:
        return tuple(j for j in range(4) if j != self.vertex)

    sides = corners

    def corner_parameter(self, corner: int) -> int:
        return LOG_PARAMETER_OF_EDGE[EDGES.index(tuple(sorted((self.vertex, corner))))]


@dataclass(frozen=True)
class Cusp:
    """One vertex link, a closed surface triangulated by cusp triangles."""
    index: int
    triangles: Tuple[CuspTriangle, ...]
    n_vertices: int

    @property
    def euler_characteristic(self) -> int:
        faces = len(self.triangles)
        return self.n_vertices - 3 * faces // 2 + faces

    @property
    def is_torus(self) -> bool:
        return self.euler_characteristic == 0


@dataclass(frozen=True)
class Triangulation:
    """
    Ordered ideal triangulation.

    ``gluings[t][f]`` glues face f of tetrahedron t. Construction validates
    permutations and the involution property; ordering, orientation and ends
    are checked by the parser.
    """
    n_tetrahedra: int
    gluings: Tuple[Tuple[FaceGluing, ...], ...]
    orientation_signs: Tuple[int, ...]
    name: Optional[str] = None
    cusp_equations: Tuple[Tuple[CuspTerm, ...], ...] = ()
    shapes: Optional[Tuple[complex, ...]] = None
    shape_field: Optional[ShapeField] = None
    decoration: DecorationSpec = DecorationSpec()

    def __post_init__(self) -> None:
        if self.n_tetrahedra <= 0:
            raise PermutationError("A triangulation needs at least one tetrahedron")
        if len(self.gluings) != self.n_tetrahedra:
            raise PermutationError(
                f"Expected gluings for {self.n_tetrahedra} tetrahedra, got {len(self.gluings)}"
            )
        if len(self.orientation_signs) != self.n_tetrahedra:
            raise PermutationError("One orientation sign per tetrahedron is required")
        if any(sign not in (1, -1) for sign in self.orientation_signs):
            raise PermutationError("Orientation signs must be +1 or -1")

        for tet, faces in enumerate(self.gluings):
            if len(faces) != 4:
                raise PermutationError("Each tetrahedron has four faces", location=f"tetrahedron {tet}")
            for face, gluing in enumerate(faces):
                location = f"tetrahedron {tet} face {face}"
                if sorted(gluing.perm) != [0, 1, 2, 3]:
                    raise PermutationError(f"{list(gluing.perm)} is not a permutation of 0..3", location=location)
                if not 0 <= gluing.tet < self.n_tetrahedra:
                    raise PermutationError(f"Target tetrahedron {gluing.tet} does not exist", location=location)
                if gluing.tet == tet and gluing.perm[face] == face:
                    raise PermutationError("Face is glued to itself", location=location)

        for tet, faces in enumerate(self.gluings):
            for face, gluing in enumerate(faces):
                reverse = self.gluings[gluing.tet][gluing.perm[face]]
                if reverse.tet != tet or reverse.perm != invert_permutation(gluing.perm):
                    raise NonInvolutiveGluingError(
                        f"Reverse of the gluing to tetrahedron {gluing.tet} face {gluing.perm[face]} "
                        f"is ({reverse.tet}, {list(reverse.perm)})",
                        location=f"tetrahedron {tet} face {face}"
                    )
