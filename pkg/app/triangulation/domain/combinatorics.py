"""Edge classes, cusp links and ordering checks."""
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from loguru import logger

from app.numerics.domain.simplex import EDGES, edge_index
from app.shared.errors import TriangulationParseError
from app.triangulation.domain.models import (
    Cusp,
    CuspTerm,
    CuspTriangle,
    EdgeClass,
    EdgeCorner,
    FaceGluing,
    Triangulation,
    invert_permutation,
)


@dataclass
class OrderingReport:
    """Result of the ordering check."""
    is_ordered: bool
    offending_faces: List[Tuple[int, int]] = field(default_factory=list)


def check_ordering(triangulation: Triangulation) -> OrderingReport:
    """A face pairing respects the orderings when it is increasing on the face's vertices."""
    offending = []
    for tet, faces in enumerate(triangulation.gluings):
        for face, gluing in enumerate(faces):
            images = [gluing.perm[v] for v in range(4) if v != face]
            if not images[0] < images[1] < images[2]:
                offending.append((tet, face))
    return OrderingReport(is_ordered=not offending, offending_faces=offending)


def orientation_violations(triangulation: Triangulation) -> List[Tuple[int, int]]:
    """Faces whose gluing parity disagrees with -eps_t * eps_t'."""
    signs = triangulation.orientation_signs
    return [
        (tet, face)
        for tet, faces in enumerate(triangulation.gluings)
        for face, gluing in enumerate(faces)
        if gluing.sign != -signs[tet] * signs[gluing.tet]
    ]


@lru_cache(maxsize=64)
def edge_classes(triangulation: Triangulation) -> Tuple[EdgeClass, ...]:
    """
    Partition the 6n tetrahedron edges into orbits.

    The walk around an edge (a, b) of tetrahedron t leaves through the face
    opposite x, enters t' through the face opposite perm[x], and continues
    through the face opposite the image of the remaining vertex.

    Returns:
        Edge classes numbered in order of their first (tet, edge index)
    """
    limit = 6 * triangulation.n_tetrahedra
    visited = set()
    classes: List[EdgeClass] = []
    for tet in range(triangulation.n_tetrahedra):
        for edge, (a, b) in enumerate(EDGES):
            if (tet, edge) in visited:
                continue
            x = min(set(range(4)) - {a, b})
            start = state = (tet, a, b, x)
            corners: List[EdgeCorner] = []
            while True:
                current, a, b, x = state
                corners.append(EdgeCorner(current, edge_index(a, b)))
                visited.add((current, edge_index(a, b)))
                y = 6 - a - b - x
                gluing = triangulation.gluings[current][x]
                state = (gluing.tet, gluing.perm[a], gluing.perm[b], gluing.perm[y])
                if state == start:
                    break
                if len(corners) > limit:
                    raise TriangulationParseError(
                        "Edge orbit does not close", location=f"tetrahedron {tet} edge {edge}"
                    )
            classes.append(EdgeClass(index=len(classes), corners=tuple(corners)))
    logger.debug(
        f"Found {len(classes)} edge classes",
        valences=[edge_class.valence for edge_class in classes]
    )
    return tuple(classes)


def edge_class_of(triangulation: Triangulation) -> Dict[Tuple[int, int], int]:
    """Map (tet, edge index) to the index of its edge class."""
    lookup = {}
    for edge_class in edge_classes(triangulation):
        for corner in edge_class.corners:
            lookup[(corner.tet, corner.edge)] = edge_class.index
    return lookup


def _neighbor(triangulation: Triangulation, tet: int, vertex: int, side: int) -> Tuple[int, int, int]:
    gluing = triangulation.gluings[tet][side]
    return gluing.tet, gluing.perm[vertex], gluing.perm[side]


@lru_cache(maxsize=64)
def cusp_link(triangulation: Triangulation) -> Tuple[Cusp, ...]:
    """
    Group the 4n cusp triangles into vertex links.

    Link vertices are counted by identifying corners across glued sides,
    which gives the Euler characteristic of every cusp.
    """
    n = triangulation.n_tetrahedra
    assignment: Dict[Tuple[int, int], int] = {}
    components: List[List[Tuple[int, int]]] = []
    for tet in range(n):
        for vertex in range(4):
            if (tet, vertex) in assignment:
                continue
            index = len(components)
            component = []
            queue = [(tet, vertex)]
            assignment[(tet, vertex)] = index
            while queue:
                current = queue.pop(0)
                component.append(current)
                for side in range(4):
                    if side == current[1]:
                        continue
                    other_tet, other_vertex, _ = _neighbor(triangulation, current[0], current[1], side)
                    if (other_tet, other_vertex) not in assignment:
                        assignment[(other_tet, other_vertex)] = index
                        queue.append((other_tet, other_vertex))
            components.append(sorted(component))

    parent: Dict[Tuple[int, int, int], Tuple[int, int, int]] = {}

    def find(item: Tuple[int, int, int]) -> Tuple[int, int, int]:
        parent.setdefault(item, item)
        while parent[item] != item:
            parent[item] = parent[parent[item]]
            item = parent[item]
        return item

    for tet in range(n):
        for vertex in range(4):
            for side in range(4):
                if side == vertex:
                    continue
                gluing = triangulation.gluings[tet][side]
                for corner in range(4):
                    if corner in (vertex, side):
                        continue
                    root_a = find((tet, vertex, corner))
                    root_b = find((gluing.tet, gluing.perm[vertex], gluing.perm[corner]))
                    if root_a != root_b:
                        parent[root_a] = root_b

    cusps = []
    for index, component in enumerate(components):
        triangles = []
        link_vertices = set()
        for tet, vertex in component:
            neighbors = tuple(
                None if side == vertex else _neighbor(triangulation, tet, vertex, side)
                for side in range(4)
            )
            triangles.append(CuspTriangle(tet=tet, vertex=vertex, cusp=index, neighbors=neighbors))
            for corner in range(4):
                if corner != vertex:
                    link_vertices.add(find((tet, vertex, corner)))
        cusps.append(Cusp(index=index, triangles=tuple(triangles), n_vertices=len(link_vertices)))
    logger.debug(
        f"Found {len(cusps)} cusps",
        euler_characteristics=[cusp.euler_characteristic for cusp in cusps]
    )
    return tuple(cusps)


def relabel_tetrahedra(triangulation: Triangulation, order: Sequence[int]) -> Triangulation:
    """Renumber tetrahedra so that old tetrahedron ``order[k]`` becomes k."""
    new_index = {old: new for new, old in enumerate(order)}
    gluings = tuple(
        tuple(
            FaceGluing(tet=new_index[gluing.tet], perm=gluing.perm)
            for gluing in triangulation.gluings[old]
        )
        for old in order
    )
    return replace(
        triangulation,
        gluings=gluings,
        orientation_signs=tuple(triangulation.orientation_signs[old] for old in order),
        cusp_equations=tuple(
            tuple(replace(term, tet=new_index[term.tet]) for term in row)
            for row in triangulation.cusp_equations
        ),
        shapes=None if triangulation.shapes is None else tuple(triangulation.shapes[old] for old in order),
        shape_field=None,
    )


def disjoint_union(first: Triangulation, second: Triangulation) -> Triangulation:
    """Place ``second`` after ``first``; file data other than combinatorics is merged."""
    offset = first.n_tetrahedra
    shifted = tuple(
        tuple(FaceGluing(tet=gluing.tet + offset, perm=gluing.perm) for gluing in faces)
        for faces in second.gluings
    )
    shapes = None
    if first.shapes is not None and second.shapes is not None:
        shapes = first.shapes + second.shapes
    return Triangulation(
        n_tetrahedra=first.n_tetrahedra + second.n_tetrahedra,
        gluings=first.gluings + shifted,
        orientation_signs=first.orientation_signs + second.orientation_signs,
        name=f"{first.name or 'M'} + {second.name or 'N'}",
        cusp_equations=first.cusp_equations + tuple(
            tuple(CuspTerm(tet=term.tet + offset, a=term.a, b=term.b, c=term.c) for term in row)
            for row in second.cusp_equations
        ),
        shapes=shapes,
    )


def compose_face_permutation(
    triangulation: Triangulation,
    tet: int,
    face: int,
    swap: Tuple[int, int]
) -> Triangulation:
    """
    Precompose one face pairing with a transposition of two of the face's vertices.

    The reverse gluing is updated so the result is still involutive.
    """
    if face in swap:
        raise ValueError("The swapped vertices must lie on the face")
    gluing = triangulation.gluings[tet][face]
    transposition = list(range(4))
    transposition[swap[0]], transposition[swap[1]] = swap[1], swap[0]
    perm = tuple(gluing.perm[transposition[k]] for k in range(4))
    faces = [list(row) for row in triangulation.gluings]
    faces[tet][face] = FaceGluing(tet=gluing.tet, perm=perm)
    faces[gluing.tet][perm[face]] = FaceGluing(tet=tet, perm=invert_permutation(perm))
    return replace(triangulation, gluings=tuple(tuple(row) for row in faces))
