"""Parse triangulation JSON into validated domain objects."""
import json
from typing import Any, Dict, Union

from loguru import logger
from pydantic import ValidationError

from app.shared.errors import (
    OrderingError,
    OrientationError,
    TriangulationParseError,
    TrivialEndError,
)
from app.triangulation.domain.combinatorics import (
    check_ordering,
    cusp_link,
    edge_classes,
    orientation_violations,
)
from app.triangulation.domain.models import (
    CuspTerm,
    DecorationSpec,
    FaceGluing,
    ShapeField,
    Triangulation,
)
from app.triangulation.schemas import TriangulationFile


def _location(error: Dict[str, Any]) -> str:
    return ".".join(str(part) for part in error["loc"]) or "document"


def from_document(document: TriangulationFile, validate: bool = True) -> Triangulation:
    """
    Build a Triangulation from a validated file document.

    Args:
        document: Parsed file
        validate: Also enforce ordering, orientation and ideal ends

    Returns:
        Triangulation

    Raises:
        TriangulationParseError: On any structural or semantic violation
    """
    triangulation = Triangulation(
        n_tetrahedra=document.tetrahedra,
        gluings=tuple(
            tuple(FaceGluing(tet=target, perm=tuple(perm)) for target, perm in faces)
            for faces in document.gluings
        ),
        orientation_signs=tuple(document.orientation_signs),
        name=document.name,
        cusp_equations=tuple(
            tuple(CuspTerm(tet=term.tet, a=term.a, b=term.b, c=term.c) for term in row)
            for row in document.cusp_equations or []
        ),
        shapes=None if document.shapes is None else tuple(complex(re, im) for re, im in document.shapes),
        shape_field=None if document.shape_field is None else ShapeField(
            poly=tuple(document.shape_field.poly),
            root=complex(*document.shape_field.root),
            shape_exprs=tuple(tuple(expr) for expr in document.shape_field.shape_exprs),
        ),
        decoration=DecorationSpec() if document.decoration is None else DecorationSpec(
            unit_edge=document.decoration.unit_edge,
            base=document.decoration.base,
        ),
    )
    for row in triangulation.cusp_equations:
        for term in row:
            if term.tet >= triangulation.n_tetrahedra:
                raise TriangulationParseError(
                    f"Cusp equation refers to tetrahedron {term.tet}", location="cusp_equations"
                )
    if validate:
        validate_triangulation(triangulation)
    return triangulation


def validate_triangulation(triangulation: Triangulation) -> None:
    """
    Enforce ordering, orientation consistency and non-trivial ends.

    Raises:
        OrderingError: If a face pairing breaks the vertex orderings
        OrientationError: If a gluing parity disagrees with the signs
        TrivialEndError: If a vertex link is a sphere
    """
    ordering = check_ordering(triangulation)
    if not ordering.is_ordered:
        tet, face = ordering.offending_faces[0]
        raise OrderingError(
            f"{len(ordering.offending_faces)} face pairings do not preserve the vertex order",
            location=f"tetrahedron {tet} face {face}"
        )

    violations = orientation_violations(triangulation)
    if violations:
        tet, face = violations[0]
        raise OrientationError(
            "Gluing parity disagrees with the orientation signs",
            location=f"tetrahedron {tet} face {face}"
        )

    for cusp in cusp_link(triangulation):
        if cusp.euler_characteristic == 2:
            tet, vertex = cusp.triangles[0].key
            raise TrivialEndError(
                "Vertex link is a sphere; only ideal vertices with non-trivial ends are supported",
                location=f"tetrahedron {tet} vertex {vertex}"
            )


def parse(source: Union[str, bytes, Dict[str, Any]]) -> Triangulation:
    """
    Parse triangulation JSON text (or an already decoded document).

    Raises:
        TriangulationParseError: Malformed JSON, schema violations, bad
            permutations, non-involutive gluings, ordering, orientation or
            trivial-end violations
    """
    if isinstance(source, (str, bytes)):
        try:
            raw = json.loads(source)
        except json.JSONDecodeError as e:
            raise TriangulationParseError(f"Malformed JSON: {e.msg}", location=f"line {e.lineno} column {e.colno}")
    else:
        raw = source

    try:
        document = TriangulationFile.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        raise TriangulationParseError(first["msg"], location=_location(first))

    triangulation = from_document(document)
    logger.info(
        f"Parsed triangulation {triangulation.name or '<unnamed>'}",
        tetrahedra=triangulation.n_tetrahedra,
        edges=len(edge_classes(triangulation)),
        cusps=len(cusp_link(triangulation))
    )
    return triangulation


def to_document(triangulation: Triangulation) -> TriangulationFile:
    """Serialise a Triangulation back to the file schema."""
    return TriangulationFile.model_validate({
        "name": triangulation.name,
        "tetrahedra": triangulation.n_tetrahedra,
        "orientation_signs": list(triangulation.orientation_signs),
        "gluings": [
            [[gluing.tet, list(gluing.perm)] for gluing in faces]
            for faces in triangulation.gluings
        ],
        "cusp_equations": [
            [{"tet": t.tet, "a": t.a, "b": t.b, "c": t.c} for t in row]
            for row in triangulation.cusp_equations
        ] or None,
        "shapes": None if triangulation.shapes is None else [[z.real, z.imag] for z in triangulation.shapes],
        "shape_field": None if triangulation.shape_field is None else {
            "poly": list(triangulation.shape_field.poly),
            "root": [triangulation.shape_field.root.real, triangulation.shape_field.root.imag],
            "shape_exprs": [list(expr) for expr in triangulation.shape_field.shape_exprs],
        },
        "decoration": {
            "unit_edge": triangulation.decoration.unit_edge,
            "base": triangulation.decoration.base,
        },
    })
