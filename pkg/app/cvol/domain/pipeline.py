"""Complex volume pipeline: develop, label long edges, flatten, evaluate L-hat."""
from dataclasses import replace
from typing import Dict, Optional, Sequence, Union

from loguru import logger

from app.bloch.domain.relations import lhat_sum
from app.config import settings
from app.cvol.domain.models import ComplexVolume, VolumeComputation
from app.develop.domain.cocycle import corner_relation_residual, edge_log_c, psi_flatten, semi_strong_edge_sums
from app.develop.domain.cusp import develop
from app.develop.domain.models import Base
from app.numerics.domain.functions import bloch_wigner
from app.numerics.domain.models import sign_pattern_residual
from app.shared.errors import InconsistentInputError, InvariantViolationError
from app.shared.observability import pipeline_span
from app.solver.domain.equations import verify_shapes
from app.solver.domain.models import ShapeAssignment
from app.triangulation.domain.combinatorics import cusp_link
from app.triangulation.domain.models import Triangulation

Shapes = Union[ShapeAssignment, Sequence[complex]]


def as_assignment(triangulation: Triangulation, shapes: Shapes) -> ShapeAssignment:
    """Wrap plain shapes in a verified ShapeAssignment."""
    if isinstance(shapes, ShapeAssignment):
        verify_shapes(triangulation, shapes.shapes)
        return shapes
    values = tuple(complex(z) for z in shapes)
    residuals = verify_shapes(triangulation, values)
    return ShapeAssignment(shapes=values, residuals=residuals, source="input")


def bases_for(triangulation: Triangulation, base: Optional[Base]) -> Dict[int, Base]:
    """
    Key a base side by the cusp its triangle belongs to.

    Raises:
        InconsistentInputError: If no cusp contains the base triangle
    """
    if base is None:
        return {}
    base = tuple(base)
    for cusp in cusp_link(triangulation):
        if any(triangle.key == base[:2] for triangle in cusp.triangles):
            return {cusp.index: base}
    raise InconsistentInputError(f"Base {base} is not a side of any cusp triangle")


def default_bases(triangulation: Triangulation) -> Dict[int, Base]:
    """Base side requested by the file's decoration block."""
    return bases_for(triangulation, triangulation.decoration.base)


def _require(name: str, residual: float, tolerance: float) -> None:
    if residual > tolerance:
        raise InvariantViolationError(f"Invariant '{name}' failed", location=name, residual=residual)


def complex_volume(
    triangulation: Triangulation,
    shapes: Shapes,
    bases: Optional[Dict[int, Base]] = None,
    unit_edge: Optional[int] = None
) -> VolumeComputation:
    """
    Compute Vol + i CS from a triangulation and a solution of its gluing equations.

    Args:
        triangulation: Ordered triangulation
        shapes: Shapes satisfying the edge and cusp equations
        bases: Development base per cusp; defaults to the file's decoration
        unit_edge: Edge class normalised to c = 1; defaults to the file's decoration

    Returns:
        VolumeComputation with the complex volume, the flattened fundamental
        class and every residual checked on the way

    Raises:
        GluingResidualError: If the shapes do not solve the gluing equations
        NonParabolicHolonomyError: If a cusp does not close up
        CocycleInconsistencyError: If corner products of an edge class disagree
        FlatteningIntegralityError: If a flattening has non-integral p or q
        InvariantViolationError: If any other residual exceeds its tolerance
    """
    assignment = as_assignment(triangulation, shapes)
    bases = default_bases(triangulation) if bases is None else bases
    unit_edge = triangulation.decoration.unit_edge if unit_edge is None else unit_edge
    residuals: Dict[str, float] = {"gluing_equations": assignment.max_residual}

    with pipeline_span("cvol.complex_volume", triangulation=triangulation.name, tetrahedra=triangulation.n_tetrahedra):
        with pipeline_span("cvol.develop", unit_edge=unit_edge):
            decoration = develop(triangulation, assignment, bases=bases, unit_edge=unit_edge)
            residuals["corner_relations"] = corner_relation_residual(triangulation, assignment, decoration)
            _require("corner_relations", residuals["corner_relations"], settings.assertion_tolerance)

        with pipeline_span("cvol.edge_log_c"):
            log_cs = edge_log_c(triangulation, decoration)
            residuals["edge_c_consistency"] = max((entry.spread for entry in log_cs), default=0.0)

        with pipeline_span("cvol.psi"):
            psi = psi_flatten(triangulation, assignment, log_cs)
            residuals["sign_relations"] = max(
                (sign_pattern_residual(f) for f in psi.flattenings), default=0.0
            )
            _require("sign_relations", residuals["sign_relations"], settings.invariant_tolerance)
            residuals["semi_strong_edges"] = max(
                (abs(total) for total in semi_strong_edge_sums(triangulation, psi.flattenings)),
                default=0.0
            )
            _require("semi_strong_edges", residuals["semi_strong_edges"], settings.invariant_tolerance)

        with pipeline_span("cvol.lhat"):
            raw = lhat_sum(psi.element)
            volume_check = sum(
                sign * bloch_wigner(z)
                for sign, z in zip(triangulation.orientation_signs, assignment.shapes)
            )
            volume = ComplexVolume.from_raw(raw, volume_check=volume_check)
            residuals["volume_check"] = abs(volume.vol - volume_check)

    logger.info(
        "Complex volume computed",
        triangulation=triangulation.name,
        vol=volume.vol,
        cs=volume.cs,
        flattenings=[str(f) for f in psi.flattenings]
    )
    return VolumeComputation(
        triangulation=triangulation,
        shapes=assignment,
        volume=volume,
        element=psi.element,
        flattenings=psi.flattenings,
        decoration=decoration,
        edge_log_cs=log_cs,
        unit_edge=unit_edge,
        residuals=residuals,
    )


def conjugate_representation(computation: VolumeComputation) -> VolumeComputation:
    """Rerun the pipeline on the complex-conjugate shapes: vol changes sign, cs is fixed."""
    return complex_volume(
        computation.triangulation,
        computation.shapes.conjugate(),
        bases=dict(computation.decoration.bases),
        unit_edge=computation.unit_edge,
    )


def reverse_orientation(computation: VolumeComputation) -> VolumeComputation:
    """Rerun the pipeline with every orientation sign flipped: vol and cs change sign."""
    triangulation = computation.triangulation
    flipped = replace(triangulation, orientation_signs=tuple(-sign for sign in triangulation.orientation_signs))
    return complex_volume(
        flipped,
        computation.shapes,
        bases=dict(computation.decoration.bases),
        unit_edge=computation.unit_edge,
    )
