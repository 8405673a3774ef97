"""Complex volume command and query handlers."""
from typing import Any, Dict, Optional, Sequence

from loguru import logger

from app.cvol.commands import DevelopCuspsCommand, SolveShapesCommand
from app.cvol.domain.invariants import FiveTermReport, five_term_suite, run_invariant_suite
from app.cvol.domain.models import InvariantReport, VolumeComputation
from app.cvol.domain.pipeline import as_assignment, complex_volume, conjugate_representation, reverse_orientation
from app.cvol.queries import ComplexVolumeQuery, FiveTermQuery, InvariantSuiteQuery, ValidateTriangulationQuery
from app.develop.domain.cusp import develop
from app.develop.domain.models import Decoration
from app.shared.cqrs.mediator import Mediator
from app.solver.domain.field import shapes_from_field
from app.solver.domain.models import ShapeAssignment
from app.solver.domain.newton import solve
from app.triangulation.domain.combinatorics import check_ordering, cusp_link, edge_classes
from app.triangulation.domain.models import Triangulation


def resolve_shapes(
    triangulation: Triangulation,
    shapes: Optional[Sequence[complex]] = None,
    use_field: bool = False,
    root: Optional[complex] = None
) -> ShapeAssignment:
    """Explicit shapes win, then the shape field when asked for, then Newton."""
    if shapes is not None:
        return as_assignment(triangulation, shapes)
    if use_field:
        return shapes_from_field(triangulation, root=root)
    return solve(triangulation)


class SolveShapesHandler:
    """Handler for shape solving."""

    def handle(self, command: SolveShapesCommand) -> ShapeAssignment:
        if command.use_field:
            return shapes_from_field(command.triangulation, root=command.root)
        return solve(command.triangulation, seed=command.seed)


class DevelopCuspsHandler:
    """Handler for cusp development."""

    def handle(self, command: DevelopCuspsCommand) -> Decoration:
        triangulation = command.triangulation
        shapes = resolve_shapes(triangulation, command.shapes)
        unit_edge = triangulation.decoration.unit_edge if command.unit_edge is None else command.unit_edge
        return develop(triangulation, shapes, bases=command.bases, unit_edge=unit_edge)


class ValidateTriangulationHandler:
    """Handler for triangulation summaries."""

    def handle(self, query: ValidateTriangulationQuery) -> Dict[str, Any]:
        triangulation = query.triangulation
        ordering = check_ordering(triangulation)
        cusps = cusp_link(triangulation)
        return {
            "name": triangulation.name,
            "tetrahedra": triangulation.n_tetrahedra,
            "ordered": ordering.is_ordered,
            "edge_classes": [edge_class.valence for edge_class in edge_classes(triangulation)],
            "cusps": [
                {
                    "index": cusp.index,
                    "triangles": len(cusp.triangles),
                    "euler_characteristic": cusp.euler_characteristic,
                }
                for cusp in cusps
            ],
        }


class ComplexVolumeHandler:
    """Handler for complex volume computation."""

    def handle(self, query: ComplexVolumeQuery) -> VolumeComputation:
        shapes = resolve_shapes(query.triangulation, query.shapes, query.use_field, query.root)
        computation = complex_volume(
            query.triangulation,
            shapes,
            bases=query.bases,
            unit_edge=query.unit_edge
        )
        if query.conjugate:
            computation = conjugate_representation(computation)
        if query.reverse_orientation:
            computation = reverse_orientation(computation)
        return computation


class InvariantSuiteHandler:
    """Handler for the invariant suite."""

    def handle(self, query: InvariantSuiteQuery) -> InvariantReport:
        shapes = None
        if query.shapes is not None or query.use_field:
            shapes = resolve_shapes(query.triangulation, query.shapes, query.use_field)
        return run_invariant_suite(
            query.triangulation,
            shapes,
            five_term_samples=query.five_term_samples,
            rng_seed=query.rng_seed
        )


class FiveTermHandler:
    """Handler for the five-term property test."""

    def handle(self, query: FiveTermQuery) -> FiveTermReport:
        return five_term_suite(query.samples, query.rng_seed)


def register_handlers(mediator: Mediator) -> None:
    """Register cvol handlers with the mediator."""
    mediator.register_command_handler(SolveShapesCommand, lambda cmd: SolveShapesHandler().handle(cmd))
    mediator.register_command_handler(DevelopCuspsCommand, lambda cmd: DevelopCuspsHandler().handle(cmd))
    mediator.register_query_handler(ValidateTriangulationQuery, lambda q: ValidateTriangulationHandler().handle(q))
    mediator.register_query_handler(ComplexVolumeQuery, lambda q: ComplexVolumeHandler().handle(q))
    mediator.register_query_handler(InvariantSuiteQuery, lambda q: InvariantSuiteHandler().handle(q))
    mediator.register_query_handler(FiveTermQuery, lambda q: FiveTermHandler().handle(q))
    logger.debug("Registered cvol handlers")
