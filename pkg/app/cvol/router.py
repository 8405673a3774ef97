"""Complex volume API router."""
from typing import Any, Dict

from fastapi import APIRouter

from app.cvol.commands import SolveShapesCommand
from app.cvol.domain.pipeline import bases_for
from app.cvol.handlers import register_handlers
from app.cvol.queries import ComplexVolumeQuery, FiveTermQuery, InvariantSuiteQuery, ValidateTriangulationQuery
from app.cvol.schemas import (
    CheckRequest,
    ComplexVolumeRequest,
    ComplexVolumeResponse,
    FiveTermRequest,
    FlatteningResponse,
    InvariantReportResponse,
    ShapesResponse,
    SolveRequest,
    TriangulationRequest,
    to_complex,
    to_complex_list,
    to_pair,
)
from app.shared.cqrs.mediator import mediator
from app.shared.response import create_success_response
from app.triangulation.parser import from_document, to_document
from app.triangulation.repository import TriangulationRepository


router = APIRouter(prefix="/api/v1", tags=["Complex volume"])

register_handlers(mediator)


@router.get("/fixtures", response_model=Dict[str, Any])
def list_fixtures() -> Dict[str, Any]:
    """Names of the bundled triangulations."""
    return create_success_response(TriangulationRepository().list_fixtures()).model_dump()


@router.get("/fixtures/{name}", response_model=Dict[str, Any])
def get_fixture(name: str) -> Dict[str, Any]:
    """A bundled triangulation as a file document."""
    triangulation = TriangulationRepository().get(name)
    return create_success_response(to_document(triangulation).model_dump()).model_dump()


@router.post("/validate", response_model=Dict[str, Any])
def validate(request: TriangulationRequest) -> Dict[str, Any]:
    """Parse and validate a triangulation; report edge classes and cusps."""
    triangulation = from_document(request.triangulation)
    summary = mediator.query(ValidateTriangulationQuery(triangulation=triangulation))
    return create_success_response(summary).model_dump()


@router.post("/solve", response_model=Dict[str, Any])
def solve_shapes(request: SolveRequest) -> Dict[str, Any]:
    """Solve the gluing equations."""
    triangulation = from_document(request.triangulation)
    assignment = mediator.send(SolveShapesCommand(
        triangulation=triangulation,
        seed=to_complex_list(request.seed),
        use_field=request.field,
        root=to_complex(request.root)
    ))
    response = ShapesResponse(
        shapes=[to_pair(z) for z in assignment.shapes],
        residuals=list(assignment.residuals),
        iterations=assignment.iterations,
        source=assignment.source
    )
    return create_success_response(response.model_dump()).model_dump()


@router.post("/cvol", response_model=Dict[str, Any])
def compute_complex_volume(request: ComplexVolumeRequest) -> Dict[str, Any]:
    """Compute Vol + i CS."""
    triangulation = from_document(request.triangulation)
    bases = None if request.base is None else bases_for(triangulation, request.base)
    computation = mediator.query(ComplexVolumeQuery(
        triangulation=triangulation,
        shapes=to_complex_list(request.shapes),
        use_field=request.field,
        root=to_complex(request.root),
        bases=bases,
        unit_edge=request.unit_edge,
        conjugate=request.conjugate,
        reverse_orientation=request.reverse_orientation
    ))
    volume = computation.volume
    response = ComplexVolumeResponse(
        vol=volume.vol,
        cs_mod_pi2=volume.cs,
        cs_normalized=volume.cs_normalized,
        volume_check=volume.volume_check,
        flattenings=[FlatteningResponse.from_flattening(f) for f in computation.flattenings],
        residuals=computation.residuals
    )
    return create_success_response(response.model_dump()).model_dump()


@router.post("/check", response_model=Dict[str, Any])
def check(request: CheckRequest) -> Dict[str, Any]:
    """Run the invariant suite."""
    triangulation = from_document(request.triangulation)
    report = mediator.query(InvariantSuiteQuery(
        triangulation=triangulation,
        shapes=to_complex_list(request.shapes),
        use_field=request.field,
        five_term_samples=request.five_term_samples,
        rng_seed=request.rng_seed
    ))
    response = InvariantReportResponse(**report.to_dict())
    return create_success_response(response.model_dump()).model_dump()


@router.post("/fiveterm", response_model=Dict[str, Any])
def five_term(request: FiveTermRequest) -> Dict[str, Any]:
    """Lifted five-term property test on random configurations."""
    report = mediator.query(FiveTermQuery(samples=request.samples, rng_seed=request.rng_seed))
    return create_success_response(report.to_dict()).model_dump()
