"""Complex volume request and response schemas (Pydantic models)."""
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from app.numerics.domain.models import Flattening
from app.triangulation.schemas import TriangulationFile

ComplexPair = Tuple[float, float]


def to_complex(pair: Optional[ComplexPair]) -> Optional[complex]:
    return None if pair is None else complex(pair[0], pair[1])


def to_complex_list(pairs: Optional[Sequence[ComplexPair]]) -> Optional[List[complex]]:
    return None if pairs is None else [complex(re, im) for re, im in pairs]


def to_pair(value: complex) -> List[float]:
    return [value.real, value.imag]


class TriangulationRequest(BaseModel):
    """Request carrying a triangulation document."""
    triangulation: TriangulationFile


class SolveRequest(TriangulationRequest):
    """Solve the gluing equations from a seed or evaluate the shape field."""
    seed: Optional[List[ComplexPair]] = None
    field: bool = False
    root: Optional[ComplexPair] = None


class ComplexVolumeRequest(TriangulationRequest):
    """Compute the complex volume."""
    shapes: Optional[List[ComplexPair]] = None
    field: bool = False
    root: Optional[ComplexPair] = None
    unit_edge: Optional[int] = Field(None, ge=0)
    base: Optional[Tuple[int, int, int]] = None
    conjugate: bool = False
    reverse_orientation: bool = False


class CheckRequest(TriangulationRequest):
    """Run the invariant suite."""
    shapes: Optional[List[ComplexPair]] = None
    field: bool = False
    five_term_samples: int = Field(20, ge=0, le=500)
    rng_seed: int = 0


class FiveTermRequest(BaseModel):
    """Property test of the lifted five-term relation."""
    samples: int = Field(100, ge=1, le=5000)
    rng_seed: int = 0


class FlatteningResponse(BaseModel):
    """Flattening [z; p, q]."""
    z: Tuple[float, float]
    p: int
    q: int

    @classmethod
    def from_flattening(cls, flattening: Flattening) -> "FlatteningResponse":
        return cls(z=(flattening.z.real, flattening.z.imag), p=flattening.p, q=flattening.q)


class ShapesResponse(BaseModel):
    """Solved shapes with per-equation residuals."""
    shapes: List[Tuple[float, float]]
    residuals: List[float]
    iterations: int
    source: str


class ComplexVolumeResponse(BaseModel):
    """Complex volume together with the flattened fundamental class."""
    vol: float
    cs_mod_pi2: float
    cs_normalized: float
    volume_check: Optional[float] = None
    flattenings: List[FlatteningResponse]
    residuals: Dict[str, float]


class InvariantReportResponse(BaseModel):
    """Invariant suite report."""
    passed: bool
    checks: List[Dict[str, Any]]
