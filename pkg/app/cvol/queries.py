"""Complex volume queries."""
from dataclasses import dataclass
from typing import Dict, Optional, Sequence

from app.develop.domain.models import Base
from app.shared.cqrs.messages import Query
from app.triangulation.domain.models import Triangulation


@dataclass
class ValidateTriangulationQuery(Query):
    """Summarise a parsed triangulation: edge classes, cusps, ordering."""
    triangulation: Triangulation


@dataclass
class ComplexVolumeQuery(Query):
    """Compute Vol + i CS, optionally for the conjugate or reversed representation."""
    triangulation: Triangulation
    shapes: Optional[Sequence[complex]] = None
    use_field: bool = False
    root: Optional[complex] = None
    bases: Optional[Dict[int, Base]] = None
    unit_edge: Optional[int] = None
    conjugate: bool = False
    reverse_orientation: bool = False


@dataclass
class InvariantSuiteQuery(Query):
    """Run the invariant suite."""
    triangulation: Triangulation
    shapes: Optional[Sequence[complex]] = None
    use_field: bool = False
    five_term_samples: int = 50
    rng_seed: int = 0


@dataclass
class FiveTermQuery(Query):
    """Property test of the lifted five-term relation."""
    samples: int = 500
    rng_seed: int = 0
