"""Complex volume commands."""
from dataclasses import dataclass
from typing import Dict, Optional, Sequence

from app.develop.domain.models import Base
from app.shared.cqrs.messages import Command
from app.triangulation.domain.models import Triangulation


@dataclass
class SolveShapesCommand(Command):
    """Solve the gluing equations, or evaluate the shape field."""
    triangulation: Triangulation
    seed: Optional[Sequence[complex]] = None
    use_field: bool = False
    root: Optional[complex] = None


@dataclass
class DevelopCuspsCommand(Command):
    """Develop every cusp from solved shapes."""
    triangulation: Triangulation
    shapes: Optional[Sequence[complex]] = None
    bases: Optional[Dict[int, Base]] = None
    unit_edge: Optional[int] = None
