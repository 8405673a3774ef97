"""Triangulation repository for file and fixture access."""
from pathlib import Path
from typing import List, Optional

from loguru import logger

from app.shared.errors import MissingDataError
from app.triangulation.domain.models import Triangulation
from app.triangulation.parser import parse

FIXTURES_DIR = Path(__file__).parent / "fixtures"


class TriangulationRepository:
    """Repository for triangulation files and bundled fixtures."""

    def __init__(self, fixtures_dir: Optional[Path] = None) -> None:
        """Initialize repository."""
        self.fixtures_dir = fixtures_dir or FIXTURES_DIR

    def list_fixtures(self) -> List[str]:
        """Names of the bundled triangulations."""
        return sorted(path.stem for path in self.fixtures_dir.glob("*.json"))

    def resolve(self, name_or_path: str) -> Path:
        """
        Resolve a file path or a bundled fixture name.

        Raises:
            MissingDataError: If neither a file nor a fixture matches
        """
        path = Path(name_or_path)
        if path.is_file():
            return path
        fixture = self.fixtures_dir / f"{name_or_path}.json"
        if fixture.is_file():
            return fixture
        raise MissingDataError(
            f"No triangulation file or fixture named {name_or_path!r}",
            location=str(path)
        )

    def get(self, name_or_path: str) -> Triangulation:
        """Load and validate a triangulation."""
        path = self.resolve(name_or_path)
        logger.debug(f"Loading triangulation from {path}")
        return parse(path.read_text(encoding="utf-8"))
