"""Complex volume results and invariant reports."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from app.bloch.domain.models import PreBlochElement
from app.develop.domain.models import Decoration, EdgeLogC
from app.numerics.domain.logarithm import PI_SQUARED, centered_mod_pi2
from app.numerics.domain.models import Flattening
from app.solver.domain.models import ShapeAssignment
from app.triangulation.domain.models import Triangulation


@dataclass(frozen=True)
class ComplexVolume:
    """
    Vol + i CS of a representation.

    ``raw`` is the L-hat sum, equal to i(Vol + i CS) modulo pi^2, so
    vol = Im(raw) and cs = -Re(raw) taken in (-pi^2/2, pi^2/2].
    """
    vol: float
    cs: float
    raw: complex
    volume_check: Optional[float] = None

    @classmethod
    def from_raw(cls, raw: complex, volume_check: Optional[float] = None) -> "ComplexVolume":
        return cls(vol=raw.imag, cs=centered_mod_pi2(-raw.real), raw=raw, volume_check=volume_check)

    @property
    def cs_normalized(self) -> float:
        """cs / (2 pi^2) reduced to [0, 1/2)."""
        return (self.cs / (2 * PI_SQUARED)) % 0.5

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vol": self.vol,
            "cs_mod_pi2": self.cs,
            "cs_normalized": self.cs_normalized,
            "raw": [self.raw.real, self.raw.imag],
            "volume_check": self.volume_check,
        }


class CheckStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


@dataclass
class CheckResult:
    """One entry of the invariant report."""
    name: str
    status: CheckStatus
    residual: Optional[float] = None
    detail: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASSED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status.value,
            "residual": self.residual,
            "detail": self.detail,
        }


@dataclass
class InvariantReport:
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.status is not CheckStatus.FAILED for check in self.checks) and any(
            check.passed for check in self.checks
        )

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if check.status is CheckStatus.FAILED]

    def get(self, name: str) -> Optional[CheckResult]:
        return next((check for check in self.checks if check.name == name), None)

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "checks": [check.to_dict() for check in self.checks]}


@dataclass
class VolumeComputation:
    """Everything the pipeline produced for one set of shapes."""
    triangulation: Triangulation
    shapes: ShapeAssignment
    volume: ComplexVolume
    element: PreBlochElement
    flattenings: List[Flattening]
    decoration: Decoration
    edge_log_cs: List[EdgeLogC]
    unit_edge: Optional[int] = None
    residuals: Dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vol": self.volume.vol,
            "cs_mod_pi2": self.volume.cs,
            "cs_normalized": self.volume.cs_normalized,
            "flattenings": [
                {"z": [f.z.real, f.z.imag], "p": f.p, "q": f.q} for f in self.flattenings
            ],
            "residuals": dict(self.residuals),
        }
