"""Numerics domain models: extended complex points and flattenings."""
import cmath
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from app.config import settings
from app.numerics.domain.logarithm import PI_I, principal_log
from app.shared.errors import FlatteningIntegralityError, NumericsDomainError


@dataclass(frozen=True)
class ExtComplex:
    """A point of C u {infinity}; ``value`` is None exactly for infinity."""

    value: Optional[complex] = None

    def __post_init__(self) -> None:
        if self.value is None:
            return
        finite = complex(self.value)
        if not cmath.isfinite(finite):
            raise NumericsDomainError(
                f"Non-finite coordinate {finite}; use ExtComplex.infinity()"
            )
        object.__setattr__(self, "value", finite)

    @classmethod
    def infinity(cls) -> "ExtComplex":
        return cls(None)

    @classmethod
    def of(cls, point: Union["ExtComplex", complex, float, int, None]) -> "ExtComplex":
        """Coerce a number (or None for infinity) into an ExtComplex."""
        if isinstance(point, ExtComplex):
            return point
        return cls(None if point is None else complex(point))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __complex__(self) -> complex:
        if self.value is None:
            raise NumericsDomainError("Infinity has no finite coordinate")
        return self.value

    def __str__(self) -> str:
        return "inf" if self.value is None else f"{self.value:.10g}"


INFINITY = ExtComplex.infinity()


def _check_shape(z: complex) -> complex:
    shape = complex(z)
    if not cmath.isfinite(shape) or shape == 0 or shape == 1:
        raise NumericsDomainError(f"Degenerate cross-ratio {shape}")
    return shape


@dataclass(frozen=True)
class Flattening:
    """
    A flattened ideal simplex [z; p, q].

    The log-parameters satisfy w0 = Log z + p*pi*i, w1 = -Log(1-z) + q*pi*i and
    w2 = -w0 - w1, where Log is the principal branch.
    """

    w0: complex
    w1: complex
    w2: complex
    z: complex
    p: int
    q: int

    def __post_init__(self) -> None:
        z = _check_shape(self.z)
        object.__setattr__(self, "z", z)
        tolerance = settings.integrality_tolerance
        if abs(self.w0 + self.w1 + self.w2) > tolerance * (1 + abs(self.w0) + abs(self.w1)):
            raise NumericsDomainError("Log-parameters do not sum to zero")
        if abs(self.w0 - (principal_log(z) + self.p * PI_I)) > tolerance * (1 + abs(self.w0)):
            raise FlatteningIntegralityError(f"w0 does not match [z;p,q] for {self}")
        if abs(self.w1 - (-principal_log(1 - z) + self.q * PI_I)) > tolerance * (1 + abs(self.w1)):
            raise FlatteningIntegralityError(f"w1 does not match [z;p,q] for {self}")

    @classmethod
    def from_zpq(cls, z: complex, p: int, q: int) -> "Flattening":
        """Build [z; p, q] from the cross-ratio and the two integers."""
        z = _check_shape(z)
        w0 = principal_log(z) + p * PI_I
        w1 = -principal_log(1 - z) + q * PI_I
        return cls(w0=w0, w1=w1, w2=-(w0 + w1), z=z, p=int(p), q=int(q))

    @classmethod
    def from_log_parameters(cls, w0: complex, w1: complex, z: complex) -> "Flattening":
        """
        Build a flattening from log-parameters, recovering p and q.

        Args:
            w0: Log-parameter of the edges 01 and 23
            w1: Log-parameter of the edges 12 and 03
            z: Cross-ratio of the simplex

        Returns:
            Flattening with the given w0, w1 and w2 = -w0 - w1

        Raises:
            FlatteningIntegralityError: If p or q is not an integer
        """
        z = _check_shape(z)
        raw_p = (w0 - principal_log(z)) / PI_I
        raw_q = (w1 + principal_log(1 - z)) / PI_I
        p, q = round(raw_p.real), round(raw_q.real)
        defect = max(abs(raw_p - p), abs(raw_q - q))
        if defect > settings.integrality_tolerance:
            raise FlatteningIntegralityError(
                f"Log-parameters of z={z:.10g} give non-integral p={raw_p:.8g}, q={raw_q:.8g}",
                residual=defect
            )
        return cls(w0=complex(w0), w1=complex(w1), w2=-(complex(w0) + complex(w1)), z=z, p=p, q=q)

    @property
    def log_parameters(self) -> Tuple[complex, complex, complex]:
        return self.w0, self.w1, self.w2

    @property
    def cross_ratio_parameters(self) -> Tuple[complex, complex, complex]:
        return self.z, 1 / (1 - self.z), 1 - 1 / self.z

    @property
    def sign_pattern(self) -> Tuple[int, int, int]:
        """Signs s with exp(w_k) = s_k times the k-th cross-ratio parameter."""
        s0 = -1 if self.p % 2 else 1
        s1 = -1 if self.q % 2 else 1
        return s0, s1, -s0 * s1

    def same_class(self, other: "Flattening", tolerance: Optional[float] = None) -> bool:
        """Whether both describe the same generator [z; p, q]."""
        tolerance = settings.assertion_tolerance if tolerance is None else tolerance
        return (
            self.p == other.p
            and self.q == other.q
            and abs(self.z - other.z) <= tolerance * max(1.0, abs(self.z))
        )

    def __str__(self) -> str:
        sign = "+" if self.z.imag >= 0 else "-"
        return f"[{self.z.real:.4f}{sign}{abs(self.z.imag):.4f}i;{self.p},{self.q}]"


def sign_pattern_residual(flattening: Flattening) -> float:
    """Largest deviation of exp(w_k) from +-(k-th cross-ratio parameter)."""
    residual = 0.0
    for w, parameter, sign in zip(
        flattening.log_parameters,
        flattening.cross_ratio_parameters,
        flattening.sign_pattern
    ):
        residual = max(residual, abs(cmath.exp(w) - sign * parameter) / max(1.0, abs(parameter)))
    return residual
