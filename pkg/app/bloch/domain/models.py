"""Formal sums of flattened simplices and their wedge images."""
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

from app.config import settings
from app.numerics.domain.logarithm import PI_I
from app.numerics.domain.models import Flattening

WedgePair = Tuple[complex, complex]


@dataclass(frozen=True)
class PreBlochElement:
    """Integer combination of flattenings with merged duplicates and no zero terms."""

    terms: Tuple[Tuple[int, Flattening], ...] = ()

    def __post_init__(self) -> None:
        for coefficient, _ in self.terms:
            if coefficient == 0:
                raise ValueError("PreBlochElement terms must have nonzero coefficients")

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, Flattening]]) -> "PreBlochElement":
        merged: List[List] = []
        for coefficient, flattening in terms:
            for entry in merged:
                if entry[1].same_class(flattening):
                    entry[0] += coefficient
                    break
            else:
                merged.append([int(coefficient), flattening])
        return cls(tuple((c, f) for c, f in merged if c != 0))

    @classmethod
    def generator(cls, flattening: Flattening, coefficient: int = 1) -> "PreBlochElement":
        return cls.from_terms([(coefficient, flattening)])

    @property
    def flattenings(self) -> List[Flattening]:
        return [flattening for _, flattening in self.terms]

    @property
    def is_empty(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator[Tuple[int, Flattening]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "PreBlochElement") -> "PreBlochElement":
        return PreBlochElement.from_terms(self.terms + other.terms)

    def __neg__(self) -> "PreBlochElement":
        return PreBlochElement(tuple((-c, f) for c, f in self.terms))

    def __sub__(self, other: "PreBlochElement") -> "PreBlochElement":
        return self + (-other)

    def __mul__(self, factor: int) -> "PreBlochElement":
        return PreBlochElement.from_terms((factor * c, f) for c, f in self.terms)

    __rmul__ = __mul__


def _close(a: complex, b: complex) -> bool:
    return abs(a - b) <= settings.assertion_tolerance * max(1.0, abs(a), abs(b))


def _precedes(a: complex, b: complex) -> bool:
    """Lexicographic (Re, Im) order, treating nearly equal real parts as equal."""
    if not _close(complex(a.real), complex(b.real)):
        return a.real < b.real
    return a.imag < b.imag


@dataclass(frozen=True)
class WedgeElement:
    """Integer combination of wedges a ^ b in canonical form."""

    terms: Tuple[Tuple[int, WedgePair], ...] = ()

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, WedgePair]]) -> "WedgeElement":
        merged: List[List] = []
        for coefficient, (a, b) in terms:
            if coefficient == 0 or _close(a, b) or _close(a, 0) or _close(b, 0):
                continue
            if _precedes(b, a):
                a, b, coefficient = b, a, -coefficient
            for entry in merged:
                if _close(entry[1][0], a) and _close(entry[1][1], b):
                    entry[0] += coefficient
                    break
            else:
                merged.append([int(coefficient), (complex(a), complex(b))])
        return cls(tuple((c, pair) for c, pair in merged if c != 0))

    @property
    def is_empty(self) -> bool:
        return not self.terms

    def __add__(self, other: "WedgeElement") -> "WedgeElement":
        return WedgeElement.from_terms(self.terms + other.terms)

    def __neg__(self) -> "WedgeElement":
        return WedgeElement(tuple((-c, pair) for c, pair in self.terms))

    def reduced(self) -> "WedgeElement":
        """
        Expand every component as b + n*pi*i and use Z-bilinearity.

        The base b is normalised to Im b in (-pi/2, pi/2], so components that
        differ by integer multiples of pi*i share a base and their wedges cancel.
        """
        expanded: List[Tuple[int, WedgePair]] = []
        for coefficient, (a, b) in self.terms:
            base_a, shift_a = _split_pi_multiple(a)
            base_b, shift_b = _split_pi_multiple(b)
            expanded.append((coefficient, (base_a, base_b)))
            expanded.append((coefficient * shift_b, (base_a, PI_I)))
            expanded.append((coefficient * shift_a, (PI_I, base_b)))
        return WedgeElement.from_terms(expanded)

    def is_zero(self) -> bool:
        """Cancellation heuristic; not a decision procedure for the wedge square."""
        return self.reduced().is_empty


def _split_pi_multiple(value: complex) -> Tuple[complex, int]:
    shift = math.ceil((value.imag - math.pi / 2) / math.pi)
    return value - shift * PI_I, shift
