"""Maps out of the extended pre-Bloch group and relation checkers."""
from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple

from loguru import logger

from app.bloch.domain.models import PreBlochElement, WedgeElement
from app.config import settings
from app.numerics.domain.functions import cross_ratio, lhat
from app.numerics.domain.logarithm import reduce_mod_pi2
from app.numerics.domain.models import ExtComplex, Flattening
from app.numerics.domain.simplex import parameter_index
from app.shared.errors import InconsistentInputError


@dataclass
class FlatteningConditionResult:
    """Outcome of the ten-equation flattening condition."""
    holds: bool
    residuals: Dict[str, complex] = field(default_factory=dict)

    @property
    def max_residual(self) -> float:
        return max((abs(r) for r in self.residuals.values()), default=0.0)


def nu_hat(element: PreBlochElement) -> WedgeElement:
    """Send each generator (w0, w1, w2) to w0 ^ w1."""
    return WedgeElement.from_terms(
        (coefficient, (flattening.w0, flattening.w1)) for coefficient, flattening in element
    )


def lhat_sum(element: PreBlochElement) -> complex:
    """Sum of coefficient * L-hat with real part reduced to [0, pi^2)."""
    total = sum((coefficient * lhat(flattening) for coefficient, flattening in element), 0j)
    return reduce_mod_pi2(total)


def check_flattening_condition(
    flattenings: Sequence[Flattening],
    points: Sequence[ExtComplex]
) -> FlatteningConditionResult:
    """
    Evaluate the ten signed log-parameter sums around the edges of a 4-simplex.

    Flattening i belongs to the face omitting point i and enters with sign
    (-1)^i. For an edge z_a z_b the sum runs over the three faces containing
    it, each contributing the log-parameter of the corresponding local edge.

    Args:
        flattenings: Five flattenings, indexed by the omitted point
        points: Five pairwise distinct points

    Returns:
        FlatteningConditionResult with residuals keyed ``z{a}z{b}``

    Raises:
        InconsistentInputError: If a flattening's cross-ratio does not match its face
    """
    if len(flattenings) != 5 or len(points) != 5:
        raise InconsistentInputError("Flattening condition needs five flattenings and five points")

    tolerance = settings.invariant_tolerance
    for omitted, flattening in enumerate(flattenings):
        face = [points[k] for k in range(5) if k != omitted]
        expected = cross_ratio(*face)
        if abs(expected - flattening.z) > tolerance * max(1.0, abs(expected)):
            raise InconsistentInputError(
                f"Flattening {omitted} has z={flattening.z:.10g}, face cross-ratio is {expected:.10g}"
            )

    residuals: Dict[str, complex] = {}
    for a in range(5):
        for b in range(a + 1, 5):
            total = 0j
            for omitted in range(5):
                if omitted in (a, b):
                    continue
                local = [k for k in range(5) if k != omitted]
                w = flattenings[omitted].log_parameters[
                    parameter_index(local.index(a), local.index(b))
                ]
                total += w if omitted % 2 == 0 else -w
            residuals[f"z{a}z{b}"] = total

    result = FlatteningConditionResult(
        holds=all(abs(r) < tolerance for r in residuals.values()),
        residuals=residuals
    )
    if not result.holds:
        logger.debug(f"Flattening condition fails, max residual {result.max_residual:.3e}")
    return result


def lhat_coefficients(p: int, q: int) -> Tuple[int, int, int, int]:
    """
    Exact coefficients of L-hat([z;p,q]).

    Basis: L(z), (pi i/2) Log z, (pi i/2) Log(1-z), pi^2/6.
    """
    return 1, q, p, -1


def check_transfer(z: complex, p: int, q: int, p_other: int, q_other: int) -> bool:
    """
    Check the transfer relation [z;p,q] + [z;p',q'] = [z;p,q'] + [z;p',q] under L-hat.

    Both sides are compared as exact coefficient vectors; the numeric
    difference is logged when it exceeds the invariant tolerance.
    """
    left = [a + b for a, b in zip(lhat_coefficients(p, q), lhat_coefficients(p_other, q_other))]
    right = [a + b for a, b in zip(lhat_coefficients(p, q_other), lhat_coefficients(p_other, q))]
    if left != right:
        return False

    numeric = (
        lhat(Flattening.from_zpq(z, p, q)) + lhat(Flattening.from_zpq(z, p_other, q_other))
        - lhat(Flattening.from_zpq(z, p, q_other)) - lhat(Flattening.from_zpq(z, p_other, q))
    )
    if abs(numeric) > settings.invariant_tolerance:
        logger.warning(f"Transfer relation numeric residual {abs(numeric):.3e} at z={z}")
    return True
