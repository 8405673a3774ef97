"""Dilogarithms and cross-ratios on the principal branch.

Li2 is evaluated with mpmath's polylog; on the cut (real z > 1) it returns
Re - i*pi*ln z, which is the value of -int_0^z Log(1-t)/t dt when Log(1-t)
takes imaginary part +pi on the negative axis.
"""
import cmath
import math
from typing import Tuple, Union

import mpmath

from app.config import settings
from app.numerics.domain.logarithm import PI_I, PI_SQUARED, principal_log
from app.numerics.domain.models import ExtComplex, Flattening
from app.shared.errors import DegenerateSimplexError, NumericsDomainError

Point = Union[ExtComplex, complex, float, int, None]


def _finite(z: complex) -> complex:
    value = complex(z)
    if not cmath.isfinite(value):
        raise NumericsDomainError(f"Expected a finite complex number, got {value}")
    return value


def dilog(z: complex) -> complex:
    """Principal-branch dilogarithm Li2(z)."""
    value = _finite(z)
    with mpmath.workdps(settings.dilog_precision):
        result = mpmath.polylog(2, mpmath.mpc(value.real, value.imag))
    return complex(result)


def rogers_L(z: complex) -> complex:
    """
    Rogers dilogarithm L(z) = Li2(z) + Log(z) Log(1-z) / 2.

    Raises:
        NumericsDomainError: If z is 0, 1 or not finite
    """
    value = _finite(z)
    if value == 0 or value == 1:
        raise NumericsDomainError(f"Rogers dilogarithm is undefined at {value}")
    return dilog(value) + 0.5 * principal_log(value) * principal_log(1 - value)


def lhat(flattening: Flattening) -> complex:
    """
    Extended Rogers dilogarithm of a flattening.

    Returns L(z) + (pi i / 2)(q Log z + p Log(1-z)) - pi^2/6. The value is only
    meaningful modulo pi^2; callers reduce it.
    """
    z = flattening.z
    return (
        rogers_L(z)
        + 0.5 * PI_I * (flattening.q * principal_log(z) + flattening.p * principal_log(1 - z))
        - PI_SQUARED / 6
    )


def bloch_wigner(z: complex) -> float:
    """Bloch-Wigner dilogarithm D(z), the volume of the ideal simplex of shape z."""
    value = _finite(z)
    if value == 0 or value == 1:
        return 0.0
    return dilog(value).imag + principal_log(1 - value).imag * math.log(abs(value))


def cross_ratio(z0: Point, z1: Point, z2: Point, z3: Point) -> complex:
    """
    Cross-ratio (z0-z3)(z1-z2) / ((z0-z2)(z1-z3)) on C u {infinity}.

    An infinite point appears in exactly one numerator and one denominator
    factor; both are dropped.

    Raises:
        DegenerateSimplexError: If two points coincide
    """
    points = [ExtComplex.of(point) for point in (z0, z1, z2, z3)]
    for i in range(4):
        for j in range(i + 1, 4):
            if points[i] == points[j]:
                raise DegenerateSimplexError(
                    f"Points {i} and {j} coincide at {points[i]}"
                )

    def factor(i: int, j: int) -> complex:
        if points[i].is_infinite or points[j].is_infinite:
            return 1.0
        return points[i].value - points[j].value

    return factor(0, 3) * factor(1, 2) / (factor(0, 2) * factor(1, 3))


def cross_ratio_parameters(z: complex) -> Tuple[complex, complex, complex]:
    """Return (z, 1/(1-z), 1-1/z)."""
    value = _finite(z)
    if value == 0 or value == 1:
        raise NumericsDomainError(f"Cross-ratio parameters are undefined at {value}")
    return value, 1 / (1 - value), 1 - 1 / value
