"""Fixed logarithm branch and reductions modulo pi^2."""
import cmath
import math

from app.shared.errors import NumericsDomainError

PI_I = 1j * math.pi
PI_SQUARED = math.pi ** 2


def principal_log(z: complex) -> complex:
    """
    Principal logarithm with imaginary part in (-pi, pi].

    cmath returns -pi on the negative real axis when the imaginary part is a
    negative zero; that case is moved to +pi so the branch does not depend on
    the sign of zero.

    Raises:
        NumericsDomainError: If z is zero or not finite
    """
    value = complex(z)
    if value == 0 or not cmath.isfinite(value):
        raise NumericsDomainError(f"Log is undefined at {value}")
    result = cmath.log(value)
    if result.imag <= -math.pi:
        result = complex(result.real, result.imag + 2 * math.pi)
    return result


def reduce_mod_pi2(value: complex) -> complex:
    """Reduce the real part of value to [0, pi^2)."""
    real = complex(value).real % PI_SQUARED
    if real >= PI_SQUARED:
        real = 0.0
    return complex(real, complex(value).imag)


def centered_mod_pi2(value: float) -> float:
    """Representative of value mod pi^2 in (-pi^2/2, pi^2/2]."""
    reduced = value % PI_SQUARED
    if reduced > PI_SQUARED / 2:
        reduced -= PI_SQUARED
    return reduced


def distance_mod_pi2(a: complex, b: complex) -> float:
    """Distance between a and b in C / pi^2 Z (real direction)."""
    difference = complex(a) - complex(b)
    real = difference.real % PI_SQUARED
    real = min(real, PI_SQUARED - real)
    return math.hypot(real, difference.imag)
