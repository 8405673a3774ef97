"""Solver domain models."""
import cmath
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from app.numerics.domain.logarithm import principal_log
from app.shared.errors import DegenerateSolutionError

Exponents = Tuple[int, int, int]


@dataclass(frozen=True)
class GluingEquation:
    """
    Product over tetrahedra of z^a z'^b z''^c, required to equal 1.

    Using z z' z'' = -1 the product is rewritten as z^A z'^B = target with
    A = a - c, B = b - c and target = (-1)^(sum of c).
    """
    kind: str
    label: str
    exponents: Tuple[Exponents, ...]

    @property
    def reduced(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return (
            tuple(a - c for a, _, c in self.exponents),
            tuple(b - c for _, b, c in self.exponents),
        )

    @property
    def target(self) -> int:
        return -1 if sum(c for _, _, c in self.exponents) % 2 else 1

    @property
    def degree(self) -> int:
        return sum(a + b + c for a, b, c in self.exponents)

    def product(self, shapes: Sequence[complex]) -> complex:
        """Multiplicative value of the left-hand side."""
        value = 1 + 0j
        for z, (a, b, c) in zip(shapes, self.exponents):
            value *= z ** a * (1 / (1 - z)) ** b * (1 - 1 / z) ** c
        return value

    def log_residual(self, shapes: Sequence[complex]) -> complex:
        """Sum of A Log z + B Log z' minus Log(target), wrapped into (-pi i, pi i]."""
        big_a, big_b = self.reduced
        value = sum(
            (a * principal_log(z) - b * principal_log(1 - z) for z, a, b in zip(shapes, big_a, big_b)),
            0j
        )
        if self.target == -1:
            value -= 1j * math.pi
        turns = round(value.imag / (2 * math.pi))
        return value - 2j * math.pi * turns

    def gradient(self, shapes: Sequence[complex]) -> np.ndarray:
        big_a, big_b = self.reduced
        return np.array(
            [a / z + b / (1 - z) for z, a, b in zip(shapes, big_a, big_b)],
            dtype=complex
        )


@dataclass(frozen=True)
class ShapeAssignment:
    """Cross-ratios per tetrahedron together with their equation residuals."""
    shapes: Tuple[complex, ...]
    residuals: Tuple[float, ...] = ()
    iterations: int = 0
    source: str = "newton"

    def __post_init__(self) -> None:
        for tet, z in enumerate(self.shapes):
            if not cmath.isfinite(z) or z == 0 or z == 1:
                raise DegenerateSolutionError(f"Degenerate shape {z}", location=f"tetrahedron {tet}")

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)

    def conjugate(self) -> "ShapeAssignment":
        return ShapeAssignment(
            shapes=tuple(z.conjugate() for z in self.shapes),
            residuals=self.residuals,
            iterations=self.iterations,
            source=f"{self.source}, conjugated",
        )
