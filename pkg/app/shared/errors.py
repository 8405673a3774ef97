"""Error hierarchy shared by every context.

Each error carries a stable ``error_code`` that the CLI prints and the HTTP
surface returns inside the standard error envelope.
"""
from typing import Optional


class CvolError(Exception):
    """Base class for all domain errors."""

    error_code = "CVOL_ERROR"

    def __init__(
        self,
        message: str,
        location: Optional[str] = None,
        residual: Optional[float] = None
    ) -> None:
        super().__init__(message)
        self.message = message
        self.location = location
        self.residual = residual

    def __str__(self) -> str:
        text = self.message
        if self.location:
            text = f"{text} (at {self.location})"
        if self.residual is not None:
            text = f"{text} [residual {self.residual:.3e}]"
        return text


# Numerics

class NumericsDomainError(CvolError):
    """Argument outside the domain of Log, L or the cross-ratio parameters."""
    error_code = "NUMERICS_DOMAIN"


class DegenerateSimplexError(CvolError):
    """Coincident ideal points."""
    error_code = "DEGENERATE_SIMPLEX"


class InconsistentInputError(CvolError):
    """Flattenings do not match the points they claim to come from."""
    error_code = "INCONSISTENT_INPUT"


class FlatteningIntegralityError(CvolError):
    """Recovered p or q is not an integer."""
    error_code = "FLATTENING_NOT_INTEGRAL"


# Triangulation

class TriangulationParseError(CvolError):
    """Malformed triangulation file."""
    error_code = "TRIANGULATION_PARSE"


class PermutationError(TriangulationParseError):
    """Gluing permutation is not a permutation of 0..3 or targets a bad face."""
    error_code = "BAD_PERMUTATION"


class NonInvolutiveGluingError(TriangulationParseError):
    """Reverse gluing does not undo the forward gluing."""
    error_code = "NON_INVOLUTIVE_GLUING"


class OrderingError(TriangulationParseError):
    """Face pairings do not respect the vertex orderings."""
    error_code = "ORDERING_VIOLATION"


class OrientationError(TriangulationParseError):
    """Orientation signs disagree with the face pairings."""
    error_code = "ORIENTATION_INCONSISTENT"


class TrivialEndError(TriangulationParseError):
    """A vertex link is a sphere (interior vertex or trivial end)."""
    error_code = "TRIVIAL_END"


class MissingDataError(CvolError):
    """Requested data (shapes, field, fixture) is absent."""
    error_code = "MISSING_DATA"


# Solver

class SolverConvergenceError(CvolError):
    """Newton iteration did not converge."""
    error_code = "SOLVER_NO_CONVERGENCE"


class DegenerateSolutionError(CvolError):
    """Solution has a shape at 0, 1 or infinity."""
    error_code = "DEGENERATE_SOLUTION"


class AmbiguousRootError(CvolError):
    """Root approximation does not single out one root."""
    error_code = "AMBIGUOUS_ROOT"


class FieldInconsistencyError(CvolError):
    """Shapes evaluated from a number field fail the gluing equations."""
    error_code = "FIELD_INCONSISTENT"


class GluingResidualError(CvolError):
    """Shapes do not satisfy the gluing equations."""
    error_code = "GLUING_RESIDUAL"


# Development

class NonParabolicHolonomyError(CvolError):
    """Developed cusp does not close up by translations."""
    error_code = "NON_PARABOLIC_HOLONOMY"


class CocycleInconsistencyError(CvolError):
    """Corner products of one edge class disagree."""
    error_code = "COCYCLE_INCONSISTENT"


class SameCosetError(CvolError):
    """Two decorating matrices lie in the same B-coset."""
    error_code = "SAME_COSET"


class InvariantViolationError(CvolError):
    """A pipeline invariant residual exceeded its tolerance."""
    error_code = "INVARIANT_VIOLATION"
