"""Complex volumes of boundary-parabolic representations from ordered ideal triangulations."""

__version__ = "1.0.0"
