"""Solver module initialization."""
