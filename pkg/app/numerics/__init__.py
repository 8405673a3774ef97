"""Numerics module initialization."""
