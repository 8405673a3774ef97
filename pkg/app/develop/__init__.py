"""Cusp development module initialization."""
