"""Solver domain module initialization."""
