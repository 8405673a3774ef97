"""Numerics domain module initialization."""
