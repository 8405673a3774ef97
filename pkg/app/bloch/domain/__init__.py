"""Bloch domain module initialization."""
