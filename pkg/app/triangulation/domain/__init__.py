"""Triangulation domain module initialization."""
