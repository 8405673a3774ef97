"""Triangulation module initialization."""
