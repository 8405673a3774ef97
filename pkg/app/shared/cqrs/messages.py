"""Base message types dispatched through the mediator.

Commands produce new numerical state (solved shapes, developed cusps);
queries evaluate something from a triangulation without storing it.
"""
from abc import ABC
from dataclasses import dataclass


@dataclass
class Command(ABC):
    """Base command."""


@dataclass
class Query(ABC):
    """Base query."""
