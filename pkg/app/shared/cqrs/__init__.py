"""CQRS message types and the mediator."""
from app.shared.cqrs.mediator import Mediator, mediator
from app.shared.cqrs.messages import Command, Query

__all__ = ["Command", "Query", "Mediator", "mediator"]
