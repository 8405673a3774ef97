"""Mediator dispatching commands and queries to their handlers."""
import time
from typing import Any, Callable, Dict, Type, TypeVar

from loguru import logger

from app.shared.cqrs.messages import Command, Query
from app.shared.observability.tracing import pipeline_span

TCommand = TypeVar("TCommand", bound=Command)
TQuery = TypeVar("TQuery", bound=Query)


class Mediator:
    """
    Synchronous mediator shared by the CLI and the HTTP routers.

    Handlers are plain callables; the computations are CPU-bound, so nothing
    here is awaited.
    """

    def __init__(self) -> None:
        self._command_handlers: Dict[Type[Command], Callable] = {}
        self._query_handlers: Dict[Type[Query], Callable] = {}

    def register_command_handler(
        self,
        command_type: Type[TCommand],
        handler: Callable[[TCommand], Any]
    ) -> None:
        self._command_handlers[command_type] = handler
        logger.debug(f"Registered command handler for {command_type.__name__}")

    def register_query_handler(
        self,
        query_type: Type[TQuery],
        handler: Callable[[TQuery], Any]
    ) -> None:
        self._query_handlers[query_type] = handler
        logger.debug(f"Registered query handler for {query_type.__name__}")

    def send(self, command: TCommand) -> Any:
        """
        Send command to handler.

        Raises:
            ValueError: If no handler registered
        """
        return self._dispatch("command", self._command_handlers, command)

    def query(self, query: TQuery) -> Any:
        """
        Send query to handler.

        Raises:
            ValueError: If no handler registered
        """
        return self._dispatch("query", self._query_handlers, query)

    def _dispatch(self, kind: str, handlers: Dict[Type, Callable], message: Any) -> Any:
        name = type(message).__name__
        handler = handlers.get(type(message))
        if not handler:
            raise ValueError(f"No handler registered for {kind} {name}")

        start = time.perf_counter()
        with pipeline_span(f"mediator.{name}", kind=kind):
            result = handler(message)
        logger.info(f"{kind.capitalize()} {name} completed", duration_ms=round((time.perf_counter() - start) * 1000, 2))
        return result


mediator = Mediator()
