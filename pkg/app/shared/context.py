"""Correlation ID shared by log records, response metadata and CLI runs."""
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator, Optional
from uuid import uuid4

from loguru import logger

correlation_id_context: ContextVar[Optional[str]] = ContextVar("correlation_id", default=None)


def get_correlation_id() -> Optional[str]:
    return correlation_id_context.get()


@contextmanager
def correlation_scope(correlation_id: Optional[str] = None) -> Iterator[str]:
    """
    Bind a correlation ID for the duration of one request or console run.

    A fresh uuid4 is used when none is given. The ID is attached to every
    loguru record emitted inside the scope and cleared on exit.
    """
    correlation_id = correlation_id or str(uuid4())
    token = correlation_id_context.set(correlation_id)
    try:
        with logger.contextualize(correlation_id=correlation_id):
            yield correlation_id
    finally:
        correlation_id_context.reset(token)
