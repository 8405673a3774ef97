"""Request logging middleware."""
import time
from typing import Callable

from fastapi import Request, Response
from loguru import logger

from app.shared.context import correlation_scope
from app.shared.observability.tracing import get_current_trace_id

CORRELATION_HEADER = "X-Correlation-ID"


async def logging_middleware(request: Request, call_next: Callable) -> Response:
    """
    Log each request with its correlation ID and duration.

    The incoming X-Correlation-ID is reused when present and echoed on the
    response; computations can run for seconds, so durations are logged in ms.
    """
    with correlation_scope(request.headers.get(CORRELATION_HEADER)) as correlation_id:
        start = time.perf_counter()
        logger.info(f"{request.method} {request.url.path}", client_ip=request.client.host if request.client else None)

        response = await call_next(request)

        logger.info(
            f"{request.method} {request.url.path} -> {response.status_code}",
            duration_ms=round((time.perf_counter() - start) * 1000, 2),
            trace_id=get_current_trace_id()
        )

    response.headers[CORRELATION_HEADER] = correlation_id
    return response
