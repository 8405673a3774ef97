"""Mapping of exceptions onto the response envelope."""
from typing import Callable

from fastapi import HTTPException, Request, Response, status
from fastapi.responses import JSONResponse
from loguru import logger

from app.shared.errors import CvolError
from app.shared.response import create_error_response


def cvol_error_response(exc: CvolError) -> JSONResponse:
    """Map a domain error to a 422 envelope carrying its code, location and residual."""
    error_response = create_error_response(
        error_message=exc.message,
        error_code=exc.error_code,
        location=exc.location,
        residual=exc.residual
    )
    return JSONResponse(
        status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
        content=error_response.model_dump()
    )


async def error_handler_middleware(request: Request, call_next: Callable) -> Response:
    """
    Turn escaped exceptions into envelopes.

    HTTPException is left to FastAPI. Domain errors become 422 responses with
    their error code; anything else is logged with its traceback and answered
    with a generic 500.
    """
    try:
        return await call_next(request)
    except HTTPException:
        raise
    except CvolError as e:
        logger.warning(f"{request.url.path}: {e}", error_code=e.error_code)
        return cvol_error_response(e)
    except Exception:
        logger.opt(exception=True).error(f"Unhandled exception on {request.method} {request.url.path}")
        return JSONResponse(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            content=create_error_response(
                error_message="An internal server error occurred",
                error_code="INTERNAL_SERVER_ERROR"
            ).model_dump()
        )
