"""Main FastAPI application."""
from contextlib import asynccontextmanager
from datetime import datetime, timezone

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from loguru import logger

from app import __version__
from app.config import settings
from app.cvol.router import router as cvol_router
from app.shared.errors import CvolError
from app.shared.logging import configure_logging
from app.shared.middleware.error_handler import cvol_error_response, error_handler_middleware
from app.shared.middleware.logging import logging_middleware
from app.shared.observability.tracing import get_current_trace_id, instrument_fastapi, setup_tracing
from app.shared.response import create_success_response


configure_logging()


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Application lifespan manager."""
    logger.info("Starting application...")

    if settings.otel_enabled:
        setup_tracing(
            service_name=settings.otel_service_name,
            service_version=__version__,
            environment=settings.environment,
            otlp_endpoint=settings.otlp_endpoint
        )

    logger.info("Application started successfully")

    yield

    logger.info("Application shut down successfully")


app = FastAPI(
    title="cvol",
    description="Complex volumes of boundary-parabolic representations from ordered ideal triangulations",
    version=__version__,
    lifespan=lifespan
)

if settings.otel_enabled:
    instrument_fastapi(app)


@app.exception_handler(CvolError)
async def cvol_error_handler(request: Request, exc: CvolError) -> JSONResponse:
    """Domain errors become 422 responses with their stable code."""
    logger.warning(f"Domain error: {exc}", path=request.url.path, error_code=exc.error_code)
    return cvol_error_response(exc)


# Middleware order: ErrorHandler -> Logging
@app.middleware("http")
async def error_handler(request: Request, call_next):
    """Global error handler."""
    return await error_handler_middleware(request, call_next)


@app.middleware("http")
async def request_logging(request: Request, call_next):
    """Request logging."""
    return await logging_middleware(request, call_next)


app.include_router(cvol_router)


@app.get("/health")
async def health_check():
    """Health check endpoint."""
    response = create_success_response({
        "status": "healthy",
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "version": __version__,
        "environment": settings.environment,
        "trace_id": get_current_trace_id()
    })
    return JSONResponse(content=response.model_dump())


@app.get("/live")
async def liveness_check():
    """Liveness probe."""
    response = create_success_response({
        "status": "alive",
        "timestamp": datetime.now(timezone.utc).isoformat()
    })
    return JSONResponse(content=response.model_dump())


@app.get("/")
async def root():
    """Root endpoint."""
    response = create_success_response({
        "message": "cvol API",
        "version": __version__,
        "docs": "/docs",
        "health": "/health"
    })
    return JSONResponse(content=response.model_dump())
