"""Distributed tracing configuration using OpenTelemetry."""
from contextlib import contextmanager
from typing import Iterator, Optional

from loguru import logger
from opentelemetry import trace
from opentelemetry.propagate import set_global_textmap
from opentelemetry.sdk.resources import DEPLOYMENT_ENVIRONMENT, SERVICE_NAME, SERVICE_VERSION, Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor, ConsoleSpanExporter
from opentelemetry.trace.propagation.tracecontext import TraceContextTextMapPropagator

from app import __version__

# Global tracer instance
_tracer: Optional[trace.Tracer] = None


def setup_tracing(
    service_name: str = "cvol",
    service_version: str = __version__,
    environment: str = "development",
    otlp_endpoint: Optional[str] = None
) -> trace.Tracer:
    """
    Setup OpenTelemetry distributed tracing.

    Args:
        service_name: Name of the service for tracing
        service_version: Version of the service
        environment: Deployment environment (development, staging, production)
        otlp_endpoint: OTLP exporter endpoint (optional, defaults to console exporter)

    Returns:
        Configured tracer instance
    """
    global _tracer

    resource = Resource.create({
        SERVICE_NAME: service_name,
        SERVICE_VERSION: service_version,
        DEPLOYMENT_ENVIRONMENT: environment,
    })
    provider = TracerProvider(resource=resource)

    if otlp_endpoint:
        try:
            from opentelemetry.exporter.otlp.proto.grpc.trace_exporter import OTLPSpanExporter
            exporter = OTLPSpanExporter(endpoint=otlp_endpoint)
            logger.info(f"OpenTelemetry configured with OTLP exporter: {otlp_endpoint}")
        except ImportError:
            logger.warning("OTLP exporter not available, falling back to console exporter")
            exporter = ConsoleSpanExporter()
    else:
        exporter = ConsoleSpanExporter()
        logger.info("OpenTelemetry configured with console exporter")

    provider.add_span_processor(BatchSpanProcessor(exporter))
    trace.set_tracer_provider(provider)
    set_global_textmap(TraceContextTextMapPropagator())
    _tracer = trace.get_tracer(service_name, service_version)

    logger.info(
        "OpenTelemetry tracing initialized",
        service_name=service_name,
        service_version=service_version,
        environment=environment
    )
    return _tracer


def instrument_fastapi(app) -> None:
    """
    Instrument FastAPI application with OpenTelemetry.

    Args:
        app: FastAPI application instance
    """
    from opentelemetry.instrumentation.fastapi import FastAPIInstrumentor

    FastAPIInstrumentor.instrument_app(
        app,
        excluded_urls="/health,/docs,/openapi.json,/redoc"
    )
    logger.info("FastAPI instrumented with OpenTelemetry")


def get_tracer() -> trace.Tracer:
    """
    Get the configured tracer, or the API's no-op tracer when tracing is off.
    """
    if _tracer is None:
        return trace.get_tracer("cvol")
    return _tracer


@contextmanager
def pipeline_span(name: str, **attributes) -> Iterator[trace.Span]:
    """
    Wrap a pipeline stage in a span.

    Args:
        name: Span name, e.g. ``cvol.develop``
        **attributes: Span attributes; None values are dropped

    Yields:
        The active span
    """
    with get_tracer().start_as_current_span(name) as span:
        for key, value in attributes.items():
            if value is not None:
                span.set_attribute(key, value if isinstance(value, (int, float, str, bool)) else str(value))
        yield span


def get_current_trace_id() -> Optional[str]:
    """
    Get the current trace ID if available.

    Returns:
        Trace ID as hex string or None
    """
    current_span = trace.get_current_span()
    if current_span and current_span.is_recording():
        return format(current_span.get_span_context().trace_id, '032x')
    return None
