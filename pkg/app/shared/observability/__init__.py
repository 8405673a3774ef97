"""Observability module for distributed tracing."""
from app.shared.observability.tracing import get_tracer, pipeline_span, setup_tracing

__all__ = ["setup_tracing", "get_tracer", "pipeline_span"]
