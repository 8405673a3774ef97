"""Shared infrastructure: errors, logging, tracing, CQRS and the HTTP envelope."""
