"""HTTP middleware: request logging and domain error mapping."""
