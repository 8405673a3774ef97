"""Application configuration module."""
from typing import Optional
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Application
    environment: str = Field(default="development", alias="CVOL_ENVIRONMENT")
    log_level: str = Field(default="INFO", alias="CVOL_LOG_LEVEL")
    log_file: Optional[str] = Field(default=None, alias="CVOL_LOG_FILE")

    # Numerical tolerances
    assertion_tolerance: float = Field(default=1e-9, alias="CVOL_ASSERTION_TOLERANCE")
    solver_tolerance: float = Field(default=1e-12, alias="CVOL_SOLVER_TOLERANCE")
    integrality_tolerance: float = Field(default=1e-6, alias="CVOL_INTEGRALITY_TOLERANCE")
    revisit_tolerance: float = Field(default=1e-7, alias="CVOL_REVISIT_TOLERANCE")
    invariant_tolerance: float = Field(default=1e-8, alias="CVOL_INVARIANT_TOLERANCE")

    # Newton solver
    newton_max_iterations: int = Field(default=100, alias="CVOL_NEWTON_MAX_ITERATIONS")
    newton_max_restarts: int = Field(default=10, alias="CVOL_NEWTON_MAX_RESTARTS")
    restart_seed: int = Field(default=52, alias="CVOL_RESTART_SEED")

    # Working digits for mpmath polylog
    dilog_precision: int = Field(default=30, alias="CVOL_DILOG_PRECISION")

    # OpenTelemetry / Distributed Tracing
    otlp_endpoint: Optional[str] = Field(default=None, alias="OTLP_ENDPOINT")
    otel_service_name: str = Field(default="cvol", alias="OTEL_SERVICE_NAME")
    otel_enabled: bool = Field(default=False, alias="OTEL_ENABLED")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )


def get_settings() -> Settings:
    """Get application settings singleton."""
    return Settings()


settings = get_settings()
