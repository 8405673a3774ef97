"""Standard API response wrapper."""
from datetime import datetime, timezone
from typing import Any, Dict, Generic, Optional, TypeVar

from pydantic import BaseModel, ConfigDict, Field

from app.shared.context import get_correlation_id

UTC = timezone.utc

T = TypeVar('T')


class ErrorDetail(BaseModel):
    """Error detail structure."""
    code: Optional[str] = None
    message: str
    location: Optional[str] = None
    residual: Optional[float] = None


class StandardResponse(BaseModel, Generic[T]):
    """
    Envelope for every API response:
    { success: boolean, data: object|array, error: { code, message, location, residual }, metadata: {...} }
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    success: bool
    data: Optional[T] = None
    error: Optional[ErrorDetail] = None
    metadata: Dict[str, Any] = Field(default_factory=dict)


def _metadata() -> Dict[str, Any]:
    return {
        "timestamp": datetime.now(UTC).isoformat(),
        "correlation_id": get_correlation_id()
    }


def create_success_response(data: Any) -> StandardResponse:
    """
    Create a standardized success response.

    Args:
        data: Response payload

    Returns:
        StandardResponse with success=True
    """
    return StandardResponse(success=True, data=data, error=None, metadata=_metadata())


def create_error_response(
    error_message: str,
    error_code: Optional[str] = None,
    location: Optional[str] = None,
    residual: Optional[float] = None
) -> StandardResponse:
    """
    Create a standardized error response.

    Args:
        error_message: Error message
        error_code: Optional error code
        location: Where in the input the error was detected
        residual: Offending numeric residual, if any

    Returns:
        StandardResponse with success=False
    """
    return StandardResponse(
        success=False,
        data=None,
        error=ErrorDetail(
            code=error_code,
            message=error_message,
            location=location,
            residual=residual
        ),
        metadata=_metadata()
    )
