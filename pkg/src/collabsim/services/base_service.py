"""Base service class with common functionality."""
from typing import TypeVar, Generic, Optional, List, Any

from pydantic import BaseModel, ConfigDict

from collabsim.config.settings import CollabSimSettings, get_settings
from collabsim.domain.errors import CollabSimError
from collabsim.utils.logger import get_logger

# Generic type for service results
T = TypeVar('T')


class Result(BaseModel, Generic[T]):
    """Generic result type for service operations."""
    success: bool
    data: Optional[T] = None
    error: str = ""
    message: str = ""
    suggestions: List[str] = []
    metadata: dict = {}

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @classmethod
    def ok(cls, data: T, message: str = "", **metadata: Any) -> 'Result[T]':
        """Create a successful result."""
        return cls(success=True, data=data, message=message, metadata=metadata)

    @classmethod
    def fail(
        cls,
        error: str,
        suggestions: Optional[List[str]] = None,
        **metadata: Any
    ) -> 'Result[T]':
        """Create a failed result."""
        return cls(
            success=False,
            error=error or "Unknown error",
            suggestions=suggestions or [],
            metadata=metadata
        )

    @classmethod
    def from_error(cls, error: CollabSimError) -> 'Result[T]':
        """Create a failed result from a domain error, keeping its exit code."""
        return cls.fail(
            error.message,
            suggestions=error.suggestions,
            exit_code=error.exit_code,
            error_type=type(error).__name__,
            **error.metadata
        )

    @property
    def exit_code(self) -> int:
        if self.success:
            return 0
        return int(self.metadata.get("exit_code", 1))


class BaseService:
    """Base class for all services."""

    def __init__(self, settings: Optional[CollabSimSettings] = None):
        """
        Initialize the service.

        Args:
            settings: Process settings (defaults to the cached instance)
        """
        self.settings = settings or get_settings()
        self.logger = get_logger(self.__class__.__name__)

    def _log_action(
        self,
        action: str,
        status: str = "success",
        **kwargs: Any
    ) -> None:
        """
        Log a service action.

        Args:
            action: Name of the action
            status: Status of the action
            **kwargs: Additional log data
        """
        self.logger.info(f"{action}: {status}", **kwargs)
