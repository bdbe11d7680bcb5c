from enum import Enum
from typing import Optional, Dict, Any
import traceback
from datetime import datetime, timezone

from .logger_config import logger
from .globals import EXIT_VALIDATION_ERROR, EXIT_CONSISTENCY_ERROR, EXIT_IO_ERROR

###########################################
# utils/app_exceptions.py


class ErrorSeverity(Enum):
    LOW = "warning"
    MEDIUM = "error"
    HIGH = "critical"

class CevianBaseException(Exception):
    """Base exception for all cevian counting errors."""

    exit_code = EXIT_VALIDATION_ERROR

    def __init__(
        self,
        message: str,
        error_code: str = None,
        severity: ErrorSeverity = ErrorSeverity.MEDIUM,
        context: Dict[str, Any] = None,
        cause: Exception = None,
        user_message: str = None
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code or self.__class__.__name__
        self.severity = severity
        self.context = context or {}
        self.cause = cause
        self.user_message = user_message or self._get_user_friendly_message()
        self.timestamp = datetime.now(timezone.utc)
        self.stack_trace = traceback.format_exc() if cause else None

        # Log immediately with appropriate level
        self._log_error()

    def _log_error(self):
        """Log error with appropriate level and context."""
        log_data = {
            'error_code': self.error_code,
            'error_message': self.message,
            'context': self.context,
            'timestamp': self.timestamp.isoformat()
        }

        if self.cause:
            log_data['caused_by'] = str(self.cause)
            log_data['stack_trace'] = self.stack_trace

        log_message = f"[{self.error_code}] {self.message}"

        if self.severity == ErrorSeverity.LOW:
            logger.warning(log_message, extra=log_data)
        elif self.severity == ErrorSeverity.MEDIUM:
            logger.error(log_message, extra=log_data)
        else:  # HIGH
            logger.critical(log_message, extra=log_data)

    def _get_user_friendly_message(self) -> str:
        """Override in subclasses for user-friendly messages."""
        return self.message

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary for CLI error output."""
        return {
            'error_code': self.error_code,
            'message': self.user_message,
            'exit_code': self.exit_code,
            'context': {key: str(value) for key, value in self.context.items()}
        }

# Specific Exception Classes
class GeometryError(CevianBaseException):
    """Exact geometry failures; a valid arrangement never triggers these."""
    exit_code = EXIT_CONSISTENCY_ERROR

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault('error_code', "GEOMETRY_ERROR")
        super().__init__(
            message,
            severity=ErrorSeverity.HIGH,
            **kwargs
        )

class OverlappingSegmentsError(GeometryError, ValueError):
    """Two collinear segments share more than one point."""
    def __init__(self, first, second, **kwargs):
        message = f"Collinear segments overlap: {first} and {second}"
        super().__init__(
            message,
            error_code="OVERLAPPING_SEGMENTS",
            context={'first': first, 'second': second},
            **kwargs
        )

    def _get_user_friendly_message(self) -> str:
        return f"{self.message} - check the cevian configuration for repeated or degenerate feet"

class ConfigValidationError(CevianBaseException, ValueError):
    """Invalid cevian configuration, config file or fraction text."""
    def __init__(self, message: str, entry: str = None, **kwargs):
        context = kwargs.pop('context', {})
        if entry is not None:
            context['entry'] = entry
        super().__init__(
            message,
            error_code="CONFIG_ERROR",
            severity=ErrorSeverity.MEDIUM,
            context=context,
            **kwargs
        )

class PreconditionError(CevianBaseException, ValueError):
    """A counting or number theory operation received arguments outside its domain."""
    def __init__(self, message: str, parameter: str = None, **kwargs):
        context = kwargs.pop('context', {})
        if parameter is not None:
            context['parameter'] = parameter
        super().__init__(
            message,
            error_code="PRECONDITION_ERROR",
            severity=ErrorSeverity.MEDIUM,
            context=context,
            **kwargs
        )

class OracleLimitError(CevianBaseException):
    """Arrangement too large for the brute-force enumerator."""
    def __init__(self, segment_count: int, limit: int, **kwargs):
        message = (f"Arrangement has {segment_count} segments, above the oracle limit of {limit}; "
                   f"set CEVIAN_MAX_SEGMENTS or pass force to enumerate anyway")
        super().__init__(
            message,
            error_code="ORACLE_LIMIT",
            severity=ErrorSeverity.LOW,
            context={'segment_count': segment_count, 'limit': limit},
            **kwargs
        )

class ConsistencyError(CevianBaseException):
    """Internal disagreement, e.g. formula vs oracle or an inexact formula division."""
    exit_code = EXIT_CONSISTENCY_ERROR

    def __init__(self, message: str, **kwargs):
        super().__init__(
            message,
            error_code="CONSISTENCY_ERROR",
            severity=ErrorSeverity.HIGH,
            **kwargs
        )

    def _get_user_friendly_message(self) -> str:
        return f"Internal consistency check failed: {self.message}"

class OutputError(CevianBaseException, OSError):
    """Reading a config file or writing a figure failed."""
    exit_code = EXIT_IO_ERROR

    def __init__(self, message: str, path: str = None, **kwargs):
        context = kwargs.pop('context', {})
        if path is not None:
            context['path'] = path
        super().__init__(
            message,
            error_code="IO_ERROR",
            severity=ErrorSeverity.MEDIUM,
            context=context,
            **kwargs
        )
