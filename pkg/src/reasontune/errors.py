"""Exception types shared across the package."""

from __future__ import annotations


class ReasonTuneError(Exception):
    """Base class for all package-specific errors."""


class GridRangeError(ReasonTuneError, ValueError):
    """A parameter axis value lies outside its allowed range."""

    def __init__(self, axis: str, message: str) -> None:
        super().__init__(message)
        self.axis = axis


class BudgetError(ReasonTuneError, ValueError):
    """A sampling budget exceeds the size of the search space."""


class EmptyRecordsError(ReasonTuneError, ValueError):
    """An aggregate metric was requested over an empty record list."""


class BaselineError(ReasonTuneError, ValueError):
    """Baseline metrics are unusable for normalization (non-positive)."""


class ProblemParseError(ReasonTuneError, ValueError):
    """A problem file line could not be parsed."""

    def __init__(self, line_number: int, message: str) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class ProblemValidationError(ReasonTuneError, ValueError):
    """A parsed problem set violates schema constraints."""


class BackendError(ReasonTuneError, RuntimeError):
    """Base class for completion-backend failures."""


class TransportError(BackendError):
    """Network-level failure; retryable."""


class ProviderError(BackendError):
    """Non-2xx provider response."""

    def __init__(self, status: int, body_excerpt: str) -> None:
        super().__init__(f"provider returned HTTP {status}: {body_excerpt}")
        self.status = status
        self.body_excerpt = body_excerpt


class ConfigurationError(BackendError):
    """Backend descriptor or auth material is unusable."""
