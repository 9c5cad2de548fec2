"""Exception types shared across the package."""


class DiminishError(Exception):
    """Base class for all package-specific errors."""


class ParseError(DiminishError):
    """Malformed instance file. Carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CapExceeded(DiminishError):
    """An exhaustive computation was asked to run above its configured cap.

    Raised instead of silently approximating.
    """


class GuardError(DiminishError):
    """A construction's precondition does not hold and no fallback exists."""


class ContractViolation(DiminishError):
    """A transform broke its declared contract (parameter bound, etc.).

    ``stage`` names the offending piece when the violation happened inside
    a composed pipeline.
    """

    def __init__(self, message, stage=None):
        if stage is not None:
            message = f"[{stage}] {message}"
        super().__init__(message)
        self.stage = stage
