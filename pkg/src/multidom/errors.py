"""Exception types shared across the package."""


class MultidomError(Exception):
    """Base class for all multidom errors."""


class GraphFormatError(MultidomError, ValueError):
    """Malformed graph input. Carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InfeasibleSpecError(MultidomError, ValueError):
    """The domination spec cannot be satisfied on the given graph."""


class CapViolationError(MultidomError, ValueError):
    """A vertex function exceeds its per-vertex caps."""


class NotApplicableError(MultidomError, ValueError):
    """A bound or tuning procedure has no feasible parameters."""


class ResourceLimitError(MultidomError, RuntimeError):
    """An exact search refused to run or exceeded its configured limits.

    ``partial`` holds whatever information was gathered before giving up.
    """

    def __init__(self, message: str, partial: object = None):
        self.partial = partial
        super().__init__(message)
