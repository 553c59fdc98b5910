"""
Error types shared across blockbetti.

Every error carries the process exit code the CLI maps it to.
"""

from typing import Any, Dict, Optional


class BlockBettiError(Exception):
    """Base class for all blockbetti errors"""

    exit_code: int = 2


class GraphParseError(BlockBettiError, ValueError):
    """Malformed graph input; ``line`` is the 1-based physical line when known"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class GraphStructureError(BlockBettiError, ValueError):
    """A graph violates the precondition of the operation it was passed to"""


class BudgetExceeded(BlockBettiError):
    """A size guard tripped before an exact computation started"""

    exit_code = 3

    def __init__(self, limit: str, value: int, maximum: int, detail: str = ""):
        self.limit = limit
        self.value = value
        self.maximum = maximum
        self.detail = detail
        message = f"budget '{limit}' exceeded: {value} > {maximum}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "limit": self.limit,
            "value": self.value,
            "maximum": self.maximum,
            "detail": self.detail,
        }


def check_budget(limit: str, value: int, maximum: int, detail: str = "") -> None:
    """Raise BudgetExceeded when ``value`` is above ``maximum``"""
    if value > maximum:
        raise BudgetExceeded(limit, value, maximum, detail)


class PartialTableError(BlockBettiError):
    """A query touched an entry outside the computed window of a partial table"""


class VerificationFailure(BlockBettiError):
    """Two independent computations disagree; ``payload`` holds both sides"""

    exit_code = 1

    def __init__(self, message: str, payload: Optional[Dict[str, Any]] = None):
        self.payload = payload or {}
        super().__init__(message)


class UnknownNameError(BlockBettiError, KeyError):
    """Lookup of an engine, check, corpus or named graph failed"""

    def __init__(self, kind: str, name: str, available: Optional[list] = None):
        self.kind = kind
        self.name = name
        self.available = sorted(available or [])
        message = f"Unknown {kind}: {name}"
        if self.available:
            message += f". Available: {', '.join(self.available)}"
        super().__init__(message)

    def __str__(self) -> str:
        return self.args[0]
