"""
Core module - configuration and errors; the suite engine and reporter live
in blockbetti.core.engine and blockbetti.core.reporter
"""

from blockbetti.core.config import Budgets, Config, FieldConfig, OutputConfig, RunSettings
from blockbetti.core.errors import (
    BlockBettiError,
    BudgetExceeded,
    GraphParseError,
    GraphStructureError,
    PartialTableError,
    UnknownNameError,
    VerificationFailure,
)

__all__ = [
    "BlockBettiError",
    "BudgetExceeded",
    "Budgets",
    "Config",
    "FieldConfig",
    "GraphParseError",
    "GraphStructureError",
    "OutputConfig",
    "PartialTableError",
    "RunSettings",
    "UnknownNameError",
    "VerificationFailure",
]
