"""
young_common/models/__init__.py

Domain models shared across the sharp-young packages.
"""

from young_common.models.command_result import CommandResult
from young_common.models.enums import (
    CheckKind,
    CheckStatus,
    ConvolutionMethod,
    ExitCode,
    OutputFormat,
    QuadratureRule,
    Regime,
)
from young_common.models.report import GridInfo, VerificationReport, verdict

__all__ = [
    "CheckKind",
    "CheckStatus",
    "CommandResult",
    "ConvolutionMethod",
    "ExitCode",
    "GridInfo",
    "OutputFormat",
    "QuadratureRule",
    "Regime",
    "VerificationReport",
    "verdict",
]
