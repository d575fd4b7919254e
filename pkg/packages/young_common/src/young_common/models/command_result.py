"""Standardized result wrapper returned by every CLI command."""

from typing import Generic, TypeVar

from pydantic import BaseModel

from young_common.models.enums import ExitCode

T = TypeVar("T")


class CommandResult(BaseModel, Generic[T]):
    """
    Result of one command execution.

    ``data`` holds the machine-readable payload (reports, table rows);
    ``exit_code`` is what the process returns.
    """

    success: bool
    data: T | None = None
    error: str | None = None
    message: str | None = None
    exit_code: ExitCode = ExitCode.OK

    @classmethod
    def failure(
        cls, error: str, message: str, exit_code: ExitCode = ExitCode.USAGE
    ) -> "CommandResult[T]":
        return cls(
            success=False, error=error, message=message, exit_code=exit_code
        )
