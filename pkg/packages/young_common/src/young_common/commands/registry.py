"""
young_common/commands/registry.py

Command registry with automatic argparse generation.
Each registered coroutine becomes a CLI subcommand whose flags are
derived from its type hints and Google-style docstring. Every
execution is traced with OpenTelemetry: arguments, duration and
exit code are recorded on a ``command:<name>`` span.
"""

import argparse
import inspect
import logging
import re
import time
import types
from collections.abc import Awaitable, Callable, Sequence
from enum import StrEnum
from typing import Annotated, Any, Union, get_args, get_origin, get_type_hints

from opentelemetry import trace

from young_common.models import CommandResult, ExitCode
from young_common.tracing import record_error, truncate_json

logger = logging.getLogger(__name__)

Command = Callable[..., Awaitable[CommandResult]]

# Python type → argparse converter
_TYPE_MAP: dict[type, Callable[[str], Any]] = {
    int: int,
    float: float,
    str: str,
}


def _unwrap_optional(hint: Any) -> Any:
    """``X | None`` → ``X``; anything else unchanged."""
    if get_origin(hint) in (Union, types.UnionType):
        args = [a for a in get_args(hint) if a is not type(None)]
        if len(args) == 1:
            return args[0]
    return hint


def _argparse_kwargs(hint: Any) -> dict[str, Any]:
    """Convert a Python type hint to ``add_argument`` keyword arguments."""
    hint = _unwrap_optional(hint)

    # Annotated[float, parser]: the first callable in the metadata parses
    if get_origin(hint) is Annotated:
        base, *extras = get_args(hint)
        parsers = [e for e in extras if callable(e)]
        if parsers:
            return {"type": parsers[0], "metavar": base.__name__.upper()}
        hint = base

    if hint is bool:
        return {"action": argparse.BooleanOptionalAction}
    if isinstance(hint, type) and issubclass(hint, StrEnum):
        return {"type": hint, "choices": list(hint)}
    if get_origin(hint) is list:
        (item,) = get_args(hint)
        kwargs = _argparse_kwargs(item)
        kwargs["nargs"] = "+"
        return kwargs
    return {"type": _TYPE_MAP.get(hint, str)}


_ARGS_HEADER = re.compile(r"^Args:\s*$", re.MULTILINE)
_SECTION = re.compile(r"^\S[^:]*:\s*$", re.MULTILINE)
_PARAM = re.compile(r"^\s+(\w+)(?:\s*\([^)]*\))?:\s*(.+)$", re.MULTILINE)


def _parse_docstring_params(docstring: str) -> dict[str, str]:
    """Map parameter names to their one-line descriptions in a Google-style ``Args:`` block."""
    header = _ARGS_HEADER.search(docstring)
    if header is None:
        return {}
    block = docstring[header.end():]
    end = _SECTION.search(block)
    if end is not None:
        block = block[: end.start()]
    return {name: desc.strip() for name, desc in _PARAM.findall(block)}


def _flag(param_name: str) -> str:
    return "--" + param_name.replace("_", "-")


class CommandRegistry:
    """
    Central registry for CLI commands with auto-generated flags.

    Each command execution is traced via OpenTelemetry with:
    - command.name, command.arguments (as span attributes)
    - command.exit_code
    - command.duration_ms
    - command.success (bool)
    """

    def __init__(self) -> None:
        self._commands: dict[str, Command] = {}
        self._tracer = trace.get_tracer("young.commands")

    def register(self, func: Command) -> Command:
        """Register a command coroutine under its function name."""
        name = func.__name__.removeprefix("cmd_")
        if name in self._commands:
            logger.warning("Command '%s' already registered, overwriting.", name)

        self._commands[name] = func
        logger.debug("Registered command: %s", name)
        return func

    @property
    def command_names(self) -> list[str]:
        """List of registered command names."""
        return list(self._commands.keys())

    def _add_subparser(
        self,
        subparsers: argparse._SubParsersAction,
        name: str,
        func: Command,
        parents: Sequence[argparse.ArgumentParser],
    ) -> None:
        """Generate one subcommand parser from the command's signature."""
        hints = get_type_hints(func, include_extras=True)
        sig = inspect.signature(func)
        docstring = inspect.getdoc(func) or ""
        param_docs = _parse_docstring_params(docstring)
        summary = docstring.split("\n")[0] if docstring else name

        parser = subparsers.add_parser(
            name, help=summary, description=summary, parents=list(parents)
        )
        for param_name, param in sig.parameters.items():
            kwargs = _argparse_kwargs(hints.get(param_name, str))
            kwargs["help"] = param_docs.get(param_name, param_name)
            kwargs["dest"] = param_name
            if param.default is inspect.Parameter.empty:
                kwargs["required"] = True
            else:
                kwargs["default"] = param.default
            parser.add_argument(_flag(param_name), **kwargs)

    def build_parser(
        self,
        prog: str,
        description: str,
        parents: Sequence[argparse.ArgumentParser] = (),
    ) -> argparse.ArgumentParser:
        """Build the top-level parser with one subcommand per command."""
        parser = argparse.ArgumentParser(prog=prog, description=description)
        subparsers = parser.add_subparsers(dest="command", required=True)
        for name, func in self._commands.items():
            self._add_subparser(subparsers, name, func, parents)
        return parser

    def split_arguments(
        self, namespace: argparse.Namespace
    ) -> tuple[str, dict[str, Any], dict[str, Any]]:
        """Split parsed flags into (command, command kwargs, global options)."""
        values = dict(vars(namespace))
        name = values.pop("command")
        params = inspect.signature(self._commands[name]).parameters
        arguments = {k: values.pop(k) for k in list(values) if k in params}
        return name, arguments, values

    async def execute(self, name: str, arguments: dict[str, Any]) -> CommandResult:
        """
        Execute a registered command by name, wrapped in an OTel span.

        Library validation errors (``ValueError`` and subclasses) become
        usage failures; anything unexpected becomes a failed run.
        """
        if name not in self._commands:
            raise KeyError(
                f"Unknown command '{name}'. Available: {', '.join(self._commands)}"
            )

        func = self._commands[name]

        with self._tracer.start_as_current_span(f"command:{name}") as span:
            span.set_attribute("command.name", name)
            span.set_attribute("command.arguments", truncate_json(arguments))

            logger.info("Executing command: %s(%s)", name, arguments)
            start = time.perf_counter()

            try:
                result = await func(**arguments)
            except (TypeError, ValueError) as exc:
                result = CommandResult.failure(
                    error="INVALID_ARGUMENTS",
                    message=str(exc),
                    exit_code=ExitCode.USAGE,
                )
                record_error(span, exc)
            except Exception as exc:
                logger.exception("Command '%s' failed", name)
                result = CommandResult.failure(
                    error="COMMAND_ERROR",
                    message=f"{type(exc).__name__}: {exc}",
                    exit_code=ExitCode.FAIL,
                )
                record_error(span, exc)

            elapsed_ms = (time.perf_counter() - start) * 1000
            span.set_attribute("command.success", result.success)
            span.set_attribute("command.exit_code", int(result.exit_code))
            span.set_attribute("command.duration_ms", round(elapsed_ms, 1))
            logger.info(
                "Command %s finished in %.0fms (exit %d)",
                name,
                elapsed_ms,
                result.exit_code,
            )
            return result
