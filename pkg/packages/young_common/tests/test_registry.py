"""Argparse generation and execution of registered commands."""

import argparse
import asyncio
from enum import StrEnum
from typing import Annotated

import pytest

from young_common.commands import CommandRegistry
from young_common.models import CommandResult, ExitCode


class Colour(StrEnum):
    RED = "red"
    BLUE = "blue"


def _half(text: str) -> float:
    return float(text) / 2.0


Half = Annotated[float, _half]


@pytest.fixture
def registry() -> CommandRegistry:
    registry = CommandRegistry()

    @registry.register
    async def cmd_paint(
        width: Half,
        colour: Colour = Colour.RED,
        glossy: bool = False,
        layers: list[int] | None = None,
        label: str | None = None,
    ) -> CommandResult[dict]:
        """Paint something.

        Args:
            width: Width, halved on parsing.
            colour: Paint colour.
            glossy: Glossy finish.
            layers: Layer thicknesses.
            label: Optional label.
        """
        if width < 0:
            raise ValueError("width must be nonnegative")
        if label == "boom":
            raise RuntimeError("exploded")
        return CommandResult(
            success=True,
            data={"width": width, "colour": colour, "glossy": glossy, "layers": layers},
        )

    return registry


def test_register_strips_prefix(registry: CommandRegistry) -> None:
    assert registry.command_names == ["paint"]


def test_flags_from_type_hints(registry: CommandRegistry) -> None:
    parser = registry.build_parser("prog", "test")
    ns = parser.parse_args(
        ["paint", "--width", "3", "--colour", "blue", "--glossy", "--layers", "1", "2"]
    )
    name, arguments, extra = registry.split_arguments(ns)
    assert name == "paint"
    assert extra == {}
    assert arguments == {
        "width": 1.5,
        "colour": Colour.BLUE,
        "glossy": True,
        "layers": [1, 2],
        "label": None,
    }


def test_missing_required_flag_exits(registry: CommandRegistry) -> None:
    parser = registry.build_parser("prog", "test")
    with pytest.raises(SystemExit) as exc:
        parser.parse_args(["paint"])
    assert exc.value.code == 2


def test_bad_choice_exits(registry: CommandRegistry) -> None:
    parser = registry.build_parser("prog", "test")
    with pytest.raises(SystemExit):
        parser.parse_args(["paint", "--width", "1", "--colour", "green"])


def test_help_uses_docstring(registry: CommandRegistry) -> None:
    parser = registry.build_parser("prog", "test")
    subparsers = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    helps = {action.dest: action.help for action in subparsers.choices["paint"]._actions}
    assert helps["width"] == "Width, halved on parsing."
    # Some argparse versions append the default to boolean flags
    assert helps["glossy"].startswith("Glossy finish.")


def test_execute_success(registry: CommandRegistry) -> None:
    result = asyncio.run(registry.execute("paint", {"width": 2.0}))
    assert result.success
    assert result.exit_code is ExitCode.OK
    assert result.data["width"] == 2.0


def test_value_error_is_usage(registry: CommandRegistry) -> None:
    result = asyncio.run(registry.execute("paint", {"width": -1.0}))
    assert not result.success
    assert result.exit_code is ExitCode.USAGE
    assert result.message == "width must be nonnegative"


def test_unexpected_error_is_failure(registry: CommandRegistry) -> None:
    result = asyncio.run(registry.execute("paint", {"width": 1.0, "label": "boom"}))
    assert result.exit_code is ExitCode.FAIL
    assert "RuntimeError" in result.message


def test_unknown_command(registry: CommandRegistry) -> None:
    with pytest.raises(KeyError):
        asyncio.run(registry.execute("sand", {}))


def test_docstring_args_block() -> None:
    from young_common.commands.registry import _parse_docstring_params

    doc = (
        "Summary line.\n\n"
        "Args:\n"
        "    p: First exponent, such as 4/3.\n"
        "    n (int): Points per axis.\n\n"
        "Returns:\n"
        "    ignored: not a parameter.\n"
    )
    assert _parse_docstring_params(doc) == {
        "p": "First exponent, such as 4/3.",
        "n": "Points per axis.",
    }
    assert _parse_docstring_params("No arguments here.") == {}
