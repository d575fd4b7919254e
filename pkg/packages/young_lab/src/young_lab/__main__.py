"""
young_lab/__main__.py

Entry point for the young-lab CLI.
Reads settings, configures logging and OTel tracing, builds the
command registry and renders the result on stdout (or ``--out``).
Logs go to stderr so stdout stays machine-readable.
"""

import argparse
import asyncio
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from young_common.commands import CommandRegistry
from young_common.models import OutputFormat
from young_common.tracing import init_tracing
from young_lab.commands import (
    register_constants_commands,
    register_extremize_commands,
    register_sweep_commands,
    register_transport_commands,
    register_verify_commands,
)
from young_lab.config import Settings
from young_lab.utils import render

logger = logging.getLogger(__name__)

PROG = "young-lab"


def build_registry(settings: Settings) -> CommandRegistry:
    """Registry with every young-lab command."""
    registry = CommandRegistry()
    register_constants_commands(registry)
    register_verify_commands(registry, settings)
    register_transport_commands(registry, settings)
    register_extremize_commands(registry, settings)
    register_sweep_commands(registry)
    return registry


def _output_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--format",
        type=OutputFormat,
        choices=list(OutputFormat),
        default=None,
        help="Output encoding (default: csv for tables, json otherwise).",
    )
    parent.add_argument("--out", default=None, help="Write output to this file instead of stdout.")
    return parent


async def run(argv: Sequence[str] | None = None, settings: Settings | None = None) -> int:
    """Parse, execute and render one command. Returns the exit code."""
    settings = settings or Settings()

    logging.basicConfig(
        level=settings.log_level.upper(),
        format="%(asctime)s | %(name)-30s | %(levelname)-7s | %(message)s",
        stream=sys.stderr,
    )

    # Initialise OTel tracing (exports to Jaeger via OTLP/gRPC)
    init_tracing(
        service_name=PROG,
        otlp_endpoint=settings.otlp_endpoint,
        enabled=settings.tracing,
    )

    registry = build_registry(settings)
    parser = registry.build_parser(
        PROG,
        "Sharp Young inequality: constants, verification, transport and extremizers.",
        parents=[_output_options()],
    )
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    name, arguments, options = registry.split_arguments(namespace)
    result = await registry.execute(name, arguments)

    if not result.success:
        print(f"{PROG}: error: {result.message}", file=sys.stderr)
        return int(result.exit_code)

    text = render(result.data, options.get("format"))
    if options.get("out"):
        Path(options["out"]).write_text(text, encoding="utf-8")
        logger.info("Wrote %s", options["out"])
    else:
        sys.stdout.write(text)
    if result.message:
        logger.info(result.message)
    return int(result.exit_code)


def main() -> None:
    """Sync entry point."""
    sys.exit(asyncio.run(run()))


if __name__ == "__main__":
    main()
