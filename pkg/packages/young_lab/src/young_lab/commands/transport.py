"""
young_lab/commands/transport.py

``transport``: dump the monotone map from a source density to a target
as CSV ``t,u,uprime,residual`` over the resolved window.
"""

import logging

from young_common.commands import CommandRegistry
from young_common.models import CommandResult
from young_lab.config import Settings
from young_lab.functions import GaussianFn, Grid, random_density, read_function, sample_gaussian
from young_lab.transport import monotone_map
from young_lab.utils import Table

logger = logging.getLogger(__name__)


def register_transport_commands(registry: CommandRegistry, settings: Settings) -> None:
    """Register the ``transport`` command."""

    @registry.register
    async def cmd_transport(
        seed: int | None = None,
        f_file: str | None = None,
        target_file: str | None = None,
        rate: float = 1.0,
        window: float | None = None,
    ) -> CommandResult[Table]:
        """Tabulate u, u' and the pointwise pushforward defect of the monotone map.

        Args:
            seed: Seed of the random source density (default YOUNG_SEED).
            f_file: CSV or JSON file with the source density f.
            target_file: CSV or JSON file with the target F (default a Gaussian).
            rate: Rate of the unit-mass Gaussian target when no target file is given.
            window: Half-width of the generated grids (default YOUNG_WINDOW).
        """
        grid = Grid.symmetric(settings.window if window is None else window, settings.grid_points)
        if f_file:
            f = read_function(f_file)
        else:
            f = random_density(settings.seed if seed is None else seed, grid)
        if target_file:
            F = read_function(target_file)
        else:
            F = sample_gaussian(GaussianFn.unit(rate), f.grid).normalized(f.mass)

        transport = monotone_map(f, F)
        logger.info("pushforward residual %.3e", transport.residual)
        inside = transport.in_window(F.points)
        columns = [
            F.points[inside],
            transport.values[inside],
            transport.derivative[inside],
            transport.defect()[inside],
        ]
        rows = [list(row) for row in zip(*(col.tolist() for col in columns), strict=True)]
        return CommandResult(
            success=True,
            data=Table(columns=["t", "u", "uprime", "residual"], rows=rows),
            message=f"max residual {transport.residual:.3e}",
        )
