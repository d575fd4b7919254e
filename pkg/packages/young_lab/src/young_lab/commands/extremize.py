"""
young_lab/commands/extremize.py

``extremize``: stationarity scans of the sharp ratio around the
Gaussian pair (CSV ``epsilon,ratio``) and Gaussian fits (JSON).
"""

from young_common.commands import CommandRegistry
from young_common.models import CommandResult
from young_lab.commands.constants import resolve_triple
from young_lab.config import Settings
from young_lab.extremizers import Direction, GaussianFit, fit_gaussian, stationarity_scan
from young_lab.functions import read_function
from young_lab.utils import Exponent, Table


def register_extremize_commands(registry: CommandRegistry, settings: Settings) -> None:
    """Register the ``extremize`` command."""

    @registry.register
    async def cmd_extremize(
        p: Exponent | None = None,
        q: Exponent | None = None,
        direction: Direction = Direction.COSINE,
        steps: int = 2,
        eps_max: float = 0.05,
        n: int | None = None,
        fit_file: str | None = None,
    ) -> CommandResult[Table | GaussianFit]:
        """Scan the sharp ratio along a perturbation, or fit a Gaussian to a file.

        Args:
            p: First exponent of the scanned triple.
            q: Second exponent of the scanned triple.
            direction: Perturbation direction (zero, cosine, quartic, tanh, dilation).
            steps: Scan points on each side of eps = 0.
            eps_max: Largest perturbation size.
            n: Points per axis of the 2D quadrature (default YOUNG_QUADRATURE_POINTS).
            fit_file: Fit a Gaussian to this CSV or JSON function instead of scanning.
        """
        if fit_file:
            return CommandResult(success=True, data=fit_gaussian(read_function(fit_file)))
        if p is None or q is None:
            raise ValueError("a scan needs --p and --q")

        scan = stationarity_scan(
            resolve_triple(p, q),
            direction,
            steps=steps,
            eps_max=eps_max,
            n=settings.quadrature_points if n is None else n,
        )
        rows = [list(row) for row in scan.rows()]
        return CommandResult(success=True, data=Table(columns=["epsilon", "ratio"], rows=rows))
