"""
young_lab/commands/constants.py

``constants``: every sharp constant of one exponent triple.
"""

from pydantic import BaseModel

from young_common.commands import CommandRegistry
from young_common.models import CommandResult, Regime
from young_lab.constants import bound_direction, sharp_constants
from young_lab.exponents import YoungTriple, make_triple, rotation_params
from young_lab.utils import Exponent


class ConstantsReport(BaseModel):
    """Triple, rotation and constants as printed by ``constants``."""

    p: float
    q: float
    r: float
    regime: Regime
    c: float | None
    s: float | None
    c_p: float
    c_q: float
    c_r: float
    k: float
    young_constant: float
    dimension: int
    bound: str


def resolve_triple(p: float, q: float, r: float | None = None) -> YoungTriple:
    """(p, q) derives r; an explicit r is checked against the relation."""
    if r is None:
        return make_triple(p, q)
    return YoungTriple.from_exponents(p, q, r)


def constants_report(triple: YoungTriple, dimension: int = 1) -> ConstantsReport:
    constants = sharp_constants(triple, dimension)
    rotation = rotation_params(triple) if triple.is_sharp else None
    return ConstantsReport(
        p=triple.p,
        q=triple.q,
        r=triple.r,
        regime=triple.regime,
        c=rotation.c if rotation else None,
        s=rotation.s if rotation else None,
        c_p=constants.c_p,
        c_q=constants.c_q,
        c_r=constants.c_r,
        k=constants.k,
        young_constant=constants.young_nd,
        dimension=dimension,
        bound=bound_direction(triple),
    )


def register_constants_commands(registry: CommandRegistry) -> None:
    """Register the ``constants`` command."""

    @registry.register
    async def cmd_constants(
        p: Exponent, q: Exponent, r: Exponent | None = None, dimension: int = 1
    ) -> CommandResult[ConstantsReport]:
        """Print r, regime, rotation (c, s), C_p, C_q, C_r, K and the Young constant.

        Args:
            p: First exponent, decimal or fraction such as 4/3.
            q: Second exponent.
            r: Optional third exponent, checked against 1/p + 1/q = 1 + 1/r.
            dimension: Dimension N of the Young constant (C_p C_q / C_r)^N.
        """
        triple = resolve_triple(p, q, r)
        return CommandResult(success=True, data=constants_report(triple, dimension))
