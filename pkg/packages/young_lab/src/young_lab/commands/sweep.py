"""
young_lab/commands/sweep.py

``sweep``: the constant surface over a rectangular (p, q) range.
Points with 1/p + 1/q ≤ 1 are kept and marked invalid.
"""

import numpy as np

from young_common.commands import CommandRegistry
from young_common.models import CommandResult
from young_lab.constants import k_constant, young_constant
from young_lab.errors import InvalidTripleError
from young_lab.exponents import make_triple
from young_lab.utils import Exponent, Table

COLUMNS = ["p", "q", "r", "regime", "K", "young_constant", "valid"]


def sweep_rows(
    p_values: list[float], q_values: list[float], dimension: int = 1
) -> list[list[object]]:
    """One row per (p, q); invalid points carry empty constants."""
    rows: list[list[object]] = []
    for p in p_values:
        for q in q_values:
            try:
                triple = make_triple(p, q)
            except InvalidTripleError:
                rows.append([p, q, None, None, None, None, False])
                continue
            rows.append(
                [
                    p,
                    q,
                    triple.r,
                    str(triple.regime),
                    k_constant(triple),
                    young_constant(triple, dimension),
                    True,
                ]
            )
    return rows


def register_sweep_commands(registry: CommandRegistry) -> None:
    """Register the ``sweep`` command."""

    @registry.register
    async def cmd_sweep(
        p_min: Exponent,
        p_max: Exponent,
        q_min: Exponent,
        q_max: Exponent,
        points: int = 5,
        dimension: int = 1,
        diagonal: bool = False,
    ) -> CommandResult[Table]:
        """Tabulate r, K and the Young constant over a (p, q) grid.

        Args:
            p_min: Smallest p.
            p_max: Largest p.
            q_min: Smallest q.
            q_max: Largest q.
            points: Samples per axis.
            dimension: Dimension N of the Young constant.
            diagonal: Pair the i-th p with the i-th q instead of the full product.
        """
        if points < 1:
            raise ValueError(f"points must be >= 1, got {points}")
        p_values = np.linspace(p_min, p_max, points).tolist()
        q_values = np.linspace(q_min, q_max, points).tolist()
        if diagonal:
            rows = [row for p, q in zip(p_values, q_values, strict=True) for row in sweep_rows([p], [q], dimension)]
        else:
            rows = sweep_rows(p_values, q_values, dimension)
        invalid = sum(1 for row in rows if not row[-1])
        return CommandResult(
            success=True,
            data=Table(columns=COLUMNS, rows=rows),
            message=f"{len(rows)} points, {invalid} invalid",
        )
