"""
young_lab/commands/verify.py

``verify``: inequality checks on Gaussian equality pairs, seeded random
densities, or function files. One report per check; checks run
concurrently in worker threads and are emitted in index order.
"""

import asyncio
import logging
from collections.abc import Callable
from functools import cached_property

from young_common.models import (
    CheckKind,
    CommandResult,
    ConvolutionMethod,
    ExitCode,
    GridInfo,
    Regime,
    VerificationReport,
)
from young_common.commands import CommandRegistry
from young_lab.commands.constants import resolve_triple
from young_lab.config import Settings
from young_lab.convolution import verify_young
from young_lab.errors import YoungLabError
from young_lab.exponents import YoungTriple
from young_lab.extremizers import (
    estimate_sharp_constant,
    lab_grid,
    maximizer_tuple,
    supermodularity_check,
    young_instance,
)
from young_lab.functions import (
    Grid,
    GridFunction,
    gaussian_equality_pair,
    grid_for,
    random_density,
    read_function,
    sample_gaussian,
    theorem2_gaussian_pair,
)
from young_lab.inequalities import verify_lemma1, verify_theorem2
from young_lab.utils import Exponent

logger = logging.getLogger(__name__)

Check = Callable[[], VerificationReport]


class CheckPlan:
    """Builds the enumerated checks of one ``verify`` run."""

    def __init__(
        self,
        triple: YoungTriple,
        kind: CheckKind,
        grid: Grid,
        quadrature: int,
        tolerance: float,
        method: ConvolutionMethod,
    ) -> None:
        self.triple = triple
        self.kind = kind
        self.grid = grid
        self.quadrature = quadrature
        self.tolerance = tolerance
        self.method = method
        if kind in (CheckKind.LEMMA1, CheckKind.SUPERMODULARITY):
            triple.require(Regime.CLASSICAL, f"verify --check {kind}")
        else:
            triple.require_sharp(f"verify --check {kind}")

    def pair(self, f: GridFunction, g: GridFunction) -> Check:
        """Check of one (f, g) pair; lemma1 checks use the unit Gaussians as (F, G)."""
        t, tol, n = self.triple, self.tolerance, self.quadrature
        match self.kind:
            case CheckKind.YOUNG:
                return lambda: verify_young(f, g, t, tol, self.method)
            case CheckKind.THEOREM2:
                return lambda: verify_theorem2(f, g, t, tol, n)
            case CheckKind.LEMMA1:
                F, G = (sample_gaussian(gauss, f.grid) for gauss in theorem2_gaussian_pair(t))
                return lambda: verify_lemma1(f, g, F.scaled(f.mass), G.scaled(g.mass), t, tol, n)
        raise ValueError(f"{self.kind} checks take tuples, not pairs")

    def gaussian(self) -> Check:
        t = self.triple
        match self.kind:
            case CheckKind.YOUNG:
                fa, ga = gaussian_equality_pair(t)
            case CheckKind.SUPERMODULARITY:
                return self.tuples(maximizer_tuple(t, self.grid), maximizer_tuple(t, self.grid))
            case _:
                fa, ga = theorem2_gaussian_pair(t)
        grid = grid_for(fa, ga, n=self.grid.n)
        return self.pair(sample_gaussian(fa, grid), sample_gaussian(ga, grid))

    @cached_property
    def sharp_estimate(self) -> float:
        """M of the Young instance, from the Gaussian maximizer tuple."""
        t = self.triple
        return estimate_sharp_constant(
            young_instance(t), self.grid, (t.p, t.q, t.r), self.quadrature
        )

    def tuples(self, f: list[GridFunction], g: list[GridFunction]) -> Check:
        instance = young_instance(self.triple)
        return lambda: supermodularity_check(
            instance, f, g, self.sharp_estimate, self.tolerance, self.quadrature
        )

    def random(self, seed: int) -> Check:
        if self.kind is CheckKind.SUPERMODULARITY:
            f = [random_density(seed + 1000 * k, self.grid) for k in range(3)]
            g = [random_density(seed + 1000 * k + 500, self.grid) for k in range(3)]
            return self.tuples(f, g)
        return self.pair(random_density(seed, self.grid), random_density(seed + 500, self.grid))

    def degenerate(self, message: str, **extra: object) -> VerificationReport:
        return VerificationReport.degenerate(
            self.triple.regime,
            self.tolerance,
            message,
            grid=GridInfo(n=self.grid.n, window=self.grid.window),
            check=self.kind,
            **extra,
        )


async def run_checks(
    plan: CheckPlan,
    checks: list[tuple[Check, int | None]],
    workers: int,
) -> list[VerificationReport]:
    """
    Run checks in threads, ``workers`` at a time.

    A check raising a library error or a ValueError (pydantic validation
    included) becomes a Degenerate report; the other checks still run.
    """
    semaphore = asyncio.Semaphore(max(1, workers))

    async def one(index: int, check: Check, seed: int | None) -> VerificationReport:
        async with semaphore:
            try:
                report = await asyncio.to_thread(check)
            except (YoungLabError, ValueError) as exc:
                logger.warning("check %d degenerate: %s", index, exc)
                report = plan.degenerate(str(exc))
        report = report.model_copy(update={"index": index, "seed": seed})
        logger.info("check %d (%s): %s ratio=%s", index, plan.kind, report.status, report.ratio)
        return report

    return list(
        await asyncio.gather(*(one(i, check, seed) for i, (check, seed) in enumerate(checks)))
    )


def register_verify_commands(registry: CommandRegistry, settings: Settings) -> None:
    """Register the ``verify`` command."""

    @registry.register
    async def cmd_verify(
        p: Exponent,
        q: Exponent,
        r: Exponent | None = None,
        check: CheckKind = CheckKind.THEOREM2,
        gaussian: bool = False,
        random: bool = False,
        count: int | None = None,
        seed: int | None = None,
        f_file: str | None = None,
        g_file: str | None = None,
        n: int | None = None,
        window: float | None = None,
        tol: float | None = None,
        method: ConvolutionMethod = ConvolutionMethod.DIRECT,
    ) -> CommandResult[list[VerificationReport]]:
        """Verify an inequality and emit one JSON report per check.

        Args:
            p: First exponent, decimal or fraction such as 4/3.
            q: Second exponent.
            r: Optional third exponent, checked against 1/p + 1/q = 1 + 1/r.
            check: Inequality to verify (young, theorem2, lemma1, supermodularity).
            gaussian: Check the Gaussian equality case.
            random: Check seeded random densities.
            count: Number of random checks (default YOUNG_RANDOM_CHECKS).
            seed: Base seed of the random checks (default YOUNG_SEED).
            f_file: CSV or JSON file with f (needs --g-file).
            g_file: CSV or JSON file with g.
            n: Points per axis of the 2D quadrature (default YOUNG_QUADRATURE_POINTS).
            window: Half-width of the grid of random densities (default YOUNG_WINDOW).
            tol: Relative tolerance (default YOUNG_TOLERANCE).
            method: Convolution backend of the young check.
        """
        triple = resolve_triple(p, q, r)
        if not (gaussian or random or f_file or g_file):
            raise ValueError("choose --gaussian, --random or --f-file/--g-file")
        if bool(f_file) != bool(g_file):
            raise ValueError("--f-file and --g-file go together")
        if f_file and check is CheckKind.SUPERMODULARITY:
            raise ValueError("supermodularity checks take tuples, not --f-file/--g-file pairs")

        base_seed = settings.seed if seed is None else seed
        grid = Grid.symmetric(settings.window if window is None else window, settings.grid_points)
        if check is CheckKind.SUPERMODULARITY:
            grid = lab_grid(triple, settings.grid_points // 2)
        plan = CheckPlan(
            triple,
            check,
            grid,
            quadrature=settings.quadrature_points if n is None else n,
            tolerance=settings.tolerance if tol is None else tol,
            method=method,
        )

        checks: list[tuple[Check, int | None]] = []
        if gaussian:
            checks.append((plan.gaussian(), None))
        if f_file and g_file:
            checks.append((_file_check(plan, f_file, g_file), None))
        if random:
            total = settings.random_checks if count is None else count
            checks.extend((plan.random(base_seed + i), base_seed + i) for i in range(total))

        reports = await run_checks(plan, checks, settings.workers)
        passed = all(report.passed for report in reports)
        return CommandResult(
            success=True,
            data=reports,
            message=f"{sum(rep.passed for rep in reports)}/{len(reports)} checks passed",
            exit_code=ExitCode.OK if passed else ExitCode.FAIL,
        )


def _file_check(plan: CheckPlan, f_file: str, g_file: str) -> Check:
    """Load lazily so parse errors surface as a Degenerate report."""

    def run() -> VerificationReport:
        return plan.pair(read_function(f_file), read_function(g_file))()

    return run


__all__ = ["CheckPlan", "register_verify_commands", "run_checks"]
