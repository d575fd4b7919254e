"""Verification report emitted for every inequality check."""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from young_common.models.enums import CheckKind, CheckStatus, Regime


class GridInfo(BaseModel):
    """Quadrature resolution a check was evaluated at."""

    n: int = Field(ge=2)
    window: tuple[float, float]

    model_config = ConfigDict(frozen=True)


class VerificationReport(BaseModel):
    """
    One inequality check: both sides, their ratio, and the verdict.

    ``rhs`` is always the bound side, so ``ratio = lhs / rhs``. The
    direction of the verdict depends on the regime: an upper bound
    (Classical) passes when ``ratio <= 1 + tolerance``, a lower bound
    (Reverse) when ``ratio >= 1 - tolerance``.
    """

    lhs: float = Field(ge=0.0)
    rhs: float = Field(ge=0.0)
    ratio: float | None = None
    regime: Regime
    tolerance: float = Field(ge=0.0)
    status: CheckStatus
    grid: GridInfo | None = None

    # Enumeration metadata for seeded runs
    check: CheckKind | None = None
    index: int | None = None
    seed: int | None = None
    message: str | None = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _status_matches_ratio(self) -> "VerificationReport":
        if self.status is CheckStatus.DEGENERATE:
            return self
        if self.ratio is None:
            raise ValueError("non-degenerate report needs a ratio")
        expected = verdict(self.ratio, self.regime, self.tolerance)
        if expected is not self.status:
            raise ValueError(
                f"status {self.status} inconsistent with ratio {self.ratio!r}"
            )
        return self

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    @classmethod
    def evaluate(
        cls,
        lhs: float,
        rhs: float,
        regime: Regime,
        tolerance: float,
        **extra: object,
    ) -> "VerificationReport":
        """Build a report from both sides, deciding the status from the ratio."""
        if rhs <= 0.0:
            return cls.degenerate(
                regime, tolerance, message="bound side is zero", **extra
            )
        ratio = lhs / rhs
        return cls(
            lhs=lhs,
            rhs=rhs,
            ratio=ratio,
            regime=regime,
            tolerance=tolerance,
            status=verdict(ratio, regime, tolerance),
            **extra,
        )

    @classmethod
    def degenerate(
        cls,
        regime: Regime,
        tolerance: float,
        message: str,
        **extra: object,
    ) -> "VerificationReport":
        """A report for a check that could not be evaluated."""
        return cls(
            lhs=0.0,
            rhs=0.0,
            regime=regime,
            tolerance=tolerance,
            status=CheckStatus.DEGENERATE,
            message=message,
            **extra,
        )


def verdict(ratio: float, regime: Regime, tolerance: float) -> CheckStatus:
    """Pass/Fail for a ratio, with the direction set by the regime."""
    if regime is Regime.REVERSE:
        ok = ratio >= 1.0 - tolerance
    else:
        ok = ratio <= 1.0 + tolerance
    return CheckStatus.PASS if ok else CheckStatus.FAIL
