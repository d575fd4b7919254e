"""
young_lab/functions/grid.py

Uniform 1D grids and nonnegative sampled functions on them, with
trapezoid (default) or Simpson quadrature and L^p functionals for
every p > 0, including p < 1.
"""

import logging

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy import integrate

from young_common.models import QuadratureRule
from young_lab.errors import ExponentDomainError, GridError, NegativeValuesError

logger = logging.getLogger(__name__)

DEFAULT_HALF_WIDTH = 8.0
DEFAULT_POINTS = 2048
STEP_RTOL = 1e-9


class Grid(BaseModel):
    """Uniform grid of ``n`` samples on [lo, hi]."""

    lo: float = Field(allow_inf_nan=False)
    hi: float = Field(allow_inf_nan=False)
    n: int = Field(ge=2)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _ordered(self) -> "Grid":
        if not self.lo < self.hi:
            raise ValueError(f"grid needs lo < hi, got [{self.lo}, {self.hi}]")
        return self

    @classmethod
    def symmetric(
        cls, half_width: float = DEFAULT_HALF_WIDTH, n: int = DEFAULT_POINTS
    ) -> "Grid":
        return cls(lo=-half_width, hi=half_width, n=n)

    @classmethod
    def for_rate(cls, rate: float, n: int = DEFAULT_POINTS) -> "Grid":
        """Window [-8, 8] scaled by 1/sqrt(rate): 8σ-like margin for exp(-rate x²)."""
        return cls.symmetric(DEFAULT_HALF_WIDTH / np.sqrt(rate), n)

    @property
    def step(self) -> float:
        return (self.hi - self.lo) / (self.n - 1)

    @property
    def points(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.n)

    @property
    def center(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def window(self) -> tuple[float, float]:
        return self.lo, self.hi

    def same_step(self, other: "Grid") -> bool:
        return abs(self.step - other.step) <= STEP_RTOL * max(self.step, other.step)

    def dilated(self, sigma: float) -> "Grid":
        if not sigma > 0.0:
            raise GridError(f"dilation factor must be positive, got {sigma}")
        return Grid(lo=sigma * self.lo, hi=sigma * self.hi, n=self.n)

    def reflected(self) -> "Grid":
        return Grid(lo=-self.hi, hi=-self.lo, n=self.n)

    def refined(self) -> "Grid":
        """Same window, step halved."""
        return Grid(lo=self.lo, hi=self.hi, n=2 * self.n - 1)


class Domination(BaseModel):
    """Bound f(x) ≤ M exp(-ε (x - center)²) on the grid."""

    m: float = Field(gt=0.0)
    eps: float = Field(gt=0.0)
    center: float = 0.0

    model_config = ConfigDict(frozen=True)


def _check_samples(values: np.ndarray) -> None:
    if not np.all(np.isfinite(values)):
        raise NegativeValuesError("function samples must be finite")
    if np.any(values < 0.0):
        raise NegativeValuesError(
            f"function samples must be nonnegative (min {values.min():.3e})"
        )


class GridFunction(BaseModel):
    """
    Nonnegative samples on a uniform grid.

    ``tail_mass`` estimates the mass the window truncates away (zero for
    generated data that is negligible at the edges). Values are stored
    read-only; every operation returns a new function.

    Direct construction reports bad samples as ``pydantic.ValidationError``;
    ``from_callable`` and ``with_values`` raise ``NegativeValuesError``.
    """

    grid: Grid
    values: np.ndarray
    tail_mass: float = Field(default=0.0, ge=0.0)
    domination: Domination | None = None

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("values", mode="before")
    @classmethod
    def _as_array(cls, v: object) -> np.ndarray:
        arr = np.array(v, dtype=float)
        arr.setflags(write=False)
        return arr

    @model_validator(mode="after")
    def _nonnegative(self) -> "GridFunction":
        if self.values.shape != (self.grid.n,):
            raise ValueError(
                f"{self.values.shape} samples do not match grid of {self.grid.n}"
            )
        _check_samples(self.values)
        return self

    @classmethod
    def from_callable(cls, func, grid: Grid) -> "GridFunction":
        values = np.asarray(func(grid.points), dtype=float)
        _check_samples(values)
        return cls(grid=grid, values=values)

    @classmethod
    def zeros(cls, grid: Grid) -> "GridFunction":
        return cls(grid=grid, values=np.zeros(grid.n))

    @property
    def points(self) -> np.ndarray:
        return self.grid.points

    @property
    def mass(self) -> float:
        return integrate_values(self.values, self.grid.step)

    @property
    def is_zero(self) -> bool:
        return not np.any(self.values > 0.0)

    @property
    def support_radius(self) -> float:
        """Largest |x| of the window, measured from 0."""
        return max(abs(self.grid.lo), abs(self.grid.hi))

    def with_values(self, values: np.ndarray) -> "GridFunction":
        values = np.asarray(values, dtype=float)
        _check_samples(values)
        return GridFunction(grid=self.grid, values=values)

    def scaled(self, c: float) -> "GridFunction":
        return self.with_values(c * self.values)

    def normalized(self, mass: float = 1.0) -> "GridFunction":
        current = self.mass
        if current <= 0.0:
            raise ValueError("cannot normalize a zero-mass function")
        return self.scaled(mass / current)

    def reflected(self) -> "GridFunction":
        """x ↦ f(-x)."""
        return GridFunction(grid=self.grid.reflected(), values=self.values[::-1])

    def dilated(self, sigma: float) -> "GridFunction":
        """x ↦ f(x/σ) sampled on the dilated grid (same samples)."""
        return GridFunction(grid=self.grid.dilated(sigma), values=self.values)

    def powered(self, exponent: float) -> "GridFunction":
        return self.with_values(pointwise_power(self.values, exponent))

    def at(self, x: np.ndarray | float) -> np.ndarray:
        """Linear interpolation, zero outside the window."""
        return np.interp(x, self.points, self.values, left=0.0, right=0.0)


def pointwise_power(values: np.ndarray, exponent: float) -> np.ndarray:
    """values**exponent with 0**e = 0 for every positive exponent."""
    if not exponent > 0.0:
        raise ExponentDomainError(f"power must be positive, got {exponent!r}")
    out = np.zeros_like(values, dtype=float)
    positive = values > 0.0
    out[positive] = np.power(values[positive], exponent)
    return out


def integrate_values(
    values: np.ndarray,
    step: float,
    rule: QuadratureRule = QuadratureRule.TRAPEZOID,
    axis: int = -1,
) -> float | np.ndarray:
    """Uniform-step quadrature along ``axis``."""
    if rule is QuadratureRule.SIMPSON:
        return integrate.simpson(values, dx=step, axis=axis)
    return integrate.trapezoid(values, dx=step, axis=axis)


def integrate_function(
    f: GridFunction, rule: QuadratureRule = QuadratureRule.TRAPEZOID
) -> float:
    """∫ f over the window; trapezoid is exact for piecewise-linear data."""
    return float(integrate_values(f.values, f.grid.step, rule))


def p_functional(
    f: GridFunction,
    p: float,
    rule: QuadratureRule = QuadratureRule.TRAPEZOID,
) -> float:
    """
    ‖f‖_p = (∫ f^p)^{1/p} for any p > 0.

    Raises:
        ExponentDomainError: p ≤ 0.
    """
    if not p > 0.0:
        raise ExponentDomainError(f"p must be positive, got {p!r}")
    if p == 1.0:
        return integrate_function(f, rule)
    total = float(integrate_values(pointwise_power(f.values, p), f.grid.step, rule))
    return total ** (1.0 / p)
