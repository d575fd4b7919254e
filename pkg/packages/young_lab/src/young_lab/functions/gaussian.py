"""
young_lab/functions/gaussian.py

Closed-form Gaussians a·exp(-λ(x - y)²), their grid samples with a
tail-mass estimate, the Gaussian pairs that attain the sharp constants,
and the seeded random-density generator used by every randomized check.
"""

import logging
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.special import erfc

from young_lab.exponents import YoungTriple
from young_lab.functions.grid import Domination, Grid, GridFunction, integrate_values

logger = logging.getLogger(__name__)

# Half-width (in units of 1/sqrt(λ)) a window should leave around a Gaussian
RESOLVED_SIGMAS = 6.0
DENSITY_FLOOR = 1e-3


class GaussianFn(BaseModel):
    """x ↦ amplitude · exp(-rate (x - center)²)."""

    amplitude: float = Field(ge=0.0, allow_inf_nan=False)
    rate: float = Field(gt=0.0, allow_inf_nan=False)
    center: float = Field(default=0.0, allow_inf_nan=False)

    model_config = ConfigDict(frozen=True)

    @classmethod
    def unit(cls, rate: float, center: float = 0.0) -> "GaussianFn":
        """Unit-mass Gaussian sqrt(λ/π) exp(-λ(x - y)²)."""
        return cls(amplitude=math.sqrt(rate / math.pi), rate=rate, center=center)

    @property
    def mass(self) -> float:
        return self.amplitude * math.sqrt(math.pi / self.rate)

    @property
    def variance(self) -> float:
        """Variance of the normalized Gaussian, 1/(2λ)."""
        return 0.5 / self.rate

    def __call__(self, x: np.ndarray | float) -> np.ndarray:
        return self.amplitude * np.exp(-self.rate * (np.asarray(x) - self.center) ** 2)

    def scaled(self, c: float) -> "GaussianFn":
        return self.model_copy(update={"amplitude": c * self.amplitude})

    def tail_mass(self, lo: float, hi: float) -> float:
        """Mass outside [lo, hi], from the complementary error function."""
        root = math.sqrt(self.rate)
        half = 0.5 * self.mass
        return half * float(erfc(root * (hi - self.center)) + erfc(root * (self.center - lo)))


def sample_gaussian(g: GaussianFn, grid: Grid) -> GridFunction:
    """
    Evaluate ``g`` on ``grid``; the truncated mass goes to ``tail_mass``.

    A window narrower than center ± 6/sqrt(λ) is accepted with a warning.
    """
    margin = RESOLVED_SIGMAS / math.sqrt(g.rate)
    if g.center - margin < grid.lo or g.center + margin > grid.hi:
        logger.warning(
            "window [%.3g, %.3g] is narrow for Gaussian rate %.3g at %.3g",
            grid.lo,
            grid.hi,
            g.rate,
            g.center,
        )
    return GridFunction(
        grid=grid, values=g(grid.points), tail_mass=g.tail_mass(grid.lo, grid.hi)
    )


def gaussian_equality_pair(triple: YoungTriple) -> tuple[GaussianFn, GaussianFn]:
    """exp(-|p'| x²), exp(-|q'| x²): equality in the convolution inequality."""
    triple.require_sharp("gaussian_equality_pair")
    pc, qc, _ = triple.conjugates
    return GaussianFn(amplitude=1.0, rate=abs(pc)), GaussianFn(amplitude=1.0, rate=abs(qc))


def theorem2_gaussian_pair(triple: YoungTriple) -> tuple[GaussianFn, GaussianFn]:
    """Unit-mass sqrt(p/π) exp(-p x²), sqrt(q/π) exp(-q x²): equality in the rotated form."""
    triple.require_sharp("theorem2_gaussian_pair")
    return GaussianFn.unit(triple.p), GaussianFn.unit(triple.q)


def grid_for(*gaussians: GaussianFn, n: int, margin: float = 8.0) -> Grid:
    """Symmetric grid holding every Gaussian to ``margin`` standard widths."""
    reach = max(abs(g.center) + margin / math.sqrt(g.rate) for g in gaussians)
    return Grid.symmetric(reach, n)


def random_density(seed: int, grid: Grid, smoothness: float = 1.0) -> GridFunction:
    """
    Strictly positive unit-mass density, deterministic in ``seed``.

    A positive mixture of 3 to 8 Gaussians plus the floor
    1e-3·exp(-(x - m)²) around the window midpoint m, normalized to mass 1
    on ``grid``. Larger ``smoothness`` widens the mixture components.
    The returned function carries a Domination (M, ε) with
    ε = half the smallest component rate (capped at 1/2).
    """
    if not smoothness > 0.0:
        raise ValueError(f"smoothness must be positive, got {smoothness}")
    rng = np.random.default_rng(seed)
    k = int(rng.integers(3, 9))
    mid = grid.center
    spread = 0.25 * (grid.hi - grid.lo) / 2.0

    weights = rng.uniform(0.2, 1.0, k)
    rates = rng.uniform(0.5, 2.0, k) / smoothness**2
    centers = mid + spread * rng.uniform(-0.5, 0.5, k)

    x = grid.points
    values = DENSITY_FLOOR * np.exp(-((x - mid) ** 2))
    for w, lam, y in zip(weights, rates, centers, strict=True):
        values = values + w * np.exp(-lam * (x - y) ** 2)
    values = values / integrate_values(values, grid.step)

    eps = 0.5 * min(float(rates.min()), 1.0)
    log_ratio = np.log(values) + eps * (x - mid) ** 2
    domination = Domination(m=float(np.exp(log_ratio.max())), eps=eps, center=mid)

    logger.debug("random_density(seed=%d): %d components, eps=%.3g", seed, k, eps)
    return GridFunction(grid=grid, values=values, domination=domination)
