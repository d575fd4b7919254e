"""
young_lab/extremizers.py

Brascamp-Lieb functionals in dimension one or two, the
maximizer-convolution chain Φ(f)Φ(g) ≤ M Φ(f ⊛ g), Gaussian fits for
the equality cases, and perturbative scans of the sharp ratio around
the Gaussian pair.
"""

import itertools
import logging
import math
from collections.abc import Sequence
from enum import StrEnum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy.optimize import least_squares

from young_common.models import CheckKind, ConvolutionMethod, GridInfo, Regime, VerificationReport
from young_common.tracing import span, traced
from young_lab.constants import k_constant
from young_lab.convolution import convolve
from young_lab.errors import FitError, MassMismatchError, PerturbationError, ZeroMassError
from young_lab.exponents import YoungTriple, conjugate, rotation_params
from young_lab.functions import (
    GaussianFn,
    Grid,
    GridFunction,
    integrate_values,
    sample_gaussian,
    theorem2_gaussian_pair,
)
from young_lab.inequalities import DEFAULT_POINTS, bilinear_form

logger = logging.getLogger(__name__)

DEFAULT_BL_POINTS = 512
DEFAULT_TOLERANCE = 5e-3
UNIT_MASS_TOL = 1e-6
ROW_BLOCK = 128


class BLInstance(BaseModel):
    """
    Data (n, u_i, α_i) of ∫_{R^n} ∏ f_i^{α_i}(⟨x, u_i⟩) dx ≤ M ∏ (∫f_i)^{α_i}.

    ``sharp`` is the smallest M when it is known in closed form.
    """

    n: int = Field(ge=1, le=2)
    vectors: tuple[tuple[float, ...], ...]
    alphas: tuple[float, ...]
    sharp: float | None = Field(default=None, gt=0.0)

    model_config = ConfigDict(frozen=True)

    @field_validator("alphas")
    @classmethod
    def _positive(cls, alphas: tuple[float, ...]) -> tuple[float, ...]:
        if any(not a > 0.0 for a in alphas):
            raise ValueError(f"weights must be positive, got {alphas}")
        return alphas

    @model_validator(mode="after")
    def _shape(self) -> "BLInstance":
        m = len(self.vectors)
        if len(self.alphas) != m:
            raise ValueError(f"{m} vectors but {len(self.alphas)} weights")
        if not self.n <= m <= 3:
            raise ValueError(f"need n <= m <= 3, got n={self.n}, m={m}")
        for u in self.vectors:
            if len(u) != self.n:
                raise ValueError(f"vector {u} is not in dimension {self.n}")
            if not any(x != 0.0 for x in u):
                raise ValueError("vectors must be nonzero")
        return self

    @property
    def m(self) -> int:
        return len(self.vectors)


def young_instance(triple: YoungTriple) -> BLInstance:
    """
    The rotated bilinear form as a planar instance with three functions.

    u = (c, -s), (s, c), (0, 1) and α = (1/p, 1/q, 1/r'); the third
    function is the r'-th power of the duality witness. Sharp constant K.

    Raises:
        RegimeError: The triple is not Classical (α₃ = 1/r' must be positive).
    """
    triple.require(Regime.CLASSICAL, "young_instance")
    rot = rotation_params(triple)
    return BLInstance(
        n=2,
        vectors=((rot.c, -rot.s), (rot.s, rot.c), (0.0, 1.0)),
        alphas=(1.0 / triple.p, 1.0 / triple.q, 1.0 / conjugate(triple.r)),
        sharp=k_constant(triple),
    )


def product_instance() -> BLInstance:
    """∫∫ f(x) g(y) = ∫f ∫g: M = 1 and every tuple is a maximizer."""
    return BLInstance(n=2, vectors=((1.0, 0.0), (0.0, 1.0)), alphas=(1.0, 1.0), sharp=1.0)


def lab_grid(triple: YoungTriple, n: int = 1024) -> Grid:
    """Common grid of the extremizer lab: 8 widths of the slowest Gaussian."""
    return Grid.for_rate(min(triple.p, triple.q, triple.r), n)


def maximizer_tuple(triple: YoungTriple, grid: Grid | None = None) -> list[GridFunction]:
    """Unit-mass Gaussians of rates (p, q, r): a maximizer of the Young instance."""
    grid = grid or lab_grid(triple)
    return [
        sample_gaussian(GaussianFn.unit(rate), grid)
        for rate in (triple.p, triple.q, triple.r)
    ]


def _box_half_width(instance: BLInstance, fs: Sequence[GridFunction]) -> float:
    """Half-width of a box containing {x : ⟨x, u_i⟩ in the window of f_i for all i}."""
    radii = [f.support_radius for f in fs]
    vectors = [np.asarray(u, dtype=float) for u in instance.vectors]
    if instance.n == 1:
        return min(r / abs(u[0]) for r, u in zip(radii, vectors, strict=True))
    best = math.inf
    for i, j in itertools.combinations(range(instance.m), 2):
        M = np.vstack([vectors[i], vectors[j]])
        if abs(np.linalg.det(M)) < 1e-12:
            continue
        bound = np.linalg.norm(np.linalg.inv(M), 2) * math.hypot(radii[i], radii[j])
        best = min(best, float(bound))
    return best


def bl_integral(
    instance: BLInstance, fs: Sequence[GridFunction], n_points: int = DEFAULT_BL_POINTS
) -> float:
    """Φ = ∫_{R^n} ∏ f_i^{α_i}(⟨x, u_i⟩) dx by tensor trapezoid quadrature."""
    if len(fs) != instance.m:
        raise ValueError(f"instance takes {instance.m} functions, got {len(fs)}")
    L = _box_half_width(instance, fs)
    axis = np.linspace(-L, L, n_points)
    h = axis[1] - axis[0]
    powered = [f.powered(a) for f, a in zip(fs, instance.alphas, strict=True)]

    if instance.n == 1:
        product = np.ones_like(axis)
        for fp, u in zip(powered, instance.vectors, strict=True):
            product = product * fp.at(u[0] * axis)
        return float(integrate_values(product, h))

    with span("bl_integral", n=n_points, m=instance.m):
        rows = np.empty_like(axis)
        for start in range(0, n_points, ROW_BLOCK):
            x = axis[start : start + ROW_BLOCK, None]
            y = axis[None, :]
            product = np.ones((x.shape[0], n_points))
            for fp, (u1, u2) in zip(powered, instance.vectors, strict=True):
                product = product * fp.at(u1 * x + u2 * y)
            rows[start : start + ROW_BLOCK] = integrate_values(product, h, axis=1)
        return float(integrate_values(rows, h))


def bl_functional(
    instance: BLInstance, fs: Sequence[GridFunction], n_points: int = DEFAULT_BL_POINTS
) -> float:
    """
    Φ(f) / ∏ (∫f_i)^{α_i}, the ratio bounded by the sharp constant M.

    Raises:
        ZeroMassError: Some f_i has no mass.
    """
    masses = [f.mass for f in fs]
    if any(m <= 0.0 for m in masses):
        raise ZeroMassError("Brascamp-Lieb ratio needs positive masses")
    norm = math.prod(m**a for m, a in zip(masses, instance.alphas, strict=True))
    return bl_integral(instance, fs, n_points) / norm


def convolve_tuple(
    fs: Sequence[GridFunction],
    gs: Sequence[GridFunction],
    method: ConvolutionMethod = ConvolutionMethod.DIRECT,
) -> list[GridFunction]:
    """
    Componentwise convolution (f_1 ∗ g_1, ..., f_m ∗ g_m).

    Raises:
        ValueError: Tuples of different lengths.
        ZeroMassError: A component vanishes; maximizers have nonzero components.
        StepMismatchError: Propagated from the convolution engine.
    """
    if len(fs) != len(gs):
        raise ValueError(f"tuples differ in length: {len(fs)} vs {len(gs)}")
    if any(f.is_zero for f in (*fs, *gs)):
        raise ZeroMassError("tuple component vanishes identically")
    return [convolve(f, g, method).result for f, g in zip(fs, gs, strict=True)]


def estimate_sharp_constant(
    instance: BLInstance, grid: Grid, rates: Sequence[float], n_points: int = DEFAULT_BL_POINTS
) -> float:
    """M from the Gaussian tuple with the given rates, never from a formula."""
    tuple_ = [sample_gaussian(GaussianFn.unit(rate), grid) for rate in rates]
    return bl_functional(instance, tuple_, n_points)


def supermodularity_check(
    instance: BLInstance,
    f: Sequence[GridFunction],
    g: Sequence[GridFunction],
    m_est: float,
    tolerance: float = DEFAULT_TOLERANCE,
    n_points: int = DEFAULT_BL_POINTS,
) -> VerificationReport:
    """
    Φ(f)·Φ(g) ≤ M·Φ(f ⊛ g) for unit-mass tuples.

    Equality holds when both tuples are maximizers.

    Raises:
        MassMismatchError: A component does not have unit mass.
    """
    for component in (*f, *g):
        if abs(component.mass - 1.0) > UNIT_MASS_TOL:
            raise MassMismatchError(f"tuple component has mass {component.mass!r}, not 1")
    lhs = bl_integral(instance, f, n_points) * bl_integral(instance, g, n_points)
    rhs = m_est * bl_integral(instance, convolve_tuple(f, g), n_points)
    return VerificationReport.evaluate(
        lhs,
        rhs,
        Regime.CLASSICAL,
        tolerance,
        grid=GridInfo(n=n_points, window=(f[0].grid.lo, f[0].grid.hi)),
        check=CheckKind.SUPERMODULARITY,
    )


class GaussianFit(BaseModel):
    """Best a·exp(-λ(x - y)²) for sampled data, with its relative L² residual."""

    amplitude: float = Field(ge=0.0, allow_inf_nan=False)
    rate: float = Field(gt=0.0, allow_inf_nan=False)
    center: float = Field(allow_inf_nan=False)
    residual: float = Field(ge=0.0, allow_inf_nan=False)

    model_config = ConfigDict(frozen=True)

    def to_gaussian(self) -> GaussianFn:
        return GaussianFn(amplitude=self.amplitude, rate=self.rate, center=self.center)


def fit_gaussian(f: GridFunction) -> GaussianFit:
    """
    Moment-matched Gaussian refined by one least-squares pass.

    mass → a·sqrt(π/λ), mean → y, variance → 1/(2λ).

    Raises:
        FitError: Zero mass or zero variance.
    """
    x, h = f.points, f.grid.step
    mass = f.mass
    if mass <= 0.0:
        raise FitError("cannot fit a zero-mass function")
    mean = float(integrate_values(x * f.values, h)) / mass
    variance = float(integrate_values((x - mean) ** 2 * f.values, h)) / mass
    if variance <= (1e-6 * h) ** 2:
        raise FitError(f"variance {variance!r} too small to fit")

    rate = 0.5 / variance
    amplitude = mass * math.sqrt(rate / math.pi)

    def model(params: np.ndarray) -> np.ndarray:
        a, log_rate, y = params
        return a * np.exp(-math.exp(log_rate) * (x - y) ** 2)

    scale = float(np.max(f.values))
    solution = least_squares(
        lambda params: (model(params) - f.values) / scale,
        x0=np.array([amplitude, math.log(rate), mean]),
        xtol=1e-14,
        ftol=1e-14,
        gtol=1e-14,
    )
    a, log_rate, y = solution.x
    fitted = model(solution.x)
    denom = math.sqrt(float(integrate_values(f.values**2, h)))
    residual = math.sqrt(float(integrate_values((fitted - f.values) ** 2, h))) / denom
    logger.debug("gaussian fit: a=%.6g rate=%.6g y=%.6g residual=%.2e", a, math.exp(log_rate), y, residual)
    return GaussianFit(amplitude=abs(a), rate=math.exp(log_rate), center=y, residual=residual)


class Direction(StrEnum):
    """Named perturbation directions around the Gaussian pair."""

    ZERO = "zero"
    COSINE = "cosine"      # f0·cos 2x
    QUARTIC = "quartic"    # f0·x⁴e^{-x²}·e²/4, peak 1
    TANH = "tanh"          # f0·tanh x, odd
    DILATION = "dilation"  # d/dσ of f0(x/σ), g0(x/σ) at σ = 1, both functions


class Perturbation(BaseModel):
    """Signed perturbation δ_f, δ_g of the Gaussian pair (None leaves it fixed)."""

    name: str
    f: np.ndarray | None = None
    g: np.ndarray | None = None

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


def _dilation_derivative(f: GridFunction) -> np.ndarray:
    """d/dσ f(x/σ) at σ = 1, i.e. -x f'(x)."""
    return -f.points * np.gradient(f.values, f.grid.step)


def perturbation(direction: Direction, base_f: GridFunction, base_g: GridFunction) -> Perturbation:
    """Build a named direction on the grids of the base pair."""
    x, f0 = base_f.points, base_f.values
    match direction:
        case Direction.ZERO:
            return Perturbation(name=str(direction), f=np.zeros_like(f0))
        case Direction.COSINE:
            return Perturbation(name=str(direction), f=f0 * np.cos(2.0 * x))
        case Direction.QUARTIC:
            return Perturbation(name=str(direction), f=f0 * x**4 * np.exp(2.0 - x**2) / 4.0)
        case Direction.TANH:
            return Perturbation(name=str(direction), f=f0 * np.tanh(x))
        case Direction.DILATION:
            return Perturbation(
                name=str(direction),
                f=_dilation_derivative(base_f),
                g=_dilation_derivative(base_g),
            )
    raise ValueError(f"unknown direction {direction!r}")


class StationarityScan(BaseModel):
    """Sharp ratio bilinear_form / (K (∫f)^{1/p} (∫g)^{1/q}) along a ray."""

    direction: str
    regime: Regime
    epsilons: np.ndarray
    ratios: np.ndarray

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def rows(self) -> list[tuple[float, float]]:
        return list(zip(self.epsilons.tolist(), self.ratios.tolist(), strict=True))


def _perturbed(base: GridFunction, delta: np.ndarray | None, eps: float) -> GridFunction:
    if delta is None or eps == 0.0:
        return base
    values = base.values + eps * delta
    if np.any(values < 0.0):
        raise PerturbationError(f"perturbation at eps={eps:g} leaves the nonnegative cone")
    return base.with_values(values).normalized()


def theorem2_pair(triple: YoungTriple, grid: Grid | None = None) -> tuple[GridFunction, GridFunction]:
    """Unit-mass Gaussian pair of rates (p, q) sampled on one grid."""
    grid = grid or Grid.for_rate(min(triple.p, triple.q))
    fa, ga = theorem2_gaussian_pair(triple)
    return sample_gaussian(fa, grid), sample_gaussian(ga, grid)


@traced("stationarity_scan")
def stationarity_scan(
    triple: YoungTriple,
    direction: Perturbation | Direction,
    steps: int = 2,
    eps_max: float = 0.05,
    base: tuple[GridFunction, GridFunction] | None = None,
    n: int = DEFAULT_POINTS,
) -> StationarityScan:
    """
    Ratios at ε = eps_max·k/steps for k = -steps..steps.

    ``base`` defaults to the unit-mass Gaussian pair of rates (p, q); a
    named ``direction`` is built on it. Each perturbed function is
    renormalized to unit mass.

    Raises:
        PerturbationError: f + εδ turns negative somewhere.
    """
    triple.require_sharp("stationarity_scan")
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    f0, g0 = base if base is not None else theorem2_pair(triple)
    f0, g0 = f0.normalized(), g0.normalized()
    if isinstance(direction, Direction):
        direction = perturbation(direction, f0, g0)
    epsilons = eps_max * np.arange(-steps, steps + 1) / steps
    k = k_constant(triple)
    ratios = []
    for eps in epsilons.tolist():
        f = _perturbed(f0, direction.f, eps)
        g = _perturbed(g0, direction.g, eps)
        ratios.append(bilinear_form(f, g, triple, n) / k)
    logger.info("scan %s: %s", direction.name, ", ".join(f"{r:.6f}" for r in ratios))
    return StationarityScan(
        direction=direction.name,
        regime=triple.regime,
        epsilons=epsilons,
        ratios=np.array(ratios),
    )


def scan_derivatives(scan: StationarityScan) -> tuple[float, float]:
    """Central first derivative and second difference at ε = 0."""
    mid = len(scan.epsilons) // 2
    if len(scan.epsilons) % 2 == 0 or scan.epsilons[mid] != 0.0:
        raise ValueError("scan must be symmetric around eps = 0")
    h = float(scan.epsilons[mid + 1] - scan.epsilons[mid])
    lo, at, hi = scan.ratios[mid - 1], scan.ratios[mid], scan.ratios[mid + 1]
    return float((hi - lo) / (2.0 * h)), float(hi - 2.0 * at + lo)
