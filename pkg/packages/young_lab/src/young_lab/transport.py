"""
young_lab/transport.py

Monotone transport between one-dimensional densities: the increasing
map u with ∫_{-∞}^{u(t)} f = ∫_{-∞}^{t} F, its derivative from
u'(t) f(u(t)) = F(t), the rotated map Θ built from two such maps, and
numerical checks of the change of variables it induces.
"""

import logging
from collections.abc import Callable

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy import integrate
from scipy.interpolate import CubicHermiteSpline, CubicSpline

from young_common.models import QuadratureRule
from young_common.tracing import span, traced
from young_lab.errors import (
    MassMismatchError,
    NotDifferentiableError,
    OutOfWindowError,
    SupportLeakageError,
    ZeroMassError,
)
from young_lab.exponents import RotationPair
from young_lab.functions import Grid, GridFunction, integrate_values

logger = logging.getLogger(__name__)

MASS_RTOL = 1e-8
NEWTON_STEPS = 6
# Quantile band of the target that counts as resolved
WINDOW_QUANTILE = 1e-9
WINDOW_SHRINK = 0.95
# Outer quantiles excluded from the pushforward residual
RESIDUAL_QUANTILE = 1e-3
LEAK_TOL = 1e-6
DEFAULT_CHECK_POINTS = 1024

Integrand = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _frozen(values: object) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.setflags(write=False)
    return arr


class CdfTable(BaseModel):
    """Cumulative integral of a density sampled on its grid."""

    grid: Grid
    values: np.ndarray

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("values", mode="before")
    @classmethod
    def _as_array(cls, v: object) -> np.ndarray:
        return _frozen(v)

    @property
    def mass(self) -> float:
        return float(self.values[-1])

    @property
    def fractions(self) -> np.ndarray:
        return self.values / self.values[-1]

    def __call__(self, t: np.ndarray | float) -> np.ndarray:
        return np.interp(t, self.grid.points, self.values)


def cdf(f: GridFunction, rule: QuadratureRule = QuadratureRule.TRAPEZOID) -> CdfTable:
    """
    Cumulative integral from the left end of the window.

    Nondecreasing by construction. Strictly increasing where f > 0 until
    the running sum saturates at the total mass in double precision.

    Raises:
        ZeroMassError: f has no mass.
    """
    if f.mass <= 0.0:
        raise ZeroMassError("cdf of a zero-mass function")
    h = f.grid.step
    if rule is QuadratureRule.SIMPSON:
        values = integrate.cumulative_simpson(f.values, dx=h, initial=0.0)
    else:
        values = integrate.cumulative_trapezoid(f.values, dx=h, initial=0.0)
    return CdfTable(grid=f.grid, values=np.maximum.accumulate(np.maximum(values, 0.0)))


class TransportMap(BaseModel):
    """
    Increasing map u pushing the source density f onto the target F.

    ``values`` and ``derivative`` are sampled on the target grid. Only
    ``window`` (a sub-interval of the target grid) is resolved; evaluation
    outside it raises.
    """

    source: GridFunction
    target: GridFunction
    values: np.ndarray
    derivative: np.ndarray
    residual: float = Field(ge=0.0)
    window: tuple[float, float]

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("values", "derivative", mode="before")
    @classmethod
    def _as_array(cls, v: object) -> np.ndarray:
        return _frozen(v)

    @model_validator(mode="after")
    def _monotone(self) -> "TransportMap":
        n = self.target.grid.n
        if self.values.shape != (n,) or self.derivative.shape != (n,):
            raise ValueError("transport tables must match the target grid")
        if not np.all(self.derivative > 0.0):
            raise ValueError("transport derivative must be positive")
        inside = self.in_window(self.target.points)
        if not np.all(np.diff(self.values[inside]) > 0.0):
            raise ValueError("transport map must increase strictly on its window")
        return self

    def in_window(self, t: np.ndarray) -> np.ndarray:
        lo, hi = self.window
        return (t >= lo) & (t <= hi)

    def _require_window(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        if not np.all(self.in_window(t)):
            lo, hi = self.window
            raise OutOfWindowError(f"evaluation outside resolved window [{lo:.4g}, {hi:.4g}]")
        return t

    def _spline(self) -> CubicHermiteSpline:
        return CubicHermiteSpline(self.target.points, self.values, self.derivative)

    def __call__(self, t: np.ndarray | float) -> np.ndarray:
        """u(t), Hermite-interpolated from (values, derivative)."""
        return self._spline()(self._require_window(t))

    def slope(self, t: np.ndarray | float) -> np.ndarray:
        """u'(t) = F(t)/f(u(t)), with both densities normalized to unit mass."""
        t = self._require_window(t)
        u = self._spline()(t)
        ratio = _density_at(self.target, t) / _density_at(self.source, u)
        return ratio * (self.source.mass / self.target.mass)

    def inverse(self, x: np.ndarray | float) -> np.ndarray:
        """u⁻¹(x) for x in the image of the window."""
        inside = self.in_window(self.target.points)
        image = self.values[inside]
        x = np.asarray(x, dtype=float)
        if np.any(x < image[0]) or np.any(x > image[-1]):
            raise OutOfWindowError(
                f"inverse outside image [{image[0]:.4g}, {image[-1]:.4g}]"
            )
        return np.interp(x, image, self.target.points[inside])

    def defect(self) -> np.ndarray:
        """|u'_fd(t) f(u(t)) - F(t)| on the target grid, u'_fd by centered differences."""
        return _pushforward_defect(self.source, self.target, self.values)

    @property
    def image(self) -> tuple[float, float]:
        """Range of u over the grid points of the window."""
        image = self.values[self.in_window(self.target.points)]
        return float(image[0]), float(image[-1])


def _invert_cdf(
    x: np.ndarray, fractions: np.ndarray, density: np.ndarray, targets: np.ndarray
) -> np.ndarray:
    """Solve fraction(x) = target by bracketed Newton on the Hermite interpolant."""
    spline = CubicHermiteSpline(x, fractions, density)
    slope = spline.derivative()
    idx = np.clip(np.searchsorted(fractions, targets, side="right") - 1, 0, len(x) - 2)
    lo, hi = x[idx], x[idx + 1]
    c0, c1 = fractions[idx], fractions[idx + 1]
    width = np.where(c1 > c0, c1 - c0, 1.0)
    guess = lo + (hi - lo) * np.clip((targets - c0) / width, 0.0, 1.0)
    for _ in range(NEWTON_STEPS):
        d = slope(guess)
        step = np.where(d > 0.0, (spline(guess) - targets) / np.where(d > 0.0, d, 1.0), 0.0)
        guess = np.clip(guess - step, lo, hi)
    return guess


def _density_at(f: GridFunction, x: np.ndarray) -> np.ndarray:
    """Cubic interpolation of f, falling back to linear where the cubic dips."""
    cubic = CubicSpline(f.points, f.values)(x)
    linear = np.interp(x, f.points, f.values)
    return np.where(cubic > 0.0, cubic, linear)


def _pushforward_defect(f: GridFunction, F: GridFunction, values: np.ndarray) -> np.ndarray:
    finite_diff = np.gradient(values, F.grid.step)
    return np.abs(finite_diff * _density_at(f, values) - F.values)


def _window(t: np.ndarray, fractions: np.ndarray) -> tuple[float, float]:
    resolved = t[(fractions >= WINDOW_QUANTILE) & (fractions <= 1.0 - WINDOW_QUANTILE)]
    mid = 0.5 * (resolved[0] + resolved[-1])
    half = 0.5 * WINDOW_SHRINK * (resolved[-1] - resolved[0])
    return float(mid - half), float(mid + half)


@traced("monotone_map")
def monotone_map(f: GridFunction, F: GridFunction) -> TransportMap:
    """
    Increasing u with ∫_{-∞}^{u(t)} f = ∫_{-∞}^{t} F, sampled on F's grid.

    u comes from inverting f's Simpson CDF table at the target's CDF
    fractions; u' = F(t)/f(u(t)). The residual is the largest defect of
    u'_fd(t)·f(u(t)) = F(t) with u'_fd the centered finite difference of
    u, over the target quantiles [1e-3, 1 - 1e-3].

    Raises:
        MassMismatchError: ∫f ≠ ∫F beyond 1e-8 relative.
        NotDifferentiableError: f or F vanishes somewhere on its window.
    """
    mass_f, mass_F = f.mass, F.mass
    if abs(mass_f - mass_F) > MASS_RTOL * max(mass_f, mass_F, 1.0):
        raise MassMismatchError(f"masses differ: {mass_f!r} vs {mass_F!r}")
    if np.any(f.values <= 0.0):
        raise NotDifferentiableError("map not differentiable: source vanishes")
    if np.any(F.values <= 0.0):
        raise NotDifferentiableError("map not differentiable: target vanishes")

    t = F.points
    cdf_F = cdf(F, QuadratureRule.SIMPSON)
    targets = cdf_F.fractions

    if f.grid == F.grid and np.array_equal(f.values, F.values):
        values = t.copy()
        derivative = np.ones_like(t)
    else:
        cdf_f = cdf(f, QuadratureRule.SIMPSON)
        values = _invert_cdf(f.points, cdf_f.fractions, f.values / cdf_f.mass, targets)
        derivative = (F.values / cdf_F.mass) / (_density_at(f, values) / cdf_f.mass)

    band = (targets >= RESIDUAL_QUANTILE) & (targets <= 1.0 - RESIDUAL_QUANTILE)
    residual = float(_pushforward_defect(f, F, values)[band].max())

    window = _window(t, targets)
    logger.debug("monotone map: residual=%.3e window=[%.3g, %.3g]", residual, *window)
    return TransportMap(
        source=f,
        target=F,
        values=values,
        derivative=derivative,
        residual=residual,
        window=window,
    )


class RotatedTransport(BaseModel):
    """
    Θ = ᵗR T R with R(X, Y) = (cX - sY, sX + cY) and T(a, b) = (u(a), v(b)).

    JΘ(X, Y) = u'(cX - sY) v'(sX + cY).
    """

    u: TransportMap
    v: TransportMap
    rotation: RotationPair

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _positive_jacobian(self) -> "RotatedTransport":
        for name, m in (("u", self.u), ("v", self.v)):
            if not np.all(m.derivative > 0.0):
                raise ValueError(f"{name}' must be positive for a positive Jacobian")
        return self

    def arguments(self, X: np.ndarray, Y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """(a, b) = (cX - sY, sX + cY)."""
        c, s = self.rotation.c, self.rotation.s
        return c * X - s * Y, s * X + c * Y

    def inside(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """Mask of (X, Y) whose arguments fall in both resolved windows."""
        a, b = self.arguments(np.asarray(X, dtype=float), np.asarray(Y, dtype=float))
        return self.u.in_window(a) & self.v.in_window(b)


def rotated_transport(
    f: GridFunction,
    g: GridFunction,
    F: GridFunction,
    G: GridFunction,
    rotation: RotationPair,
) -> RotatedTransport:
    """Θ from u = monotone_map(f, F) and v = monotone_map(g, G)."""
    return RotatedTransport(u=monotone_map(f, F), v=monotone_map(g, G), rotation=rotation)


def theta(rt: RotatedTransport, X: np.ndarray | float, Y: np.ndarray | float) -> tuple[np.ndarray, np.ndarray]:
    """Θ(X, Y) = (c u(a) + s v(b), -s u(a) + c v(b))."""
    a, b = rt.arguments(np.asarray(X, dtype=float), np.asarray(Y, dtype=float))
    ua, vb = rt.u(a), rt.v(b)
    c, s = rt.rotation.c, rt.rotation.s
    return c * ua + s * vb, -s * ua + c * vb


def theta_jacobian(rt: RotatedTransport, X: np.ndarray | float, Y: np.ndarray | float) -> np.ndarray:
    """
    JΘ(X, Y) = u'(cX - sY) · v'(sX + cY).

    Raises:
        OutOfWindowError: (cX - sY, sX + cY) leaves the resolved windows.
    """
    a, b = rt.arguments(np.asarray(X, dtype=float), np.asarray(Y, dtype=float))
    return rt.u.slope(a) * rt.v.slope(b)


def rotated_coordinate(rt: RotatedTransport, X: np.ndarray | float, Y: np.ndarray | float) -> np.ndarray:
    """a(X, Y) = -s u(cX - sY) + c v(sX + cY), the second coordinate of Θ."""
    return theta(rt, X, Y)[1]


def rotated_coordinate_dY(rt: RotatedTransport, X: np.ndarray | float, Y: np.ndarray | float) -> np.ndarray:
    """∂a/∂Y = s² u'(cX - sY) + c² v'(sX + cY)."""
    a, b = rt.arguments(np.asarray(X, dtype=float), np.asarray(Y, dtype=float))
    c, s = rt.rotation.c, rt.rotation.s
    return s**2 * rt.u.slope(a) + c**2 * rt.v.slope(b)


def amgm_defect(u_slope: np.ndarray | float, v_slope: np.ndarray | float, rotation: RotationPair) -> np.ndarray:
    """s²U' + c²V' - U'^{s²} V'^{c²}, clipped at zero against rounding."""
    s2, c2 = rotation.s**2, rotation.c**2
    u_slope = np.asarray(u_slope, dtype=float)
    v_slope = np.asarray(v_slope, dtype=float)
    gap = s2 * u_slope + c2 * v_slope - u_slope**s2 * v_slope**c2
    return np.maximum(gap, 0.0)


def amgm_gap(rt: RotatedTransport, X: np.ndarray | float, Y: np.ndarray | float) -> np.ndarray:
    """
    AM-GM gap of the slopes at (X, Y); zero exactly where U' = V'.

    Raises:
        OutOfWindowError: As theta_jacobian.
    """
    a, b = rt.arguments(np.asarray(X, dtype=float), np.asarray(Y, dtype=float))
    return amgm_defect(rt.u.slope(a), rt.v.slope(b), rt.rotation)


def _tensor(lo: float, hi: float, n: int) -> tuple[np.ndarray, np.ndarray, float]:
    axis = np.linspace(lo, hi, n)
    X, Y = np.meshgrid(axis, axis, indexing="ij")
    return X, Y, axis[1] - axis[0]


def _integrate_2d(values: np.ndarray, h: float) -> float:
    return float(integrate_values(integrate_values(values, h, axis=1), h))


def change_of_variables_check(
    rt: RotatedTransport,
    integrand: Integrand,
    radius: float,
    n: int = DEFAULT_CHECK_POINTS,
) -> tuple[float, float]:
    """
    Both sides of ∫∫ φ(x, y) dx dy = ∫∫ φ(Θ(X, Y)) JΘ(X, Y) dX dY.

    ``integrand`` must be negligible outside the disc of ``radius``. The
    left side is integrated on [-radius, radius]², the right side on a
    box containing Θ⁻¹ of that square, with points outside the resolved
    windows contributing zero.

    Raises:
        SupportLeakageError: φ carries more than 1e-6 of its mass outside
            the disc, or the transport windows do not reach the square.
    """
    with span("change_of_variables_check", n=n, radius=radius) as current:
        X, Y, h = _tensor(-radius, radius, n)
        phi = np.asarray(integrand(X, Y), dtype=float)
        total = _integrate_2d(np.abs(phi), h)
        outside = _integrate_2d(np.where(np.hypot(X, Y) > radius, np.abs(phi), 0.0), h)
        if total > 0.0 and outside > LEAK_TOL * total:
            raise SupportLeakageError(
                f"integrand mass outside radius {radius}: {outside / total:.2e}"
            )
        direct = _integrate_2d(phi, h)

        reach = np.sqrt(2.0) * radius
        bounds = []
        for m in (rt.u, rt.v):
            lo, hi = m.image
            if lo > -reach or hi < reach:
                raise SupportLeakageError(
                    f"transport image [{lo:.3g}, {hi:.3g}] does not cover ±{reach:.3g}"
                )
            pre = m.inverse(np.array([-reach, reach]))
            bounds.append(float(np.max(np.abs(pre))))
        box = float(np.hypot(*bounds))
        current.set_attribute("box", box)

        X, Y, h = _tensor(-box, box, n)
        mask = rt.inside(X, Y)
        mapped = np.zeros_like(X)
        x, y = theta(rt, X[mask], Y[mask])
        mapped[mask] = np.asarray(integrand(x, y), dtype=float) * theta_jacobian(
            rt, X[mask], Y[mask]
        )
        transported = _integrate_2d(mapped, h)

    logger.debug("change of variables: %.10g vs %.10g", direct, transported)
    return direct, transported


def substitution_mass_check(
    rt: RotatedTransport,
    h: GridFunction,
    X: float,
    exponent: float,
    n: int = DEFAULT_CHECK_POINTS,
) -> tuple[float, float]:
    """
    Both sides of ∫ h^e(a(X, Y)) ∂a/∂Y dY = ∫ h^e for a fixed X.

    Y runs over the segment where (cX - sY, sX + cY) stays in both windows.

    Raises:
        SupportLeakageError: a(X, ·) does not sweep the support of h.
    """
    c, s = rt.rotation.c, rt.rotation.s
    (ua, ub), (va, vb) = rt.u.window, rt.v.window
    y_lo = max((c * X - ub) / s, (va - s * X) / c)
    y_hi = min((c * X - ua) / s, (vb - s * X) / c)
    if not y_lo < y_hi:
        raise SupportLeakageError(f"no Y keeps X={X} inside both windows")
    inset = 1e-9 * (y_hi - y_lo)
    y_lo, y_hi = y_lo + inset, y_hi - inset

    Y = np.linspace(y_lo, y_hi, n)
    XX = np.full_like(Y, X)
    a = rotated_coordinate(rt, XX, Y)
    powered = h.powered(exponent)
    lhs = float(integrate_values(powered.at(a) * rotated_coordinate_dY(rt, XX, Y), Y[1] - Y[0]))
    rhs = float(integrate_values(powered.values, h.grid.step))

    swept = (h.points >= a[0]) & (h.points <= a[-1])
    missed = float(integrate_values(np.where(swept, 0.0, powered.values), h.grid.step))
    if rhs > 0.0 and missed > LEAK_TOL * rhs:
        raise SupportLeakageError(
            f"a(X, ·) sweeps [{a[0]:.3g}, {a[-1]:.3g}], missing {missed / rhs:.2e} of the mass"
        )
    return lhs, rhs
