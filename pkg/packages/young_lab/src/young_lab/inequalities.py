"""
young_lab/inequalities.py

Both sides of the rotated bilinear inequality

    (∫ (∫ f^{1/p}(cx - sy) g^{1/q}(sx + cy) dx)^r dy)^{1/r}
        ≤ K(p, q, r) (∫f)^{1/p} (∫g)^{1/q}     (≥ when p, q, r < 1)

and of its transported form, by tensor trapezoid quadrature on a
window aligned with the unrotated axes. Inner integrals are tabulated
row by row; rotated arguments are read off the sampled powers by
linear interpolation.
"""

import logging
import math

import numpy as np

from young_common.models import CheckKind, GridInfo, Regime, VerificationReport
from young_common.tracing import span
from young_lab.constants import k_constant
from young_lab.errors import MassMismatchError, ZeroMassError
from young_lab.exponents import RotationPair, YoungTriple, dual_triple, rotation_params
from young_lab.functions import GaussianFn, Grid, GridFunction, integrate_values, pointwise_power

logger = logging.getLogger(__name__)

DEFAULT_POINTS = 1024
DEFAULT_TOLERANCE = 5e-3
MASS_MATCH_RTOL = 1e-6
# Rows of the tensor grid evaluated per vectorized block
ROW_BLOCK = 128


def quadrature_window(f: GridFunction, g: GridFunction) -> float:
    """
    Half-width L of the square [-L, L]² holding every (x, y) whose
    rotated arguments land inside both sample windows.
    """
    return math.hypot(f.support_radius, g.support_radius)


def _inner_integrals(
    fp: GridFunction,
    gp: GridFunction,
    rotation: RotationPair,
    axis: np.ndarray,
    *,
    inner_first: bool,
) -> np.ndarray:
    """
    Tabulate ∫ fp(cX - sY) gp(sX + cY) over one axis for every value of the other.

    With ``inner_first`` the integration runs over the first coordinate
    (x in the bilinear form); otherwise over the second (Y in the
    transported form).
    """
    c, s = rotation.c, rotation.s
    h = axis[1] - axis[0]
    out = np.empty_like(axis)
    running = axis[None, :]
    for start in range(0, axis.size, ROW_BLOCK):
        fixed = axis[start : start + ROW_BLOCK, None]
        first, second = (running, fixed) if inner_first else (fixed, running)
        a = c * first - s * second
        b = s * first + c * second
        out[start : start + ROW_BLOCK] = integrate_values(fp.at(a) * gp.at(b), h, axis=1)
    return out


def _profile(
    f: GridFunction,
    g: GridFunction,
    triple: YoungTriple,
    n: int,
    *,
    f_power: float,
    g_power: float,
    inner_first: bool,
) -> tuple[np.ndarray, float]:
    L = quadrature_window(f, g)
    axis = np.linspace(-L, L, n)
    logger.debug("tensor quadrature %d² on [-%.3g, %.3g]²", n, L, L)
    inner = _inner_integrals(
        f.powered(f_power),
        g.powered(g_power),
        rotation_params(triple),
        axis,
        inner_first=inner_first,
    )
    return inner, axis[1] - axis[0]


def bilinear_form(
    f: GridFunction, g: GridFunction, triple: YoungTriple, n: int = DEFAULT_POINTS
) -> float:
    """
    (∫ (∫ f^{1/p}(cx - sy) g^{1/q}(sx + cy) dx)^r dy)^{1/r} on an n × n grid.

    The same formula serves both regimes.

    Raises:
        RegimeError: Boundary triple.
    """
    triple.require_sharp("bilinear_form")
    with span("bilinear_form", n=n, regime=str(triple.regime)):
        inner, h = _profile(
            f, g, triple, n, f_power=1.0 / triple.p, g_power=1.0 / triple.q, inner_first=True
        )
        total = float(integrate_values(pointwise_power(inner, triple.r), h))
    return total ** (1.0 / triple.r)


def lemma1_rhs(
    F: GridFunction, G: GridFunction, triple: YoungTriple, n: int = DEFAULT_POINTS
) -> float:
    """∫ (∫ F^{r/p}(cX - sY) G^{r/q}(sX + cY) dY)^{1/r} dX on an n × n grid."""
    triple.require_sharp("lemma1_rhs")
    r = triple.r
    inner, h = _profile(
        F, G, triple, n, f_power=r / triple.p, g_power=r / triple.q, inner_first=False
    )
    return float(integrate_values(pointwise_power(inner, 1.0 / r), h))


def gaussian_closed_form(fa: GaussianFn, ga: GaussianFn, triple: YoungTriple) -> float:
    """
    Exact bilinear form of two Gaussians.

    With A = α/p, B = β/q and P = Ac² + Bs², the inner integral is
    a^{1/p} b^{1/q} sqrt(π/P) exp(-(AB/P) y²), which gives

        a^{1/p} b^{1/q} sqrt(π/P) (πP / (r A B))^{1/(2r)}.

    Centers drop out: the form is invariant under joint translation.
    """
    triple.require_sharp("gaussian_closed_form")
    if fa.amplitude == 0.0 or ga.amplitude == 0.0:
        return 0.0
    rot = rotation_params(triple)
    p, q, r = triple.p, triple.q, triple.r
    A, B = fa.rate / p, ga.rate / q
    P = A * rot.c**2 + B * rot.s**2
    log_value = (
        math.log(fa.amplitude) / p
        + math.log(ga.amplitude) / q
        + 0.5 * math.log(math.pi / P)
        + math.log(math.pi * P / (r * A * B)) / (2.0 * r)
    )
    return math.exp(log_value)


def theorem2_rhs(f: GridFunction, g: GridFunction, triple: YoungTriple) -> float:
    """K(p, q, r) (∫f)^{1/p} (∫g)^{1/q}."""
    return k_constant(triple) * f.mass ** (1.0 / triple.p) * g.mass ** (1.0 / triple.q)


def _grid_info(f: GridFunction, g: GridFunction, n: int) -> GridInfo:
    L = quadrature_window(f, g)
    return GridInfo(n=n, window=(-L, L))


def verify_theorem2(
    f: GridFunction,
    g: GridFunction,
    triple: YoungTriple,
    tolerance: float = DEFAULT_TOLERANCE,
    n: int = DEFAULT_POINTS,
) -> VerificationReport:
    """
    Bilinear form against K (∫f)^{1/p} (∫g)^{1/q}.

    Upper bound for Classical triples, lower bound for Reverse ones.
    Zero mass gives a Degenerate report.
    """
    triple.require_sharp("verify_theorem2")
    grid = _grid_info(f, g, n)
    if f.mass <= 0.0 or g.mass <= 0.0:
        logger.warning("theorem2 check degenerate: zero mass")
        return VerificationReport.degenerate(
            triple.regime, tolerance, "zero mass", grid=grid, check=CheckKind.THEOREM2
        )
    lhs = bilinear_form(f, g, triple, n)
    rhs = theorem2_rhs(f, g, triple)
    return VerificationReport.evaluate(
        lhs, rhs, triple.regime, tolerance, grid=grid, check=CheckKind.THEOREM2
    )


def _masses_match(a: GridFunction, b: GridFunction) -> bool:
    return abs(a.mass - b.mass) <= MASS_MATCH_RTOL * max(a.mass, b.mass, 1.0)


def verify_lemma1(
    f: GridFunction,
    g: GridFunction,
    F: GridFunction,
    G: GridFunction,
    triple: YoungTriple,
    tolerance: float = DEFAULT_TOLERANCE,
    n: int = DEFAULT_POINTS,
) -> VerificationReport:
    """
    bilinear_form(f, g) ≤ lemma1_rhs(F, G) for a Classical triple.

    Raises:
        RegimeError: The triple is not Classical.
        MassMismatchError: ∫f ≠ ∫F or ∫g ≠ ∫G beyond 1e-6.
    """
    triple.require(Regime.CLASSICAL, "verify_lemma1")
    if not (_masses_match(f, F) and _masses_match(g, G)):
        raise MassMismatchError(
            f"masses differ: f={f.mass:.9g} F={F.mass:.9g} g={g.mass:.9g} G={G.mass:.9g}"
        )
    lhs = bilinear_form(f, g, triple, n)
    rhs = lemma1_rhs(F, G, triple, n)
    return VerificationReport.evaluate(
        lhs,
        rhs,
        triple.regime,
        tolerance,
        grid=_grid_info(F, G, n),
        check=CheckKind.LEMMA1,
    )


def dual_reduction_check(
    F: GridFunction, G: GridFunction, triple: YoungTriple, n: int = DEFAULT_POINTS
) -> tuple[float, float]:
    """
    Both sides of lemma1_rhs(F, G) = bilinear_form(F̌, G)^{r₁} on the dual triple.

    The transported form of (p, q, r) is the bilinear form of
    (p₁, q₁, r₁) = (p/r, q/r, 1/r), read with F reflected and raised to r₁.
    """
    dual = dual_triple(triple)
    transported = lemma1_rhs(F, G, triple, n)
    reduced = bilinear_form(F.reflected(), G, dual, n) ** dual.r
    return transported, reduced


def _witness_profile(
    f: GridFunction, g: GridFunction, triple: YoungTriple, n: int
) -> tuple[np.ndarray, Grid]:
    inner, _ = _profile(
        f, g, triple, n, f_power=1.0 / triple.p, g_power=1.0 / triple.q, inner_first=True
    )
    L = quadrature_window(f, g)
    return inner, Grid(lo=-L, hi=L, n=n)


def dual_witness(
    f: GridFunction, g: GridFunction, triple: YoungTriple, n: int = DEFAULT_POINTS
) -> GridFunction:
    """
    The y-profile h with ‖h‖_{r'} = 1 that attains the bilinear form by duality.

    h = inner^{r-1} / ‖inner‖_r^{r-1}, where inner(y) is the x-integral.

    Raises:
        RegimeError: The triple is not Classical.
        ZeroMassError: The inner integral vanishes identically.
    """
    triple.require(Regime.CLASSICAL, "dual_witness")
    inner, grid = _witness_profile(f, g, triple, n)
    if not np.any(inner > 0.0):
        raise ZeroMassError("inner integral vanishes identically")
    r = triple.r
    norm = float(integrate_values(pointwise_power(inner, r), grid.step)) ** (1.0 / r)
    return GridFunction(grid=grid, values=pointwise_power(inner, r - 1.0) / norm ** (r - 1.0))


def dual_pairing(
    f: GridFunction,
    g: GridFunction,
    h: GridFunction,
    triple: YoungTriple,
    n: int = DEFAULT_POINTS,
) -> float:
    """∫∫ f^{1/p}(cx - sy) g^{1/q}(sx + cy) h(y) dx dy on the witness grid."""
    inner, grid = _witness_profile(f, g, triple, n)
    return float(integrate_values(inner * h.at(grid.points), grid.step))
