"""
young_lab/constants.py

Sharp constants: C_t, K(p, q, r) and the N-dimensional Young constant
(C_p C_q / C_r)^N. Powers are evaluated through exp/log in double
precision.
"""

import math

from pydantic import BaseModel, ConfigDict, Field

from young_common.models import Regime
from young_lab.errors import ExponentDomainError
from young_lab.exponents import YoungTriple, conjugate, is_one


class SharpConstants(BaseModel):
    """All constants of one triple in dimension N."""

    c_p: float = Field(gt=0.0)
    c_q: float = Field(gt=0.0)
    c_r: float = Field(gt=0.0)
    k: float = Field(gt=0.0)
    young_nd: float = Field(gt=0.0)
    dimension: int = Field(ge=1)

    model_config = ConfigDict(frozen=True)


def c_t(t: float) -> float:
    """
    C_t = sqrt(t^{1/t} / |t'|^{1/t'}), with the limit value 1 at t = 1.

    Raises:
        ExponentDomainError: t ≤ 0.
    """
    if not t > 0.0 or not math.isfinite(t):
        raise ExponentDomainError(f"exponent must be positive and finite, got {t!r}")
    if is_one(t):
        return 1.0
    tc = conjugate(t)
    return math.exp(0.5 * (math.log(t) / t - math.log(abs(tc)) / tc))


def k_constant(triple: YoungTriple) -> float:
    """K(p, q, r) = p^{1/2p} q^{1/2q} / r^{1/2r}."""
    p, q, r = triple.p, triple.q, triple.r
    return math.exp(
        math.log(p) / (2 * p) + math.log(q) / (2 * q) - math.log(r) / (2 * r)
    )


def young_constant(triple: YoungTriple, n: int = 1) -> float:
    """(C_p C_q / C_r)^n, the sharp constant of Young's inequality on R^n."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    one_dim = c_t(triple.p) * c_t(triple.q) / c_t(triple.r)
    return one_dim**n


def sharp_constants(triple: YoungTriple, n: int = 1) -> SharpConstants:
    """Every constant of ``triple`` in one record."""
    return SharpConstants(
        c_p=c_t(triple.p),
        c_q=c_t(triple.q),
        c_r=c_t(triple.r),
        k=k_constant(triple),
        young_nd=young_constant(triple, n),
        dimension=n,
    )


def bound_direction(triple: YoungTriple) -> str:
    """'<=' for Classical, '>=' for Reverse, '' otherwise."""
    return {Regime.CLASSICAL: "<=", Regime.REVERSE: ">="}.get(triple.regime, "")
