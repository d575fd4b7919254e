"""
young_lab/exponents.py

Young exponent triples (p, q, r) with 1/p + 1/q = 1 + 1/r, their
conjugates, the rotation parameters (c, s) of the rotated form, and
the dual-triple construction that maps the Classical regime onto the
Reverse one.
"""

import logging
import math

from pydantic import BaseModel, ConfigDict, Field, model_validator

from young_common.models import Regime
from young_lab.errors import (
    BoundaryExponentError,
    ExponentDomainError,
    InvalidTripleError,
    RegimeError,
)

logger = logging.getLogger(__name__)

RELATION_TOL = 1e-12
ONE_TOL = 1e-12


def is_one(t: float) -> bool:
    """True when ``t`` sits on the boundary exponent 1."""
    return abs(t - 1.0) < ONE_TOL


def conjugate(t: float) -> float:
    """
    Conjugate exponent t' with 1/t + 1/t' = 1.

    t' is negative when t < 1.

    Raises:
        ExponentDomainError: t is not a positive real.
        BoundaryExponentError: t = 1.
    """
    if not t > 0.0 or not math.isfinite(t):
        raise ExponentDomainError(f"exponent must be positive and finite, got {t!r}")
    if is_one(t):
        raise BoundaryExponentError("conjugate undefined at boundary")
    return t / (t - 1.0)


def classify(p: float, q: float, r: float) -> Regime:
    """Regime of an exponent triple."""
    exponents = (p, q, r)
    if any(is_one(t) for t in exponents):
        return Regime.BOUNDARY
    if min(exponents) > 1.0:
        return Regime.CLASSICAL
    if max(exponents) < 1.0:
        return Regime.REVERSE
    return Regime.BOUNDARY


def relation_defect(p: float, q: float, r: float) -> float:
    """Relative error of 1/p + 1/q = 1 + 1/r."""
    rhs = 1.0 + 1.0 / r
    return abs(1.0 / p + 1.0 / q - rhs) / rhs


class YoungTriple(BaseModel):
    """
    Validated exponent triple with its regime.

    Build it with :func:`make_triple` (r derived from p, q) or
    :meth:`from_exponents` (raw triple checked against the relation).
    The factories raise ``InvalidTripleError`` and ``ExponentDomainError``;
    direct construction reports the same problems as ``pydantic.ValidationError``.
    """

    p: float = Field(gt=0.0, allow_inf_nan=False)
    q: float = Field(gt=0.0, allow_inf_nan=False)
    r: float = Field(gt=0.0, allow_inf_nan=False)
    regime: Regime

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="before")
    @classmethod
    def _fill_regime(cls, data: object) -> object:
        if isinstance(data, dict) and data.get("regime") is None:
            try:
                data = {**data, "regime": classify(data["p"], data["q"], data["r"])}
            except (KeyError, TypeError):
                pass  # field validation reports it
        return data

    @model_validator(mode="after")
    def _check_relation(self) -> "YoungTriple":
        defect = relation_defect(self.p, self.q, self.r)
        if defect >= RELATION_TOL:
            raise ValueError(
                f"1/p + 1/q = 1 + 1/r violated by {defect:.3e} "
                f"for ({self.p!r}, {self.q!r}, {self.r!r})"
            )
        if self.regime is not classify(self.p, self.q, self.r):
            raise ValueError(f"regime {self.regime} does not match exponents")
        return self

    @classmethod
    def from_exponents(cls, p: float, q: float, r: float) -> "YoungTriple":
        """
        Validate a raw (p, q, r).

        Raises:
            InvalidTripleError: The relation does not hold to 1e-12.
        """
        for t in (p, q, r):
            if not t > 0.0 or not math.isfinite(t):
                raise ExponentDomainError(f"exponent must be positive, got {t!r}")
        defect = relation_defect(p, q, r)
        if defect >= RELATION_TOL:
            raise InvalidTripleError(
                f"1/p + 1/q = 1 + 1/r violated by {defect:.3e}"
            )
        return cls(p=p, q=q, r=r, regime=classify(p, q, r))

    @property
    def is_sharp(self) -> bool:
        """Classical or Reverse: the regimes of the rotated form."""
        return self.regime.is_sharp

    @property
    def conjugates(self) -> tuple[float, float, float]:
        """(p', q', r'); raises at the boundary."""
        return conjugate(self.p), conjugate(self.q), conjugate(self.r)

    def require_sharp(self, operation: str) -> None:
        """Raise unless the triple is Classical or Reverse."""
        if not self.is_sharp:
            raise RegimeError(
                f"{operation} needs a Classical or Reverse triple, got {self.regime}"
            )

    def require(self, regime: Regime, operation: str) -> None:
        """Raise unless the triple is in ``regime``."""
        if self.regime is not regime:
            raise RegimeError(f"{operation} needs a {regime} triple, got {self.regime}")


class RotationPair(BaseModel):
    """Rotation parameters c = sqrt(r'/q'), s = sqrt(r'/p') with c² + s² = 1."""

    c: float = Field(gt=0.0, lt=1.0)
    s: float = Field(gt=0.0, lt=1.0)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _unit(self) -> "RotationPair":
        if abs(self.c**2 + self.s**2 - 1.0) >= RELATION_TOL:
            raise ValueError(f"c² + s² = {self.c**2 + self.s**2!r} is not 1")
        return self

    def swapped(self) -> "RotationPair":
        return RotationPair(c=self.s, s=self.c)

    def rotate(self, x: float, y: float) -> tuple[float, float]:
        """(cx − sy, sx + cy): the arguments of f and g in the rotated form."""
        return self.c * x - self.s * y, self.s * x + self.c * y


def make_triple(p: float, q: float) -> YoungTriple:
    """
    Triple (p, q, r) with r = 1/(1/p + 1/q − 1).

    Mixed triples (e.g. p > 1, r < 1) are classified Boundary.

    Raises:
        ExponentDomainError: p or q not positive.
        InvalidTripleError: 1/p + 1/q ≤ 1 ("r not positive finite").
    """
    for t in (p, q):
        if not t > 0.0 or not math.isfinite(t):
            raise ExponentDomainError(f"exponent must be positive and finite, got {t!r}")
    excess = 1.0 / p + 1.0 / q - 1.0
    if excess <= 0.0 or abs(excess) < RELATION_TOL:
        raise InvalidTripleError("r not positive finite")
    r = 1.0 / excess
    return YoungTriple(p=p, q=q, r=r, regime=classify(p, q, r))


def conjugate_defect(triple: YoungTriple) -> float:
    """|1/p' + 1/q' − 1/r'|, zero in exact arithmetic for sharp triples."""
    triple.require_sharp("conjugate_defect")
    pc, qc, rc = triple.conjugates
    return abs(1.0 / pc + 1.0 / qc - 1.0 / rc)


def rotation_params(triple: YoungTriple) -> RotationPair:
    """
    Rotation parameters of a Classical or Reverse triple.

    r', p', q' share one sign in both regimes, so both ratios are positive.

    Raises:
        RegimeError: Boundary triple.
    """
    triple.require_sharp("rotation_params")
    pc, qc, rc = triple.conjugates
    return RotationPair(c=math.sqrt(rc / qc), s=math.sqrt(rc / pc))


def dual_triple(triple: YoungTriple) -> YoungTriple:
    """
    (p/r, q/r, 1/r): swaps Classical and Reverse and swaps (c, s).

    Applying it twice returns the original triple up to rounding.

    Raises:
        RegimeError: Boundary triple.
    """
    triple.require_sharp("dual_triple")
    dual = make_triple(triple.p / triple.r, triple.q / triple.r)
    logger.debug("dual of %s is %s", triple, dual)
    return dual


def conjugate_triple(triple: YoungTriple) -> tuple[float, float, float]:
    """(p', q', r') of a Classical or Reverse triple."""
    triple.require_sharp("conjugate_triple")
    return triple.conjugates
