"""
young_common/models/enums.py

Domain enumerations shared by the library, the reports, and the CLI.
"""

from enum import IntEnum, StrEnum


class Regime(StrEnum):
    """Exponent regime of a Young triple."""

    CLASSICAL = "classical"  # p, q, r > 1, upper bound
    REVERSE = "reverse"      # p, q, r < 1, lower bound
    BOUNDARY = "boundary"    # some exponent is 1, or mixed sides of 1

    @property
    def is_sharp(self) -> bool:
        """True for the two regimes covered by the rotated form."""
        return self is not Regime.BOUNDARY


class CheckStatus(StrEnum):
    """Outcome of a single inequality check."""

    PASS = "pass"
    FAIL = "fail"
    DEGENERATE = "degenerate"  # zero mass, parse error, mass mismatch


class CheckKind(StrEnum):
    """Which inequality a report verifies."""

    YOUNG = "young"                      # convolution form, sharp constant
    THEOREM2 = "theorem2"                # rotated bilinear form vs K(p,q,r)
    LEMMA1 = "lemma1"                    # bilinear form vs transported right side
    SUPERMODULARITY = "supermodularity"  # maximizer-convolution chain


class ConvolutionMethod(StrEnum):
    """Convolution backend."""

    DIRECT = "direct"  # O(n²) reference sum
    FAST = "fast"      # FFT, same contract


class QuadratureRule(StrEnum):
    """1D quadrature primitive."""

    TRAPEZOID = "trapezoid"
    SIMPSON = "simpson"


class OutputFormat(StrEnum):
    """CLI output encoding."""

    JSON = "json"
    CSV = "csv"


class ExitCode(IntEnum):
    """Stable process exit codes of the CLI."""

    OK = 0     # every check passed
    FAIL = 1   # at least one check failed or was degenerate
    USAGE = 2  # usage or parse error, nothing computed
