"""Exception hierarchy of the numerical library."""


class YoungLabError(Exception):
    """Root of every error raised by young_lab."""


class ExponentDomainError(YoungLabError, ValueError):
    """An exponent is not a positive real."""


class BoundaryExponentError(YoungLabError, ValueError):
    """An exponent equals 1 where the operation needs it different from 1."""


class InvalidTripleError(YoungLabError, ValueError):
    """(p, q, r) does not satisfy 1/p + 1/q = 1 + 1/r with r positive finite."""


class RegimeError(YoungLabError, ValueError):
    """The operation needs a Classical or Reverse triple (or a specific one)."""


class GridError(YoungLabError, ValueError):
    """Invalid grid, or grids that cannot be combined."""


class NegativeValuesError(YoungLabError, ValueError):
    """Function samples must be finite and nonnegative."""


class StepMismatchError(GridError):
    """Two grids have different steps; resampling is the caller's job."""


class ZeroMassError(YoungLabError, ValueError):
    """A function with zero mass where a positive one is required."""


class MassMismatchError(YoungLabError, ValueError):
    """Functions that must carry equal mass do not."""


class NotDifferentiableError(YoungLabError, ValueError):
    """A transport map would not be differentiable (source vanishes)."""


class OutOfWindowError(YoungLabError, ValueError):
    """Evaluation outside the resolved window of a transport map."""


class SupportLeakageError(YoungLabError, ValueError):
    """An integrand carries mass outside the region a check can resolve."""


class FitError(YoungLabError, ValueError):
    """A Gaussian fit is not defined for the data."""


class PerturbationError(YoungLabError, ValueError):
    """A perturbed function left the nonnegative cone."""


class FunctionFormatError(YoungLabError, ValueError):
    """A CSV/JSON function file could not be parsed."""
