"""CLI configuration via environment variables."""

from pydantic_settings import BaseSettings

from young_lab.inequalities import DEFAULT_POINTS


class Settings(BaseSettings):
    """
    Defaults for the young-lab CLI.

    All values can be overridden via environment variables
    with the ``YOUNG_`` prefix. Example::

        YOUNG_QUADRATURE_POINTS=2048 YOUNG_TOLERANCE=2e-3 young-lab verify --p 4/3 --q 4/3

    Library functions never read these; the CLI passes them explicitly.
    """

    # 1D grids
    grid_points: int = 2048
    window: float = 8.0

    # 2D quadrature and verification
    quadrature_points: int = DEFAULT_POINTS
    tolerance: float = 5e-3

    # Randomized checks
    seed: int = 0
    random_checks: int = 20
    workers: int = 4

    # Logging / tracing (OTel → Jaeger)
    log_level: str = "INFO"
    tracing: bool = False
    otlp_endpoint: str = "http://localhost:4317"

    model_config = {"env_prefix": "YOUNG_"}
