"""
young_lab/functions

Grid samples and closed-form Gaussians: the function model every
numerical check works on.
"""

from young_lab.functions.gaussian import (
    GaussianFn,
    gaussian_equality_pair,
    grid_for,
    random_density,
    sample_gaussian,
    theorem2_gaussian_pair,
)
from young_lab.functions.grid import (
    Domination,
    Grid,
    GridFunction,
    integrate_function,
    integrate_values,
    p_functional,
    pointwise_power,
)
from young_lab.functions.io import (
    from_csv,
    from_json,
    read_function,
    to_csv,
    to_json,
    write_function,
)

# ∫ f, under the name the rest of the library uses
integrate = integrate_function

__all__ = [
    "Domination",
    "GaussianFn",
    "Grid",
    "GridFunction",
    "from_csv",
    "from_json",
    "gaussian_equality_pair",
    "grid_for",
    "integrate",
    "integrate_function",
    "integrate_values",
    "p_functional",
    "pointwise_power",
    "random_density",
    "read_function",
    "sample_gaussian",
    "theorem2_gaussian_pair",
    "to_csv",
    "to_json",
    "write_function",
]
