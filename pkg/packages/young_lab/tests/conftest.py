"""Shared fixtures for the young_lab tests."""

import pytest

from young_lab.exponents import YoungTriple, make_triple
from young_lab.functions import GaussianFn, Grid, GridFunction, random_density


@pytest.fixture
def grid() -> Grid:
    return Grid.symmetric(8.0, 2048)


@pytest.fixture
def unit_gaussian() -> GaussianFn:
    return GaussianFn.unit(1.0)


@pytest.fixture
def random_pair(grid: Grid) -> tuple[GridFunction, GridFunction]:
    return random_density(11, grid), random_density(511, grid)


@pytest.fixture
def symmetric_triple() -> YoungTriple:
    """(4/3, 4/3, 2)."""
    return make_triple(4 / 3, 4 / 3)


@pytest.fixture
def reverse_triple() -> YoungTriple:
    """(1/2, 1/2, 1/3)."""
    return make_triple(0.5, 0.5)
