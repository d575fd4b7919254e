"""Grid convolution, the Young ratio and its report."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from young_common.models import CheckKind, CheckStatus, ConvolutionMethod
from young_lab.constants import young_constant
from young_lab.convolution import (
    convolve,
    convolve_direct,
    convolve_fast,
    convolve_gaussian,
    verify_young,
    young_ratio,
)
from young_lab.errors import RegimeError, StepMismatchError, ZeroMassError
from young_lab.exponents import YoungTriple, make_triple
from young_lab.functions import (
    GaussianFn,
    Grid,
    GridFunction,
    gaussian_equality_pair,
    grid_for,
    random_density,
    sample_gaussian,
)

RATIO_TRIPLES = [make_triple(4 / 3, 4 / 3), make_triple(1.5, 1.2), make_triple(0.5, 0.5)]


@pytest.fixture
def gaussians() -> tuple[GaussianFn, GaussianFn]:
    return GaussianFn.unit(1.0, center=0.5), GaussianFn(amplitude=2.0, rate=3.0, center=-1.0)


def _equality_pair(triple: YoungTriple) -> tuple[GridFunction, GridFunction]:
    fa, ga = gaussian_equality_pair(triple)
    grid = grid_for(fa, ga, n=2048)
    return sample_gaussian(fa, grid), sample_gaussian(ga, grid)


class TestConvolve:
    def test_output_grid(self, grid: Grid, random_pair: tuple[GridFunction, GridFunction]) -> None:
        f, g = random_pair
        out = convolve(f, g).result
        assert out.grid.n == 2 * grid.n - 1
        assert out.grid.window == pytest.approx((-16.0, 16.0))
        assert out.grid.step == pytest.approx(grid.step, rel=1e-12)

    def test_matches_closed_form(self, gaussians: tuple[GaussianFn, GaussianFn]) -> None:
        fa, ga = gaussians
        grid = Grid.symmetric(9.0, 2049)
        out = convolve_direct(sample_gaussian(fa, grid), sample_gaussian(ga, grid)).result
        exact = convolve_gaussian(fa, ga)
        np.testing.assert_allclose(out.values, exact(out.points), atol=1e-10)

    def test_closed_form_mass(self, gaussians: tuple[GaussianFn, GaussianFn]) -> None:
        fa, ga = gaussians
        assert convolve_gaussian(fa, ga).mass == pytest.approx(fa.mass * ga.mass, rel=1e-14)
        assert convolve_gaussian(fa, ga).center == -0.5

    def test_fast_matches_direct(self, random_pair: tuple[GridFunction, GridFunction]) -> None:
        f, g = random_pair
        direct = convolve_direct(f, g)
        fast = convolve_fast(f, g)
        assert fast.method is ConvolutionMethod.FAST
        np.testing.assert_allclose(fast.result.values, direct.result.values, atol=1e-12)
        assert np.all(fast.result.values >= 0.0)

    def test_mass_is_product(self, random_pair: tuple[GridFunction, GridFunction]) -> None:
        f, g = random_pair
        assert convolve(f, g).result.mass == pytest.approx(f.mass * g.mass, rel=1e-10)

    def test_step_mismatch(self, grid: Grid, random_pair: tuple[GridFunction, GridFunction]) -> None:
        f, _ = random_pair
        g = random_density(1, grid.refined())
        with pytest.raises(StepMismatchError):
            convolve(f, g)

    def test_truncation_note(self) -> None:
        narrow = sample_gaussian(GaussianFn.unit(1.0), Grid.symmetric(1.0, 201))
        assert convolve(narrow, narrow).truncation_note > 0.1


class TestYoungRatio:
    @pytest.mark.parametrize("pq", [(4 / 3, 4 / 3), (1.5, 1.2), (0.5, 0.5), (0.8, 0.6)])
    def test_gaussian_equality(self, pq: tuple[float, float]) -> None:
        triple = make_triple(*pq)
        f, g = _equality_pair(triple)
        assert young_ratio(f, g, triple) == pytest.approx(young_constant(triple), rel=1e-6)

    def test_random_pairs_below_constant(self, grid: Grid) -> None:
        triple = make_triple(4 / 3, 4 / 3)
        bound = young_constant(triple) + 5e-3
        for seed in range(20):
            f, g = random_density(seed, grid), random_density(seed + 500, grid)
            assert young_ratio(f, g, triple, ConvolutionMethod.FAST) <= bound

    def test_reverse_random_pairs_above_constant(self, grid: Grid) -> None:
        triple = make_triple(0.5, 0.5)
        bound = young_constant(triple) - 5e-3
        for seed in range(20):
            f, g = random_density(seed, grid), random_density(seed + 500, grid)
            assert young_ratio(f, g, triple, ConvolutionMethod.FAST) >= bound

    @settings(max_examples=50, deadline=None)
    @given(
        seed=st.integers(min_value=0, max_value=10_000),
        sigma=st.floats(min_value=0.25, max_value=4.0),
        triple=st.sampled_from(RATIO_TRIPLES),
    )
    def test_dilation_invariance(self, seed: int, sigma: float, triple: YoungTriple) -> None:
        grid = Grid.symmetric(8.0, 257)
        f, g = random_density(seed, grid), random_density(seed + 1, grid)
        expected = young_ratio(f, g, triple)
        assert young_ratio(f.dilated(sigma), g.dilated(sigma), triple) == pytest.approx(expected, rel=1e-10)

    def test_zero_input(self, grid: Grid, random_pair: tuple[GridFunction, GridFunction]) -> None:
        f, _ = random_pair
        with pytest.raises(ZeroMassError, match="ratio undefined"):
            young_ratio(f, GridFunction.zeros(grid), make_triple(4 / 3, 4 / 3))

    def test_boundary_triple(self, random_pair: tuple[GridFunction, GridFunction]) -> None:
        with pytest.raises(RegimeError):
            young_ratio(*random_pair, make_triple(2.0, 0.5))


class TestVerifyYoung:
    def test_equality_passes(self, symmetric_triple: YoungTriple) -> None:
        report = verify_young(*_equality_pair(symmetric_triple), symmetric_triple)
        assert report.passed
        assert report.check is CheckKind.YOUNG
        assert report.ratio == pytest.approx(1.0, abs=1e-6)

    def test_reverse_equality_passes(self, reverse_triple: YoungTriple) -> None:
        report = verify_young(*_equality_pair(reverse_triple), reverse_triple)
        assert report.passed
        assert report.ratio == pytest.approx(1.0, abs=1e-6)

    def test_zero_is_degenerate(self, grid: Grid, symmetric_triple: YoungTriple) -> None:
        zero = GridFunction.zeros(grid)
        report = verify_young(zero, zero, symmetric_triple)
        assert report.status is CheckStatus.DEGENERATE
        assert report.message == "ratio undefined"
