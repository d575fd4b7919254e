"""Rotated bilinear form, its transported right side and duality."""

import numpy as np
import pytest

from young_common.models import CheckKind, CheckStatus, Regime
from young_lab.constants import k_constant
from young_lab.convolution import verify_young
from young_lab.errors import MassMismatchError, RegimeError, ZeroMassError
from young_lab.exponents import YoungTriple, conjugate, make_triple
from young_lab.extremizers import bl_functional, bl_integral, young_instance
from young_lab.functions import (
    GaussianFn,
    Grid,
    GridFunction,
    grid_for,
    p_functional,
    random_density,
    sample_gaussian,
    theorem2_gaussian_pair,
)
from young_lab.inequalities import (
    bilinear_form,
    dual_pairing,
    dual_reduction_check,
    dual_witness,
    gaussian_closed_form,
    lemma1_rhs,
    theorem2_rhs,
    verify_lemma1,
    verify_theorem2,
)

CLASSICAL = [(4 / 3, 4 / 3), (1.5, 1.2), (2.0, 1.5), (1.25, 3.0), (1.8, 1.8)]
REVERSE = [(0.5, 0.5), (0.8, 0.6), (0.9, 0.7), (0.3, 0.9), (0.75, 0.75)]


def _sampled(*gaussians: GaussianFn, n: int = 2048) -> list[GridFunction]:
    grid = grid_for(*gaussians, n=n)
    return [sample_gaussian(g, grid) for g in gaussians]


def _gaussian_pair(triple: YoungTriple, n: int = 2048) -> list[GridFunction]:
    return _sampled(*theorem2_gaussian_pair(triple), n=n)


class TestClosedForm:
    @pytest.mark.parametrize("pq", CLASSICAL + REVERSE)
    def test_unit_gaussians_attain_k(self, pq: tuple[float, float]) -> None:
        triple = make_triple(*pq)
        fa, ga = theorem2_gaussian_pair(triple)
        assert gaussian_closed_form(fa, ga, triple) == pytest.approx(k_constant(triple), rel=1e-12)

    @pytest.mark.parametrize("pq", [(4 / 3, 4 / 3), (0.5, 0.5), (1.5, 1.2)])
    def test_common_rate_scaling_stays_extremal(self, pq: tuple[float, float]) -> None:
        triple = make_triple(*pq)
        fa, ga = GaussianFn.unit(2 * triple.p), GaussianFn.unit(2 * triple.q)
        assert gaussian_closed_form(fa, ga, triple) == pytest.approx(k_constant(triple), rel=1e-12)

    def test_unmatched_rates_gap(self) -> None:
        classical, reverse = make_triple(4 / 3, 4 / 3), make_triple(0.5, 0.5)
        for triple in (classical, reverse):
            fa, ga = GaussianFn.unit(2 * triple.p), GaussianFn.unit(triple.q)
            ratio = gaussian_closed_form(fa, ga, triple) / k_constant(triple)
            if triple.regime is Regime.CLASSICAL:
                assert ratio == pytest.approx(0.9853, abs=1e-3)
            else:
                assert ratio == pytest.approx(1.0606, abs=1e-3)

    def test_zero_amplitude(self) -> None:
        triple = make_triple(4 / 3, 4 / 3)
        assert gaussian_closed_form(GaussianFn(amplitude=0.0, rate=1.0), GaussianFn.unit(1.0), triple) == 0.0

    @pytest.mark.parametrize("pq", [(1.5, 1.2), (0.8, 0.6)])
    def test_quadrature_matches_closed_form(self, pq: tuple[float, float]) -> None:
        triple = make_triple(*pq)
        fa = GaussianFn(amplitude=2.0, rate=3.0, center=0.5)
        ga = GaussianFn(amplitude=0.5, rate=0.7, center=-0.3)
        f, g = _sampled(fa, ga)
        assert bilinear_form(f, g, triple) == pytest.approx(
            gaussian_closed_form(fa, ga, triple), rel=5e-4
        )


class TestRotatedForm:
    @pytest.mark.parametrize("pq", CLASSICAL + REVERSE)
    def test_gaussian_equality(self, pq: tuple[float, float]) -> None:
        triple = make_triple(*pq)
        f, g = _gaussian_pair(triple)
        assert bilinear_form(f, g, triple, n=1024) == pytest.approx(k_constant(triple), rel=5e-3)

    @pytest.mark.slow
    @pytest.mark.parametrize("pq", CLASSICAL + REVERSE)
    def test_gaussian_equality_fine(self, pq: tuple[float, float]) -> None:
        triple = make_triple(*pq)
        f, g = _gaussian_pair(triple, n=4096)
        assert bilinear_form(f, g, triple, n=2048) == pytest.approx(k_constant(triple), rel=2e-3)

    @pytest.mark.parametrize("pq", [(4 / 3, 4 / 3), (0.5, 0.5)])
    def test_random_pairs(self, grid: Grid, pq: tuple[float, float]) -> None:
        triple = make_triple(*pq)
        for seed in range(20):
            f, g = random_density(seed, grid), random_density(seed + 500, grid)
            report = verify_theorem2(f, g, triple, n=512)
            assert report.passed, report
            assert report.check is CheckKind.THEOREM2

    def test_ratio_is_homogeneous(self, random_pair: tuple[GridFunction, GridFunction]) -> None:
        triple = make_triple(1.5, 1.2)
        f, g = random_pair
        base = verify_theorem2(f, g, triple, n=256).ratio
        scaled = verify_theorem2(f.scaled(3.0), g.scaled(0.2), triple, n=256).ratio
        assert scaled == pytest.approx(base, rel=1e-10)

    def test_rhs(self, random_pair: tuple[GridFunction, GridFunction]) -> None:
        triple = make_triple(4 / 3, 4 / 3)
        f, g = random_pair
        assert theorem2_rhs(f.scaled(2.0), g, triple) == pytest.approx(
            2.0**0.75 * k_constant(triple), rel=1e-10
        )

    def test_zero_is_degenerate(self, grid: Grid, random_pair: tuple[GridFunction, GridFunction]) -> None:
        report = verify_theorem2(random_pair[0], GridFunction.zeros(grid), make_triple(4 / 3, 4 / 3))
        assert report.status is CheckStatus.DEGENERATE

    def test_boundary_triple(self, random_pair: tuple[GridFunction, GridFunction]) -> None:
        with pytest.raises(RegimeError):
            bilinear_form(*random_pair, make_triple(2.0, 0.5))


class TestTransportedBound:
    @staticmethod
    def _targets(triple: YoungTriple, f: GridFunction, g: GridFunction) -> list[GridFunction]:
        fa, ga = theorem2_gaussian_pair(triple)
        return [sample_gaussian(fa, f.grid).scaled(f.mass), sample_gaussian(ga, g.grid).scaled(g.mass)]

    @pytest.mark.parametrize("seed", range(20))
    def test_random_pairs(self, grid: Grid, seed: int) -> None:
        triple = make_triple(1.5, 1.2)
        f, g = random_density(seed, grid), random_density(seed + 500, grid)
        F, G = self._targets(triple, f, g)
        report = verify_lemma1(f, g, F, G, triple, n=512)
        assert report.passed, report
        assert report.check is CheckKind.LEMMA1

    def test_gaussian_equality(self) -> None:
        triple = make_triple(4 / 3, 4 / 3)
        f, g = _gaussian_pair(triple)
        report = verify_lemma1(f, g, f, g, triple)
        assert report.ratio == pytest.approx(1.0, abs=5e-3)

    def test_gaussian_rhs_is_k(self) -> None:
        triple = make_triple(1.5, 1.2)
        F, G = _gaussian_pair(triple)
        assert lemma1_rhs(F, G, triple) == pytest.approx(k_constant(triple), rel=5e-3)

    def test_mass_mismatch(self, random_pair: tuple[GridFunction, GridFunction]) -> None:
        triple = make_triple(4 / 3, 4 / 3)
        f, g = random_pair
        F, G = self._targets(triple, f, g)
        with pytest.raises(MassMismatchError):
            verify_lemma1(f, g, F.scaled(1.1), G, triple)

    def test_reverse_rejected(self, random_pair: tuple[GridFunction, GridFunction]) -> None:
        f, g = random_pair
        with pytest.raises(RegimeError):
            verify_lemma1(f, g, f, g, make_triple(0.5, 0.5))


class TestDuality:
    @pytest.mark.parametrize("pq", [(4 / 3, 4 / 3), (1.5, 1.2), (0.8, 0.6)])
    def test_dual_reduction(self, pq: tuple[float, float], random_pair: tuple[GridFunction, GridFunction]) -> None:
        F, G = random_pair
        transported, reduced = dual_reduction_check(F, G, make_triple(*pq), n=512)
        assert reduced == pytest.approx(transported, rel=1e-8)

    def test_witness_attains_form(self, random_pair: tuple[GridFunction, GridFunction]) -> None:
        triple = make_triple(1.5, 1.2)
        f, g = random_pair
        h = dual_witness(f, g, triple, n=512)
        assert p_functional(h, conjugate(triple.r)) == pytest.approx(1.0, rel=1e-10)
        assert dual_pairing(f, g, h, triple, n=512) == pytest.approx(
            bilinear_form(f, g, triple, n=512), rel=1e-6
        )

    def test_other_profiles_pair_lower(self, random_pair: tuple[GridFunction, GridFunction]) -> None:
        triple = make_triple(1.5, 1.2)
        f, g = random_pair
        witness = dual_witness(f, g, triple, n=512)
        other = witness.with_values(np.exp(-(witness.points**2)))
        other = other.scaled(1.0 / p_functional(other, conjugate(triple.r)))
        assert dual_pairing(f, g, other, triple, n=512) <= bilinear_form(f, g, triple, n=512) * (1 + 1e-9)

    def test_witness_needs_classical(self, random_pair: tuple[GridFunction, GridFunction]) -> None:
        with pytest.raises(RegimeError):
            dual_witness(*random_pair, make_triple(0.5, 0.5))

    def test_witness_of_zero(self, grid: Grid) -> None:
        zero = GridFunction.zeros(grid)
        with pytest.raises(ZeroMassError):
            dual_witness(zero, zero, make_triple(4 / 3, 4 / 3))


class TestAgreement:
    @pytest.mark.parametrize("pq", [(4 / 3, 4 / 3), (1.5, 1.2), (0.5, 0.5), (0.8, 0.6)])
    @pytest.mark.parametrize("seed", range(3))
    def test_convolution_and_rotated_checks_agree(self, grid: Grid, pq: tuple[float, float], seed: int) -> None:
        triple = make_triple(*pq)
        f, g = random_density(seed, grid), random_density(seed + 500, grid)
        young = verify_young(f, g, triple)
        rotated = verify_theorem2(f, g, triple, n=512)
        assert young.status is rotated.status
        assert young.passed and rotated.passed

    @pytest.mark.parametrize("pq", [(4 / 3, 4 / 3), (1.5, 1.2), (2.0, 1.5)])
    def test_bl_integral_with_witness_is_bilinear_form(
        self, pq: tuple[float, float], random_pair: tuple[GridFunction, GridFunction]
    ) -> None:
        triple = make_triple(*pq)
        f, g = random_pair
        h = dual_witness(f, g, triple, n=1024)
        third = h.powered(conjugate(triple.r))
        form = bilinear_form(f, g, triple, n=1024)
        assert bl_integral(young_instance(triple), [f, g, third]) == pytest.approx(form, rel=2e-3)
        # Unit masses for f, g and ‖h‖_{r'} = 1 leave the ratio equal to the integral
        assert bl_functional(young_instance(triple), [f, g, third]) == pytest.approx(form, rel=2e-3)
