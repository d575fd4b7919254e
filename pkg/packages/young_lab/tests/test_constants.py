"""Sharp constants C_t, K and the Young constant."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from young_lab.constants import bound_direction, c_t, k_constant, sharp_constants, young_constant
from young_lab.errors import ExponentDomainError
from young_lab.exponents import YoungTriple, conjugate, make_triple


def test_c_two_is_one() -> None:
    assert c_t(2.0) == pytest.approx(1.0, rel=1e-15)


def test_c_matches_formula() -> None:
    t = 4 / 3
    expected = math.sqrt(t ** (1 / t) / conjugate(t) ** (1 / conjugate(t)))
    assert c_t(t) == pytest.approx(expected, rel=1e-14)


def test_c_below_one_uses_absolute_conjugate() -> None:
    # t = 1/2, t' = -1: sqrt(0.5^2 / 1^{-1})
    assert c_t(0.5) == pytest.approx(0.5, rel=1e-14)


def test_c_is_continuous_at_one() -> None:
    assert c_t(1.0) == 1.0
    for t in (1.0 - 1e-6, 1.0 + 1e-6):
        assert c_t(t) == pytest.approx(1.0, abs=1e-5)


def test_c_domain() -> None:
    with pytest.raises(ExponentDomainError):
        c_t(0.0)


def test_symmetric_constants() -> None:
    triple = make_triple(4 / 3, 4 / 3)
    constants = sharp_constants(triple)
    k = (4 / 3) ** (3 / 4) / math.sqrt(2.0) ** 0.5
    assert constants.k == pytest.approx(k, rel=1e-14)
    assert constants.c_r == pytest.approx(1.0, rel=1e-14)
    assert constants.young_nd == pytest.approx(constants.c_p**2, rel=1e-14)


def test_young_constant_powers_with_dimension() -> None:
    triple = make_triple(1.5, 1.2)
    assert young_constant(triple, 3) == pytest.approx(young_constant(triple) ** 3, rel=1e-14)
    with pytest.raises(ValueError):
        young_constant(triple, 0)


def test_classical_constant_below_one_reverse_above() -> None:
    assert young_constant(make_triple(4 / 3, 4 / 3)) < 1.0
    assert young_constant(make_triple(0.5, 0.5)) > 1.0


@st.composite
def classical_triples(draw: st.DrawFn) -> YoungTriple:
    # 1/p = x, 1/q = 1 - x + t·x so that 1/r = t·x lies in (0, 1)
    x = draw(st.floats(min_value=0.05, max_value=0.95))
    t = draw(st.floats(min_value=0.05, max_value=0.95))
    return make_triple(1.0 / x, 1.0 / (1.0 - x + t * x))


@st.composite
def reverse_triples(draw: st.DrawFn) -> YoungTriple:
    x = draw(st.floats(min_value=1.05, max_value=20.0))
    y = draw(st.floats(min_value=1.05, max_value=20.0))
    return make_triple(1.0 / x, 1.0 / y)


@settings(max_examples=1000, deadline=None)
@given(classical_triples())
def test_classical_constant_never_exceeds_one(triple: YoungTriple) -> None:
    assert young_constant(triple) <= 1.0 + 1e-12


@settings(max_examples=1000, deadline=None)
@given(reverse_triples())
def test_reverse_constant_never_below_one(triple: YoungTriple) -> None:
    assert young_constant(triple) >= 1.0 - 1e-12


def test_k_is_symmetric_in_p_q() -> None:
    assert k_constant(make_triple(1.5, 1.2)) == pytest.approx(
        k_constant(make_triple(1.2, 1.5)), rel=1e-15
    )


def test_young_constant_tends_to_one_at_boundary() -> None:
    values = [young_constant(make_triple(t, t)) for t in np.linspace(1.02, 1.0005, 8)]
    assert abs(values[-1] - 1.0) < 1e-2
    assert abs(values[0] - 1.0) > abs(values[-1] - 1.0)


def test_bound_direction() -> None:
    assert bound_direction(make_triple(4 / 3, 4 / 3)) == "<="
    assert bound_direction(make_triple(0.5, 0.5)) == ">="
    assert bound_direction(make_triple(2.0, 0.5)) == ""
