"""Differential polynomials: Leibniz rule, rank grading, serialization."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elliptica.diffpoly import DiffPoly, monomial_rank, u
from elliptica.multipoly import sym


def test_u_constructor_and_rank():
    assert u(0).rank() == 2
    assert u(3).rank() == 5
    assert (u(0, 2) * u(1)).rank() == 7
    assert monomial_rank((1, 0, 2)) == 2 + 8


def test_total_derivative_examples():
    assert u(0).total_x_derivative() == u(1)
    assert (u(0) ** 2).total_x_derivative() == 2 * u(0) * u(1)
    assert (u(0) * u(1)).total_x_derivative() == u(1) ** 2 + u(0) * u(2)


def test_total_derivative_of_constant():
    assert DiffPoly.constant(5).total_x_derivative().is_zero()


def test_rank_inhomogeneous():
    p = u(0) + u(1)
    assert p.rank() is None
    r, pair = p.rank_report()
    assert r is None and pair is not None


def test_substitute_into_multipoly():
    wp = sym("wp")
    lam = sym("lambda")
    p = u(0) ** 2 + 3 * u(1)
    images = [2 * lam * wp, wp**2]
    assert p.substitute(images) == 4 * lam**2 * wp**2 + 3 * wp**2


def test_substitute_needs_enough_images():
    with pytest.raises(ValueError):
        u(3).substitute([sym("wp")])


def test_wire_round_trip():
    p = u(4) ** 2 - 20 * u(2) ** 3 + Fraction(1, 3) * u(0)
    assert DiffPoly.from_wire(p.to_wire()) == p


def test_integer_coefficient_probe():
    assert (u(0) * 3).has_integer_coefficients()
    assert not (Fraction(1, 2) * u(0)).has_integer_coefficients()


from conftest import random_rank_homogeneous  # noqa: E402


def test_derivative_raises_rank_by_one():
    rng = random.Random(20240517)
    for rank in range(2, 12):
        p = random_rank_homogeneous(rank, rng)
        if p.is_zero():
            continue
        assert p.is_rank_homogeneous(rank)
        dp = p.total_x_derivative()
        if not dp.is_zero():
            assert dp.is_rank_homogeneous(rank + 1)


@st.composite
def diff_polys(draw):
    terms = {}
    for _ in range(draw(st.integers(0, 4))):
        exp = tuple(draw(st.lists(st.integers(0, 3), min_size=0, max_size=4)))
        coeff = draw(st.fractions(min_value=-4, max_value=4, max_denominator=5))
        terms[exp] = terms.get(exp, 0) + coeff
    return DiffPoly({k: v for k, v in terms.items() if v})


@settings(max_examples=60, deadline=None)
@given(diff_polys(), diff_polys(), diff_polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(diff_polys(), diff_polys())
def test_derivative_is_linear_and_leibniz(a, b):
    d = DiffPoly.total_x_derivative
    assert d(a + b) == d(a) + d(b)
    assert d(a * b) == d(a) * b + a * d(b)
