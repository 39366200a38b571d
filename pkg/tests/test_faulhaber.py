"""Classical and elliptic Faulhaber polynomials, elliptic Bernoulli numbers."""

from fractions import Fraction

import pytest

from elliptica import golden
from elliptica.cohom import CohomElem, GENERAL, REDUCED
from elliptica.faulhaber import (
    RouteDisagreement,
    bernoulli_number,
    bernoulli_poly,
    classical_faulhaber,
    discriminant_specialization,
    eb_route_deriv,
    eb_route_direct,
    eb_route_recurrence,
    elliptic_bernoulli,
    elliptic_bernoulli_general,
    elliptic_faulhaber,
    faulhaber_lambda2_check,
    power_sum,
    reduced_faulhaber_J,
    reduced_faulhaber_W,
    soliton_specialization_check,
    structure_report,
)
from elliptica.kdv import top_u_coefficient
from elliptica.multipoly import sym
from elliptica.weierstrass import period_integral_reduced

LAM = sym("lambda")
X = sym("x")
G1 = sym("g1")
G2 = sym("g2")
G3 = sym("g3")


# -- classical objects ------------------------------------------------------------

def test_bernoulli_numbers():
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(7) == 0
    assert bernoulli_number(12) == Fraction(-691, 2730)
    for k, expected in golden.BERNOULLI_EVEN.items():
        assert bernoulli_number(k) == expected


def test_bernoulli_poly_symmetry_and_value_at_zero():
    for k in range(9):
        poly = bernoulli_poly(k)
        assert poly.coefficient_of("x", 0).constant_value() == bernoulli_number(k)
        reflected = poly.substitute("x", 1 - X)
        expected = poly if k % 2 == 0 else -poly
        assert reflected == expected, k


def test_classical_faulhaber_printed_list():
    for m, expected in golden.CLASSICAL_FAULHABER.items():
        assert classical_faulhaber(m).poly == expected, m


def test_classical_faulhaber_power_sum_oracle():
    for m in range(1, 9):
        poly = classical_faulhaber(m).poly
        for n in range(1, 21):
            lam = Fraction(n * (n + 1), 2)
            assert poly.evaluate({"lambda": lam}) == power_sum(2 * m - 1, n), (m, n)


def test_classical_faulhaber_double_zero():
    for m in range(2, 9):
        poly = classical_faulhaber(m).poly
        assert poly.coefficient_of("lambda", 0).is_zero()
        assert poly.coefficient_of("lambda", 1).is_zero()


# -- elliptic Faulhaber polynomials --------------------------------------------------

def test_printed_general_polynomials():
    for m, expected in golden.FAULHABER_GENERAL.items():
        assert elliptic_faulhaber(m).value == expected, m


def test_printed_reduced_polynomials():
    for m, expected in golden.FAULHABER_W.items():
        assert reduced_faulhaber_W(m).value == expected, m


def test_weights_are_odd():
    for m in range(1, 9):
        assert elliptic_faulhaber(m).value.weight() == 2 * m - 1, m
        assert reduced_faulhaber_W(m).value.weight() == 2 * m - 1, m


def test_jacobi_reduction():
    # order 2 has no g3, so the Jacobi reduction is the general polynomial
    assert reduced_faulhaber_J(2).value == elliptic_faulhaber(2).value
    assert reduced_faulhaber_J(2).value.basis == GENERAL
    assert not reduced_faulhaber_J(5).value.omega_part.uses("g3")


def test_soliton_specialization():
    for m in range(1, 9):
        assert soliton_specialization_check(m).ok, m


def test_structure_theorem():
    for m in range(1, 9):
        assert structure_report(m).ok, m


def test_top_lambda_coefficient_is_period_integral():
    # the u^m monomial of the density contributes b_m (2 lambda)^m K_m
    for m in range(1, 9):
        value = reduced_faulhaber_W(m).value
        top = CohomElem(
            value.omega_part.coefficient_of("lambda", m),
            value.xi_part.coefficient_of("lambda", m),
            REDUCED,
        )
        expected = period_integral_reduced(m) * (top_u_coefficient(m) * Fraction(2) ** m)
        assert top == expected, m


def test_x_substitution_cubic_coefficient():
    # the coefficient of x^3 in the general order-3 polynomial at
    # lambda = (x^2+x)/2 collapses to a g1-free combination
    value = elliptic_faulhaber(3).value
    lam_of_x = Fraction(1, 2) * (X**2 + X)
    omega_x = value.omega_part.substitute("lambda", lam_of_x).coefficient_of("x", 3)
    xi_x = value.xi_part.substitute("lambda", lam_of_x).coefficient_of("x", 3)
    assert omega_x == -2 * G3
    assert xi_x == G2


# -- elliptic Bernoulli numbers ----------------------------------------------------------

def test_three_routes_agree_and_match_list():
    for index, expected in golden.ELLIPTIC_BERNOULLI.items():
        assert eb_route_direct(index) == expected, index
        assert eb_route_deriv(index) == expected, index
        assert eb_route_recurrence(index) == expected, index
        assert elliptic_bernoulli(index).value == expected, index


def test_route_disagreement_raises(monkeypatch):
    from elliptica import faulhaber as fb

    poisoned = eb_route_direct(18) * 2
    monkeypatch.setattr(fb, "eb_route_direct", lambda index: poisoned)
    fb._EB_CACHE.pop(18, None)
    with pytest.raises(RouteDisagreement):
        fb.elliptic_bernoulli(18)
    fb._EB_CACHE.pop(18, None)


def test_elliptic_bernoulli_domain():
    with pytest.raises(ValueError):
        elliptic_bernoulli(3)
    with pytest.raises(ValueError):
        elliptic_bernoulli(0)


def test_discriminant_specialization():
    for n in range(2, 9):
        assert discriminant_specialization(2 * n).ok, n
    with pytest.raises(ValueError):
        discriminant_specialization(2)


def test_lambda2_relation():
    for m in range(3, 10):
        assert faulhaber_lambda2_check(m).ok, m
    # the boundary case is informational and currently agrees
    report = faulhaber_lambda2_check(2)
    assert report.ok
    assert "agreement" in report.checks[0][2]


def test_general_analogue_matches_lambda2_of_general_polynomial():
    # the lambda^2 coefficient of the general polynomial is 8x the
    # g1-shifted elliptic Bernoulli number
    for m in range(3, 8):
        value = elliptic_faulhaber(m).value
        lam2 = CohomElem(
            value.omega_part.coefficient_of("lambda", 2),
            value.xi_part.coefficient_of("lambda", 2),
            GENERAL,
        )
        assert lam2 == elliptic_bernoulli_general(2 * m - 2) * 8, m


def test_general_analogue_reduces_to_plain_value():
    for index in (4, 8, 12):
        general = elliptic_bernoulli_general(index).substitute("g1", 0).as_reduced()
        assert general == elliptic_bernoulli(index).value, index
