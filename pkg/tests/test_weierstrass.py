"""Derivative polynomials, period integrals, Halphen coefficients."""

from fractions import Fraction

import pytest

from elliptica import golden
from elliptica.cohom import CohomElem, REDUCED, BasisMismatch
from elliptica.multipoly import MultiPoly, const, sym
from elliptica.weierstrass import (
    CUBIC,
    WP2,
    CurveParams,
    OddDerivativePower,
    bernoulli_hurwitz,
    deriv_poly,
    eliminate_odd_derivative,
    halphen,
    integrate_wp_polynomial,
    kn_equianharmonic,
    kn_lemniscatic,
    kn_via_halphen,
    laurent_c,
    period_integral_general,
    period_integral_reduced,
    principal_part_check,
    wp_derivative,
)

WP = sym("wp")
WP1 = sym("wp1")
G1 = sym("g1")
G2 = sym("g2")
G3 = sym("g3")


def test_deriv_poly_base_cases():
    assert deriv_poly(0).A == WP
    assert deriv_poly(1).A == 6 * WP**2 - G1 * WP - Fraction(1, 2) * G2
    # one recurrence step by hand: degree 3 in wp
    a2 = deriv_poly(2).A
    expected = CUBIC * const(12) + WP2 * (12 * WP - G1)
    assert a2 == expected
    assert a2.degree_in("wp") == 3


def test_deriv_poly_weight():
    # wp has weight 2 and each derivative adds one, so A_k has weight 2k+2
    for k in range(7):
        assert deriv_poly(k).A.weight() == 2 * k + 2


def test_derivative_chain_reproduces_recurrence():
    # differentiate wp^(2k+1) = A_k'(wp) wp' once more and eliminate:
    # the result must be the next even derivative polynomial
    for k in range(5):
        odd = deriv_poly(k).A.derivative("wp")
        next_even = eliminate_odd_derivative(
            odd.derivative("wp") * WP1**2
        ) + odd * WP2
        assert next_even == deriv_poly(k + 1).A


def test_eliminate_examples():
    assert eliminate_odd_derivative(WP1**2) == CUBIC
    assert eliminate_odd_derivative(WP) == WP
    assert eliminate_odd_derivative(WP1**4) == CUBIC**2


def test_eliminate_rejects_odd_powers():
    with pytest.raises(OddDerivativePower):
        eliminate_odd_derivative(WP1)
    with pytest.raises(OddDerivativePower):
        eliminate_odd_derivative(WP * WP1**3)


def test_wp_derivative_parity():
    assert wp_derivative(0) == WP
    assert wp_derivative(1) == WP1
    assert wp_derivative(2) == WP2
    assert wp_derivative(3) == (12 * WP - G1) * WP1


def test_general_period_integrals_match_list():
    for n, expected in golden.KSTAR.items():
        assert period_integral_general(n) == expected, n


def test_reduced_initial_data():
    assert period_integral_reduced(0) == CohomElem(const(2), const(0), REDUCED)
    assert period_integral_reduced(1) == CohomElem(const(0), const(-2), REDUCED)
    assert period_integral_reduced(2) == CohomElem(Fraction(1, 6) * G2, const(0), REDUCED)
    k3 = period_integral_reduced(3)
    assert k3 == CohomElem(Fraction(1, 5) * G3, Fraction(-3, 10) * G2, REDUCED)


def test_route_equivalence_to_n12():
    for n in range(13):
        red = period_integral_reduced(n)
        assert kn_via_halphen(n) == red, n
        gen0 = period_integral_general(n).substitute("g1", 0).as_reduced()
        assert gen0 == red, n


def test_special_case_closed_forms():
    for n in range(13):
        red = period_integral_reduced(n)
        assert kn_lemniscatic(n) == red.substitute("g3", 0), n
        assert kn_equianharmonic(n) == red.substitute("g2", 0), n
        if n % 3 == 2:
            assert kn_equianharmonic(n).is_zero(), n


def test_positive_decomposition():
    # K_n = A omega - B eta with nonnegative A, B
    for n in range(13):
        red = period_integral_reduced(n)
        assert all(c >= 0 for c in red.omega_part.terms.values()), n
        assert all(c <= 0 for c in red.xi_part.terms.values()), n


def test_halphen_table():
    for (n, r), expected in golden.HALPHEN_TABLE.items():
        assert halphen(n, r) == expected, (n, r)


def test_halphen_outside_range_is_zero():
    assert halphen(3, -1).is_zero()
    assert halphen(3, 4).is_zero()
    assert halphen(5, 1).is_zero()


def test_halphen_positivity():
    for n in range(13):
        for r in range(n + 1):
            assert all(c >= 0 for c in halphen(n, r).terms.values()), (n, r)


def test_diagonal_halphen_recurrence():
    # B_n^(n) and B_{n-1}^(n) satisfy the same three-term recurrence as K_n
    for n in range(3, 13):
        for pick in (lambda m: halphen(m, m), lambda m: halphen(m, m - 1)):
            lhs = pick(n)
            rhs = (
                Fraction(2 * n - 3, 4 * (2 * n - 1)) * G2 * pick(n - 2)
                + Fraction(n - 2, 2 * (2 * n - 1)) * G3 * pick(n - 3)
            )
            assert lhs == rhs, n


def test_integrate_wp_polynomial_linearity():
    q = 3 * WP**2 - G2
    elem = integrate_wp_polynomial(q, REDUCED)
    expected = period_integral_reduced(2) * 3 - period_integral_reduced(0) * G2
    assert elem == expected


def test_basis_mismatch():
    with pytest.raises(BasisMismatch):
        period_integral_reduced(2) + period_integral_general(2)


def test_laurent_coefficients():
    assert laurent_c(2) == Fraction(1, 20) * G2
    assert laurent_c(3) == Fraction(1, 28) * G3
    assert laurent_c(4) == Fraction(1, 1200) * G2**2
    c5 = laurent_c(5)
    assert c5 == Fraction(3, 11) * laurent_c(2) * laurent_c(3)
    with pytest.raises(ValueError):
        laurent_c(1)


def test_bernoulli_hurwitz():
    assert bernoulli_hurwitz(4) == Fraction(2, 5) * G2
    assert bernoulli_hurwitz(6) == 6 * 24 * laurent_c(3)
    with pytest.raises(ValueError):
        bernoulli_hurwitz(3)
    with pytest.raises(ValueError):
        bernoulli_hurwitz(2)


def test_principal_parts():
    for n in range(1, 9):
        assert principal_part_check(n).ok, n


def test_principal_part_closed_forms():
    # the listed closed forms in the Laurent coefficients, valid for r < n
    for n in range(1, 9):
        for r in range(2, min(6, n)):
            assert halphen(n, r) == golden.halphen_via_laurent(r, n, laurent_c), (n, r)


def test_halphen_closed_form_r5_factor():
    # the single-c_5 simplification: B_5^(n) = n(11n-8)/3 c_5 for n > 5
    for n in (6, 7, 8):
        assert halphen(n, 5) == Fraction(n * (11 * n - 8), 3) * laurent_c(5), n


def test_curve_params_reduction():
    params = CurveParams(G1, G2, G3)
    assert params.reduced_g2 == G2 + Fraction(1, 12) * G1**2
    assert params.reduced_g3 == G3 + Fraction(1, 12) * G1 * G2 + Fraction(1, 216) * G1**3
    numeric = CurveParams(Fraction(12), Fraction(0), Fraction(0))
    assert numeric.reduced_g2 == 12
    assert numeric.reduced_g3 == 8
