"""Numeric periods and normalised-polynomial evaluation."""

import math

import numpy as np
import pytest

from elliptica.numeval import (
    UnsupportedLattice,
    conjecture3_scan,
    eta_by_complete_integrals,
    eval_phi,
    eval_phi_classical,
    omega_by_quadrature,
    periods,
    phi_target,
    real_curve,
)


def test_rejects_nonpositive_discriminant():
    with pytest.raises(UnsupportedLattice):
        real_curve(0.0, 1.0)
    with pytest.raises(UnsupportedLattice):
        real_curve(3.0, 1.0)  # 27 - 27 = 0


def test_roots_ordered_and_traceless():
    curve = real_curve(8.0, 1.0)
    assert curve.e1 > curve.e2 > curve.e3
    assert abs(curve.e1 + curve.e2 + curve.e3) < 1e-12


def test_legendre_product_on_square_lattice():
    pair = periods(4.0, 0.0)
    assert abs(pair.eta * pair.omega - math.pi / 4) < 1e-10


def test_periods_against_quadrature_oracle():
    for g2, g3 in ((4.0, 0.0), (8.0, 1.0), (5.0, -0.5)):
        pair = periods(g2, g3)
        assert abs(pair.omega - omega_by_quadrature(g2, g3)) < 1e-10 * pair.omega
        assert abs(pair.eta - eta_by_complete_integrals(g2, g3)) < 1e-10 * abs(pair.eta)


def test_period_scaling_law():
    base = periods(7.0, 1.5)
    for c in (0.5, 2.0, 3.0):
        scaled = periods(c**4 * 7.0, c**6 * 1.5)
        assert abs(scaled.omega - base.omega / c) < 1e-9 * abs(base.omega / c)
        assert abs(scaled.eta - c * base.eta) < 1e-9 * abs(c * base.eta)


def test_phi_zeros_and_symmetry():
    curve = real_curve(4.0, 0.0)
    pair = periods(4.0, 0.0)
    for m in (2, 3, 8):
        assert abs(eval_phi(m, 0.0, curve, pair)) < 1e-10
        assert abs(eval_phi(m, -1.0, curve, pair)) < 1e-10
    for x in np.linspace(-1.5, 0.5, 101):
        d = eval_phi(8, float(x), curve, pair) - eval_phi(8, float(-1.0 - x), curve, pair)
        assert abs(d) < 1e-10


def test_phi_quadratic_at_origin():
    curve = real_curve(4.0, 0.0)
    pair = periods(4.0, 0.0)
    x = 1e-4
    sym_ratio = (eval_phi(8, x, curve, pair) + eval_phi(8, -x, curve, pair)) / (2 * x * x)
    assert abs(sym_ratio - 1.0) < 1e-6


def test_phi_requires_m_at_least_two():
    curve = real_curve(4.0, 0.0)
    with pytest.raises(ValueError):
        eval_phi(1, 0.3, curve)


def test_target_shape():
    assert phi_target(0.0) == 0.0
    assert phi_target(-1.0) == pytest.approx(0.0)
    assert phi_target(0.5) == pytest.approx(1.0 / math.pi**2)


def test_conjecture_scan_reports_rows():
    curve = real_curve(4.0, 0.0)
    grid = np.linspace(-1.5, 0.5, 21)
    rows = conjecture3_scan(6, curve, grid)
    assert [m for m, _ in rows] == [3, 4, 5, 6]
    assert all(d >= 0 for _, d in rows)
    classical = conjecture3_scan(8, None, grid)
    # the hyperbolic distances do shrink rapidly with the order
    assert classical[-1][1] < classical[0][1]


def test_classical_phi_matches_elliptic_limit_shape():
    # near the origin both normalisations give the x^2 profile
    x = 1e-4
    val = (eval_phi_classical(8, x) + eval_phi_classical(8, -x)) / (2 * x * x)
    assert abs(val - 1.0) < 1e-6
