"""Lame density-of-states: spectral data, series matching, exact numerators."""

import json
from fractions import Fraction
from math import floor

import pytest

from elliptica import golden
from elliptica.lame import (
    MissingSpectralCoefficient,
    SpectralPoly,
    SpectralTableError,
    builtin_spectral_b,
    divisibility_report,
    dos_coefficient,
    dos_series_faulhaber_side,
    gap_factor,
    hat_coefficient_check,
    integrated_density_coefficients,
    load_spectral_table,
    match_numerator,
    numerator_for_integer_n,
    spectral_from_radicand,
    symbolic_spectral,
)
from elliptica.multipoly import MultiPoly, const, sym

EN = sym("n")
G2 = sym("g2")
G3 = sym("g3")
PBAR = sym("pbar")


# -- built-in symbolic spectral coefficients ----------------------------------------

def test_builtin_b1_is_zero():
    assert builtin_spectral_b(1).is_zero()


def test_builtin_b2_b3_printed():
    b2 = Fraction(-1, 120) * G2 * EN * (EN + 1) * (2 * EN - 1) * (2 * EN + 1) * (2 * EN + 3)
    assert builtin_spectral_b(2) == b2
    b3 = (
        Fraction(-1, 840)
        * G3
        * EN
        * (EN + 1)
        * (2 * EN - 3)
        * (2 * EN - 1)
        * (2 * EN + 1)
        * (2 * EN + 3)
        * (2 * EN + 5)
    )
    assert builtin_spectral_b(3) == b3


def test_builtin_b_properties():
    for k in range(2, 5):
        b = builtin_spectral_b(k)
        assert b.is_homogeneous(2 * k), k
        assert b.degree_in("n") == floor(5 * k / 2), k


def test_builtin_range():
    with pytest.raises(MissingSpectralCoefficient):
        builtin_spectral_b(5)


def test_b2_at_n2_matches_radicand():
    assert builtin_spectral_b(2).substitute("n", 2) == Fraction(-21, 4) * G2


# -- spectral table files ---------------------------------------------------------------

def _table_payload():
    return {"max_k": 4, "b": [builtin_spectral_b(k).to_wire() for k in range(1, 5)]}


def test_load_spectral_table_roundtrip(tmp_path):
    path = tmp_path / "table.json"
    path.write_text(json.dumps(_table_payload()))
    table = load_spectral_table(str(path))
    assert table.max_k == 4
    for k in range(1, 5):
        assert table.b(k) == builtin_spectral_b(k)


def test_load_spectral_table_rejects_nonzero_b1(tmp_path):
    payload = _table_payload()
    payload["b"][0] = G2.to_wire()
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload))
    with pytest.raises(SpectralTableError, match="b\\[1\\]"):
        load_spectral_table(str(path))


def test_load_spectral_table_rejects_bad_weight(tmp_path):
    payload = _table_payload()
    payload["b"][1] = (G2 + G3).to_wire()  # inhomogeneous
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload))
    with pytest.raises(SpectralTableError, match="b\\[2\\]"):
        load_spectral_table(str(path))


def test_load_spectral_table_rejects_degree(tmp_path):
    payload = _table_payload()
    payload["b"][1] = (G2 * EN**6).to_wire()
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload))
    with pytest.raises(SpectralTableError, match="degree"):
        load_spectral_table(str(path))


def test_load_spectral_table_rejects_alien_symbols(tmp_path):
    payload = _table_payload()
    payload["b"][1] = (G2 * sym("omega")).to_wire()
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload))
    with pytest.raises(SpectralTableError, match="symbol"):
        load_spectral_table(str(path))


# -- built-in exact spectral polynomials --------------------------------------------------

def test_radicand_n1():
    sp = spectral_from_radicand(1)
    assert sp.b(1).is_zero()
    assert sp.b(2) == Fraction(-1, 4) * G2
    assert sp.b(3) == Fraction(1, 4) * G3


def test_radicand_n2_monic_coefficients():
    sp = spectral_from_radicand(2)
    assert [sp.b(k) for k in range(1, 6)] == [
        const(0),
        Fraction(-21, 4) * G2,
        Fraction(-27, 4) * G3,
        Fraction(27, 4) * G2**2,
        Fraction(81, 4) * G2 * G3,
    ]


def test_radicands_match_symbolic_spectral_coefficients():
    for n in range(1, 6):
        sp = spectral_from_radicand(n)
        for k in range(2, 5):
            if k <= sp.max_k:
                assert sp.b(k) == builtin_spectral_b(k).substitute("n", n), (n, k)


def test_radicand_domain():
    with pytest.raises(ValueError):
        spectral_from_radicand(6)


# -- series and matching --------------------------------------------------------------------

def test_series_first_coefficients_symbolic():
    r = dos_series_faulhaber_side(None, 2)
    lam = Fraction(1, 2) * EN * (EN + 1)
    assert r[0] == lam * PBAR
    assert r[1] == Fraction(1, 8) * G2 * lam**2


def test_series_constant_term_convention():
    assert dos_series_faulhaber_side(None, 0) == []


def test_match_symbolic_a2():
    expected = Fraction(-1, 480) * G2 * (EN - 1) * EN * (EN + 1) * (16 * EN**2 + 25 * EN + 6)
    assert dos_coefficient(2) == expected


def test_match_symbolic_against_listed_forms():
    for k in range(1, 5):
        assert hat_coefficient_check(k, golden.LAME_HAT[k]).ok, k


def test_divisibility_degree_weight():
    for k in range(1, 5):
        assert divisibility_report(k).ok, k


def test_match_insufficient_coefficients():
    with pytest.raises(MissingSpectralCoefficient, match="b_5"):
        match_numerator(symbolic_spectral(4), 5)


def test_numerators_match_printed():
    for n, expected in golden.LAME_NUMERATORS.items():
        got = numerator_for_integer_n(n)
        assert list(got.coeffs) == expected, n


def test_hat_coefficients_evaluate_to_numerators():
    for n in range(1, 6):
        numerator = numerator_for_integer_n(n)
        for k in range(1, min(n, 5) + 1):
            hat = golden.LAME_HAT[k].substitute("n", n)
            u_k = gap_factor(k).substitute("n", n)
            assert hat * u_k == numerator.a(k), (n, k)


def test_symbolic_evaluations_match_numeric():
    for n in range(1, 6):
        numerator = numerator_for_integer_n(n)
        for k in range(1, min(4, n) + 1):
            assert dos_coefficient(k).substitute("n", n) == numerator.a(k), (n, k)


def test_gap_factor_vanishes_for_small_n():
    # U_k(n) = 0 for integer n < k, matching the degree-n numerator
    for k in range(2, 6):
        for n in range(1, k):
            assert gap_factor(k).substitute("n", n).is_zero(), (n, k)


def test_matching_beyond_order_returns_zero_tail():
    for n in (1, 2, 3):
        sp = spectral_from_radicand(n)
        extended = match_numerator(sp, 2 * n + 1)
        for k in range(1, n + 1):
            assert extended.a(k) == numerator_for_integer_n(n).a(k)
        for k in range(n + 1, 2 * n + 2):
            assert extended.a(k).is_zero(), (n, k)


def test_integrated_density_is_same_series():
    for n in (None, 2, 5):
        rho = dos_series_faulhaber_side(n, 5)
        integrated = integrated_density_coefficients(n, 4)
        for k in range(5):
            assert (2 * k + 1) * integrated[k] == rho[k], (n, k)


def test_numeric_matching_with_user_table(tmp_path):
    # a user-supplied table evaluated at n=3 reproduces the built-in path
    payload = _table_payload()
    path = tmp_path / "table.json"
    path.write_text(json.dumps(payload))
    table = load_spectral_table(str(path))
    numeric = SpectralPoly(3, tuple(b.substitute("n", 3) for b in table.coeffs))
    got = match_numerator(numeric, 3)
    assert list(got.coeffs) == golden.LAME_NUMERATORS[3]
