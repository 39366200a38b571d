"""Classical and elliptic Faulhaber polynomials and elliptic Bernoulli numbers.

The elliptic Faulhaber polynomial of order m is the cycle integral of the
m-th KdV density evaluated on the potential 2*lambda*wp(z).  Substituting
the derivative polynomials of wp turns the density into a polynomial in
wp alone (even powers of wp' are eliminated through the curve equation),
and cycle integration maps wp^n to the period element K_n.  The result is
an element of the cohomology basis whose coefficients are polynomials in
lambda and the curve parameters, homogeneous of weight 2m - 1.

Elliptic Bernoulli numbers are the cycle integrals of squared derivatives
of wp (g1 = 0).  They are computed here by three independent routes that
are required to agree exactly:

* ``direct``     - square the derivative polynomial and integrate;
* ``deriv``      - integrate wp * A_{n-1}(wp) with an alternating sign
                   (one integration by parts done once and for all);
* ``recurrence`` - the Halphen-coefficient recurrence.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Optional

from .cohom import GENERAL, REDUCED, CohomElem
from .diffpoly import DiffPoly
from .kdv import density
from .multipoly import MultiPoly, STANDARD, const, sym
from .report import CheckReport
from .weierstrass import (
    deriv_poly,
    eliminate_odd_derivative,
    halphen,
    integrate_wp_polynomial,
    wp_derivative,
)

LAM = sym("lambda")
X = sym("x")
G1 = sym("g1")
G2 = sym("g2")
OMEGA = sym("omega")


class RouteDisagreement(RuntimeError):
    """Two of the elliptic Bernoulli computation routes produced different values."""


# -- classical Bernoulli numbers and polynomials --------------------------------

_BERNOULLI: List[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli_number(k: int) -> Fraction:
    """B_k with the B_1 = -1/2 convention."""
    if k < 0:
        raise ValueError("k must be >= 0")
    with _BERNOULLI_LOCK:
        while len(_BERNOULLI) <= k:
            m = len(_BERNOULLI)
            acc = Fraction(0)
            for j in range(m):
                acc += comb(m + 1, j) * _BERNOULLI[j]
            _BERNOULLI.append(-acc / (m + 1))
        return _BERNOULLI[k]


def bernoulli_poly(k: int) -> MultiPoly:
    """B_k(x) = sum_j C(k, j) B_j x^(k-j)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    result = MultiPoly.zero(STANDARD)
    for j in range(k + 1):
        result = result + comb(k, j) * bernoulli_number(j) * X ** (k - j)
    return result


# -- classical Faulhaber polynomials ----------------------------------------------

@dataclass(frozen=True)
class ClassicalFaulhaber:
    """F_m with sum_{k<=n} k^(2m-1) = F_m(n(n+1)/2)."""

    m: int
    poly: MultiPoly  # polynomial in lambda

    def __post_init__(self) -> None:
        if self.m >= 2 and (
            self.poly.coefficient_of("lambda", 0) or self.poly.coefficient_of("lambda", 1)
        ):
            raise ValueError(f"F_{self.m} must have a double zero at lambda = 0")


def classical_faulhaber(m: int) -> ClassicalFaulhaber:
    """Extract F_m from the even Bernoulli polynomial identity."""
    if m < 1:
        raise ValueError("m must be >= 1")
    shifted = bernoulli_poly(2 * m).substitute("x", X + 1)
    g = (shifted - bernoulli_number(2 * m)) * Fraction(1, 2 * m)
    mu = X**2 + X
    result = MultiPoly.zero(STANDARD)
    while g:
        d = g.degree_in("x")
        if d % 2 or d == 0:
            raise ValueError(f"power-sum polynomial for m={m} is not a polynomial in x^2+x")
        lead = g.coefficient_of("x", d)
        if not lead.is_constant():
            raise ValueError("unexpected extra symbols in Bernoulli polynomial")
        c = lead.constant_value()
        j = d // 2
        g = g - c * mu**j
        result = result + c * Fraction(2) ** j * LAM**j
    return ClassicalFaulhaber(m, result)


def power_sum(exponent: int, n: int) -> Fraction:
    """Brute-force 1^e + 2^e + ... + n^e (test oracle)."""
    return Fraction(sum(k**exponent for k in range(1, n + 1)))


# -- elliptic Faulhaber polynomials ------------------------------------------------

@dataclass(frozen=True)
class EllipticFaulhaber:
    """Cycle integral of the m-th KdV density on the potential 2*lambda*wp."""

    m: int
    value: CohomElem

    def __post_init__(self) -> None:
        w = self.value.weight()
        if not self.value.is_zero() and w != 2 * self.m - 1:
            raise ValueError(
                f"elliptic Faulhaber polynomial of order {self.m} has weight {w}, "
                f"expected {2 * self.m - 1}"
            )


_EF_CACHE: Dict[int, EllipticFaulhaber] = {}
_EF_LOCK = threading.Lock()


def elliptic_faulhaber(m: int) -> EllipticFaulhaber:
    """The general (g1 included) elliptic Faulhaber polynomial of order m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    with _EF_LOCK:
        cached = _EF_CACHE.get(m)
    if cached is not None:
        return cached
    body: DiffPoly = density(m).body
    top = body.max_derivative()
    images = [2 * LAM * wp_derivative(j) for j in range(top + 1)]
    substituted = body.substitute(images)
    in_wp = eliminate_odd_derivative(substituted)
    value = integrate_wp_polynomial(in_wp, GENERAL)
    result = EllipticFaulhaber(m, value)
    with _EF_LOCK:
        _EF_CACHE.setdefault(m, result)
    return result


def reduced_faulhaber_W(m: int) -> EllipticFaulhaber:
    """Weierstrass reduction g1 = 0, basis (omega, eta)."""
    general = elliptic_faulhaber(m).value
    reduced = general.substitute("g1", 0).as_reduced()
    return EllipticFaulhaber(m, reduced)


def reduced_faulhaber_J(m: int) -> EllipticFaulhaber:
    """Jacobi reduction g3 = 0, basis kept general."""
    general = elliptic_faulhaber(m).value
    return EllipticFaulhaber(m, general.substitute("g3", 0))


def soliton_specialization_check(m: int) -> CheckReport:
    """At g2 = g3 = 0 the elliptic polynomial collapses to the classical one.

    Also checks the refined statement: the two top slices in g1 are
    -4/(2m-1) * (g1^(m-1) xi - 1/2 g1^(m-2) g2 omega) * F_m(lambda).
    """
    report = CheckReport(f"soliton specialisation m={m}")
    value = elliptic_faulhaber(m).value
    fm = classical_faulhaber(m).poly
    factor = Fraction(-4, 2 * m - 1)

    degenerate = value.map_parts(lambda p: p.substitute("g2", 0).substitute("g3", 0))
    report.add(
        "omega part vanishes at g2=g3=0",
        degenerate.omega_part.is_zero(),
        str(degenerate.omega_part),
    )
    expected_xi = factor * G1 ** (m - 1) * fm
    report.add(
        "xi part equals -4/(2m-1) g1^(m-1) F_m",
        degenerate.xi_part == expected_xi,
        f"{degenerate.xi_part} vs {expected_xi}",
    )

    top_xi = value.xi_part.coefficient_of("g1", m - 1)
    report.add(
        "top g1 slice of xi part",
        top_xi == factor * fm,
        f"{top_xi} vs {factor * fm}",
    )
    if m >= 2:
        next_omega = value.omega_part.coefficient_of("g1", m - 2)
        expected = Fraction(2, 2 * m - 1) * G2 * fm
        report.add(
            "next g1 slice of omega part",
            next_omega == expected,
            f"{next_omega} vs {expected}",
        )
    return report


def structure_report(m: int) -> CheckReport:
    """Structure of the reduced polynomial: g2^k g3^l pattern, degree, double zero."""
    report = CheckReport(f"reduced structure m={m}")
    value = reduced_faulhaber_W(m).value
    for part, target, label in (
        (value.omega_part, m, "omega"),
        (value.xi_part, m - 1, "eta"),
    ):
        for (k, l), coeff in _g2g3_slices(part).items():
            if coeff.is_zero():
                continue
            report.add(
                f"{label} slice g2^{k} g3^{l} weight pattern",
                2 * k + 3 * l == target,
                f"2k+3l = {2 * k + 3 * l}, expected {target}",
            )
            report.add(
                f"{label} slice g2^{k} g3^{l} degree",
                coeff.degree_in("lambda") == m,
                f"degree {coeff.degree_in('lambda')}, expected {m}",
            )
            if m >= 2:
                double_zero = not coeff.coefficient_of("lambda", 0) and not coeff.coefficient_of(
                    "lambda", 1
                )
                report.add(
                    f"{label} slice g2^{k} g3^{l} double zero",
                    double_zero,
                    str(coeff),
                )
    return report


def _g2g3_slices(part: MultiPoly) -> Dict[tuple, MultiPoly]:
    out: Dict[tuple, MultiPoly] = {}
    for k, by_g2 in part.extract_by("g2").items():
        for l, coeff in by_g2.extract_by("g3").items():
            out[(k, l)] = coeff
    return out


# -- elliptic Bernoulli numbers ------------------------------------------------------

@dataclass(frozen=True)
class EllipticBernoulli:
    """Cycle integral of the squared (n-1)-th derivative of wp, halved."""

    index: int  # the even label 2n
    value: CohomElem


def _eb_index(index: int) -> int:
    if index < 2 or index % 2:
        raise ValueError("elliptic Bernoulli numbers are indexed by even 2n >= 2")
    return index // 2


def eb_route_direct(index: int) -> CohomElem:
    """Square the (n-1)-th derivative of wp, eliminate wp', integrate."""
    n = _eb_index(index)
    squared = wp_derivative(n - 1) ** 2
    in_wp = eliminate_odd_derivative(squared).substitute("g1", 0)
    return integrate_wp_polynomial(in_wp, REDUCED) * Fraction(1, 2)


def eb_route_deriv(index: int) -> CohomElem:
    """Integrate wp * A_{n-1}(wp) with the alternating sign."""
    n = _eb_index(index)
    d_n = sym("wp") * deriv_poly(n - 1).A.substitute("g1", 0)
    sign = Fraction(1, 2) if (n - 1) % 2 == 0 else Fraction(-1, 2)
    return integrate_wp_polynomial(d_n, REDUCED) * sign


def eb_route_recurrence(index: int, _memo: Optional[Dict[int, CohomElem]] = None) -> CohomElem:
    """Halphen-coefficient recurrence for the elliptic Bernoulli numbers."""
    n = _eb_index(index)
    memo = _memo if _memo is not None else {}
    cached = memo.get(n)
    if cached is not None:
        return cached
    sign = Fraction(1) if (n - 1) % 2 == 0 else Fraction(-1)
    lead = CohomElem(
        halphen(n + 1, n + 1),
        -(halphen(n + 1, n) - halphen(n, n)),
        REDUCED,
    ) * (sign * factorial(2 * n - 1))
    acc = lead
    for r in range(2, n):
        term_sign = Fraction(1) if r % 2 == 0 else Fraction(-1)
        lower = eb_route_recurrence(2 * (n - r), memo)
        coeff = term_sign * Fraction(factorial(2 * n - 1), factorial(2 * n - 2 * r - 1))
        acc = acc - lower * (halphen(n, r) * coeff)
    memo[n] = acc
    return acc


_EB_CACHE: Dict[int, EllipticBernoulli] = {}
_EB_LOCK = threading.Lock()


def elliptic_bernoulli(index: int, cross_validate: bool = True) -> EllipticBernoulli:
    """The elliptic Bernoulli number with even label ``index`` = 2n.

    With ``cross_validate`` (the default) all three routes are computed
    and compared; a mismatch raises :class:`RouteDisagreement` naming the
    first differing pair.
    """
    _eb_index(index)
    with _EB_LOCK:
        cached = _EB_CACHE.get(index)
    if cached is not None:
        return cached
    value = eb_route_deriv(index)
    if cross_validate:
        routes = [
            ("deriv", value),
            ("direct", eb_route_direct(index)),
            ("recurrence", eb_route_recurrence(index)),
        ]
        for (name_a, val_a), (name_b, val_b) in zip(routes, routes[1:]):
            if val_a != val_b:
                raise RouteDisagreement(
                    f"elliptic Bernoulli 2n={index}: route {name_a!r} gives {val_a}, "
                    f"route {name_b!r} gives {val_b}"
                )
    result = EllipticBernoulli(index, value)
    with _EB_LOCK:
        _EB_CACHE.setdefault(index, result)
    return result


def elliptic_bernoulli_general(index: int) -> CohomElem:
    """General-parameter analogue: replace g2, g3, eta by their g1-shifted versions."""
    value = elliptic_bernoulli(index).value
    ghat2 = G2 + Fraction(1, 12) * G1**2
    ghat3 = sym("g3") + Fraction(1, 12) * G1 * G2 + Fraction(1, 216) * G1**3
    omega_part = value.omega_part
    xi_part = value.xi_part
    for name, replacement in (("g2", ghat2), ("g3", ghat3)):
        omega_part = omega_part.substitute(name, replacement)
        xi_part = xi_part.substitute(name, replacement)
    # eta -> xi + (1/12) g1 omega redistributes the eta coefficient.
    new_omega = omega_part + Fraction(1, 12) * G1 * xi_part
    return CohomElem(new_omega, xi_part, GENERAL)


def discriminant_specialization(index: int) -> CheckReport:
    """On the nodal curve the elliptic Bernoulli number collapses to -B_2n g1^n xi."""
    n = _eb_index(index)
    if n <= 1:
        raise ValueError("the discriminant specialisation holds for 2n >= 4")
    report = CheckReport(f"discriminant specialisation 2n={index}")
    value = elliptic_bernoulli(index).value
    omega_part = value.omega_part
    xi_part = value.xi_part
    g2_sub = Fraction(1, 12) * G1**2
    g3_sub = Fraction(1, 216) * G1**3
    for name, replacement in (("g2", g2_sub), ("g3", g3_sub)):
        omega_part = omega_part.substitute(name, replacement)
        xi_part = xi_part.substitute(name, replacement)
    new_omega = omega_part + Fraction(1, 12) * G1 * xi_part
    expected_xi = -bernoulli_number(index) * G1**n
    report.add("omega part vanishes", new_omega.is_zero(), str(new_omega))
    report.add(
        "xi part equals -B_2n g1^n",
        xi_part == expected_xi,
        f"{xi_part} vs {expected_xi}",
    )
    return report


def faulhaber_lambda2_check(m: int) -> CheckReport:
    """The lambda^2 coefficient of the reduced polynomial is 8x an elliptic Bernoulli.

    Asserted for m >= 3; the m = 2 boundary case is reported without being
    required to hold.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    report = CheckReport(f"lambda^2 coefficient m={m}")
    value = reduced_faulhaber_W(m).value
    lam2 = CohomElem(
        value.omega_part.coefficient_of("lambda", 2),
        value.xi_part.coefficient_of("lambda", 2),
        REDUCED,
    )
    expected = elliptic_bernoulli(2 * m - 2).value * 8
    agrees = lam2 == expected
    if m == 2:
        report.add(
            "m=2 boundary (informational)",
            True,
            f"observed {'agreement' if agrees else 'disagreement'}: "
            f"{lam2} vs {expected}",
        )
    else:
        report.add(
            "lambda^2 coefficient equals 8x elliptic Bernoulli",
            agrees,
            f"{lam2} vs {expected}",
        )
    return report
