"""Symbolic calculus of the Weierstrass-type function and its period integrals.

The function wp satisfies

    wp'^2 = 4 wp^3 - g1 wp^2 - g2 wp - g3,
    wp''  = 6 wp^2 - g1 wp - g2/2,

so every even derivative wp^(2k) is a polynomial A_k(wp) and every odd one
is A_k'(wp) * wp'.  Working modulo exact differentials, any polynomial in
wp integrates over a cycle to an element of the cohomology basis:
K_n = contour integral of wp^n reduces to (omega, xi) via a third-order
recurrence, or equivalently through the Halphen coefficients B_r^(n) that
expand wp^n in even derivatives of wp.

No z-dependence ever appears: wp and wp' are ordinary polynomial symbols
and cycle integration is the linear map wp^n -> K_n.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Tuple, Union

from .cohom import GENERAL, REDUCED, CohomElem
from .multipoly import MultiPoly, Scalar, STANDARD, const, sym
from .report import CheckReport

WP = sym("wp")
WP1 = sym("wp1")
G1 = sym("g1")
G2 = sym("g2")
G3 = sym("g3")

#: Right-hand side of the first-order equation: wp'^2 = CUBIC.
CUBIC = 4 * WP**3 - G1 * WP**2 - G2 * WP - G3
#: Second derivative: wp'' as a polynomial in wp.
WP2 = 6 * WP**2 - G1 * WP - Fraction(1, 2) * G2


class OddDerivativePower(ValueError):
    """An odd power of wp' survived where only even powers are legal."""


@dataclass(frozen=True)
class CurveParams:
    """Curve parameters; the reduced pair is always derived, never stored."""

    g1: Union[MultiPoly, Fraction]
    g2: Union[MultiPoly, Fraction]
    g3: Union[MultiPoly, Fraction]

    @property
    def reduced_g2(self):
        return self.g2 + Fraction(1, 12) * self.g1 * self.g1

    @property
    def reduced_g3(self):
        return (
            self.g3
            + Fraction(1, 12) * self.g1 * self.g2
            + Fraction(1, 216) * self.g1 * self.g1 * self.g1
        )


# -- derivative polynomials -------------------------------------------------

@dataclass(frozen=True)
class DerivPoly:
    """wp^(2k) = A(wp) and wp^(2k+1) = A'(wp) wp'."""

    k: int
    A: MultiPoly


_DERIV: List[MultiPoly] = [WP]
_DERIV_LOCK = threading.Lock()


def deriv_poly(k: int) -> DerivPoly:
    """The polynomial giving the 2k-th derivative of wp."""
    if k < 0:
        raise ValueError("k must be >= 0")
    with _DERIV_LOCK:
        while len(_DERIV) <= k:
            prev = _DERIV[-1]
            dp = prev.derivative("wp")
            _DERIV.append(CUBIC * dp.derivative("wp") + WP2 * dp)
        return DerivPoly(k, _DERIV[k])


def wp_derivative(j: int) -> MultiPoly:
    """The j-th derivative of wp as a polynomial in wp, wp' and g1, g2, g3."""
    if j < 0:
        raise ValueError("derivative order must be >= 0")
    if j % 2 == 0:
        return deriv_poly(j // 2).A
    return deriv_poly((j - 1) // 2).A.derivative("wp") * WP1


def eliminate_odd_derivative(p: MultiPoly) -> MultiPoly:
    """Replace every wp'^2 by the defining cubic; error on odd powers.

    An odd power of wp' signals a rank-parity bug upstream, so it is
    reported loudly instead of being absorbed.
    """
    result = MultiPoly.zero(p.table)
    for power, coeff_poly in p.extract_by("wp1").items():
        if power % 2:
            raise OddDerivativePower(f"wp' appears with odd power {power}")
        result = result + coeff_poly * CUBIC ** (power // 2)
    return result


# -- period integrals --------------------------------------------------------

_KSTAR: List[CohomElem] = []
_KRED: List[CohomElem] = []
_K_LOCK = threading.Lock()


def period_integral_general(n: int) -> CohomElem:
    """K*_n = contour integral of wp^n in the (omega, xi) basis."""
    if n < 0:
        raise ValueError("n must be >= 0")
    with _K_LOCK:
        if not _KSTAR:
            _KSTAR.append(CohomElem(const(2), const(0), GENERAL))
            _KSTAR.append(CohomElem(const(0), const(-2), GENERAL))
            _KSTAR.append(
                CohomElem(Fraction(1, 6) * G2, Fraction(-1, 3) * G1, GENERAL)
            )
        while len(_KSTAR) <= n:
            m = len(_KSTAR)
            rhs = (
                (2 * m - 2) * G1 * _KSTAR[m - 1]
                + (2 * m - 3) * G2 * _KSTAR[m - 2]
                + (2 * m - 4) * G3 * _KSTAR[m - 3]
            )
            _KSTAR.append(Fraction(1, 8 * m - 4) * rhs)
        return _KSTAR[n]


def period_integral_reduced(n: int) -> CohomElem:
    """K_n in the (omega, eta) basis (g1 = 0)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    with _K_LOCK:
        if not _KRED:
            _KRED.append(CohomElem(const(2), const(0), REDUCED))
            _KRED.append(CohomElem(const(0), const(-2), REDUCED))
            _KRED.append(CohomElem(Fraction(1, 6) * G2, const(0), REDUCED))
        while len(_KRED) <= n:
            m = len(_KRED)
            rhs = (2 * m - 3) * G2 * _KRED[m - 2] + (2 * m - 4) * G3 * _KRED[m - 3]
            _KRED.append(Fraction(1, 8 * m - 4) * rhs)
        return _KRED[n]


def integrate_wp_polynomial(q: MultiPoly, basis: str = REDUCED) -> CohomElem:
    """Cycle-integrate a polynomial in wp: linear extension of wp^n -> K_n."""
    integral = {GENERAL: period_integral_general, REDUCED: period_integral_reduced}[basis]
    result = CohomElem.zero(basis, q.table)
    for power, coeff in q.extract_by("wp").items():
        result = result + integral(power) * coeff
    return result


# -- Halphen coefficients ------------------------------------------------------

_HALPHEN: Dict[Tuple[int, int], MultiPoly] = {}
_HALPHEN_LOCK = threading.Lock()


def halphen(n: int, r: int) -> MultiPoly:
    """Halphen coefficient B_r^(n); zero outside 0 <= r <= n."""
    if n < 0 or r < 0 or r > n:
        return const(0)
    if r == 0:
        return const(1)
    if r == 1:
        return const(0)
    key = (n, r)
    with _HALPHEN_LOCK:
        cached = _HALPHEN.get(key)
    if cached is not None:
        return cached
    # n >= 2 here because 2 <= r <= n.
    value = (
        Fraction((2 * n - 2 * r - 2) * (2 * n - 2 * r - 1), (2 * n - 2) * (2 * n - 1))
        * halphen(n - 1, r)
        + Fraction(2 * n - 3, 4 * (2 * n - 1)) * G2 * halphen(n - 2, r - 2)
        + Fraction(n - 2, 2 * (2 * n - 1)) * G3 * halphen(n - 3, r - 3)
    )
    with _HALPHEN_LOCK:
        _HALPHEN.setdefault(key, value)
    return value


def power_of_wp_expansion(n: int) -> MultiPoly:
    """wp^n rewritten through even derivatives of wp via Halphen coefficients."""
    result = halphen(n, n)
    for r in range(n):
        result = result + (
            Fraction(1, factorial(2 * n - 2 * r - 1))
            * halphen(n, r)
            * deriv_poly(n - 1 - r).A.substitute("g1", 0)
        )
    return result


def kn_via_halphen(n: int) -> CohomElem:
    """K_n = 2 B_n^(n) omega - 2 B_{n-1}^(n) eta."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return CohomElem(2 * halphen(n, n), -2 * halphen(n, n - 1), REDUCED)


def kn_lemniscatic(n: int) -> CohomElem:
    """Closed form of K_n for g3 = 0; the parity of n selects the basis leg."""
    if n < 0:
        raise ValueError("n must be >= 0")
    r = n % 2
    prod = Fraction(1)
    for k in range(1, (n - 1) // 2 + 1):
        prod *= Fraction(4 * k - 2 * r + 1) ** 2
    scale = 2 * Fraction(factorial(n), factorial(2 * n)) * prod
    body = scale * G2 ** (n // 2)
    return CohomElem(body * (1 - r), body * (-2 * r), REDUCED)


def kn_equianharmonic(n: int) -> CohomElem:
    """Closed form of K_n for g2 = 0, split by n mod 3 (zero for n = 2 mod 3)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 3 == 2:
        return CohomElem.zero(REDUCED)
    third = n // 3
    prod = Fraction(1)
    for k in range(1, third + 1):
        prod *= Fraction(n - 3 * k + 1, 2 * n - 6 * k + 5)
    scale = Fraction(2) ** (1 - third) * prod
    body = scale * G3**third
    if n % 3 == 0:
        return CohomElem(body, MultiPoly.zero(body.table), REDUCED)
    return CohomElem(MultiPoly.zero(body.table), -body, REDUCED)


# -- Laurent coefficients and Bernoulli-Hurwitz numbers ----------------------------

_LAURENT: Dict[int, MultiPoly] = {2: Fraction(1, 20) * G2, 3: Fraction(1, 28) * G3}
_LAURENT_LOCK = threading.Lock()


def laurent_c(k: int) -> MultiPoly:
    """Coefficient c_k of z^(2k-2) in the Laurent expansion of wp at its pole."""
    if k < 2:
        raise ValueError("Laurent coefficients start at k = 2")
    with _LAURENT_LOCK:
        cached = _LAURENT.get(k)
    if cached is not None:
        return cached
    acc = MultiPoly.zero(STANDARD)
    for m in range(2, k - 1):
        acc = acc + laurent_c(m) * laurent_c(k - m)
    value = Fraction(3, (2 * k + 1) * (k - 3)) * acc
    with _LAURENT_LOCK:
        _LAURENT.setdefault(k, value)
    return value


def bernoulli_hurwitz(index: int) -> MultiPoly:
    """BH_{2k} = 2k (2k-2)! c_k for an even index 2k >= 4."""
    if index < 4 or index % 2:
        raise ValueError("Bernoulli-Hurwitz numbers are indexed by even 2k >= 4")
    k = index // 2
    return 2 * k * factorial(2 * k - 2) * laurent_c(k)


def wp_power_principal_part(n: int) -> Dict[int, MultiPoly]:
    """Coefficients {r: [z^(-(2n-2r))] of wp^n} for 0 <= r <= n-1.

    Computed by raising the truncated Laurent series to the n-th power,
    independently of the Halphen recurrence.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    # wp = z^-2 (1 + sum_{k>=2} c_k z^{2k}); track the bracket as a series
    # in t = z^2 truncated beyond t^(n-1).
    series: List[MultiPoly] = [const(1)] + [const(0)] * (n - 1)
    base = [const(0)] * n
    base[0] = const(1)
    for k in range(2, n):
        base[k] = laurent_c(k)
    for _ in range(n):
        nxt = [MultiPoly.zero(STANDARD) for _ in range(n)]
        for i, si in enumerate(series):
            if si.is_zero():
                continue
            for j in range(n - i):
                if base[j].is_zero():
                    continue
                nxt[i + j] = nxt[i + j] + si * base[j]
        series = nxt
    return {r: series[r] for r in range(n)}


def principal_part_check(n: int) -> CheckReport:
    """Verify the principal part of wp^n against the Halphen coefficients."""
    report = CheckReport(f"principal part of wp^{n}")
    coeffs = wp_power_principal_part(n)
    for r in range(n):
        expected = halphen(n, r)
        got = coeffs[r]
        report.add(
            f"r={r}",
            got == expected,
            f"series gives {got}, recurrence gives {expected}",
        )
    return report
