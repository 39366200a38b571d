"""Density-of-states numerators for the n-gap Lame operator.

The density of states is P_n(E) / (2 pi sqrt(R_{2n+1}(E))) with a monic
numerator P_n of degree n and a monic spectral polynomial R_{2n+1} whose
roots are the band edges.  Its high-energy expansion is generated by the
reduced elliptic Faulhaber polynomials, so expanding

    (1 + sum_k a_k E^-k) * (1 + sum_k b_k E^-k)^(-1/2)
        = 1 + sum_k r_k E^-k,        r_k = (2k-1)/2^(2k-1) * F_k^W(lambda) / (2 omega)

order by order determines the a_k uniquely once the spectral coefficients
b_k are known.  The b_k are built in symbolically for k <= 4; beyond that
they must be supplied through a spectral-table file.  For n = 1..5 the
exact spectral polynomials are built in and the matching reproduces the
full numerators.

Everything here is exact rational arithmetic; pbar (the period average of
wp, equal to -eta/omega) is an independent symbol of weight 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .faulhaber import reduced_faulhaber_W
from .multipoly import MultiPoly, STANDARD, SymbolError, const, sym
from .report import CheckReport

EN = sym("n")
E = sym("E")
G2 = sym("g2")
G3 = sym("g3")
PBAR = sym("pbar")


class SpectralTableError(ValueError):
    """A spectral-table file violated the schema or an invariant."""


class MissingSpectralCoefficient(ValueError):
    """Matching was asked for more orders than the spectral data provides."""


@dataclass(frozen=True)
class SpectralPoly:
    """Monic spectral polynomial given through its subleading coefficients b_1..b_K.

    ``n`` is the gap number for a concrete curve, or None when the
    coefficients are symbolic in n.
    """

    n: Optional[int]
    coeffs: Tuple[MultiPoly, ...]

    @property
    def max_k(self) -> int:
        return len(self.coeffs)

    def b(self, k: int) -> MultiPoly:
        if not 1 <= k <= len(self.coeffs):
            raise MissingSpectralCoefficient(
                f"spectral coefficient b_{k} is not available (have k <= {len(self.coeffs)})"
            )
        return self.coeffs[k - 1]


@dataclass(frozen=True)
class DosNumerator:
    """Coefficients a_1..a_K of the monic numerator, highest order first absent."""

    order: int
    coeffs: Tuple[MultiPoly, ...]
    n: Optional[int] = None

    def a(self, k: int) -> MultiPoly:
        if not 1 <= k <= self.order:
            raise IndexError(f"a_{k} outside computed order {self.order}")
        return self.coeffs[k - 1]


# -- built-in spectral coefficients ------------------------------------------------

def _poch_factors(*shifts: int) -> MultiPoly:
    """Product of linear factors (2n + shift) over the given shifts."""
    acc = const(1)
    for s in shifts:
        acc = acc * (2 * EN + s)
    return acc


_BUILTIN_B: Dict[int, MultiPoly] = {}


def builtin_spectral_b(k: int) -> MultiPoly:
    """Symbolic spectral coefficient b_k(n), available for 1 <= k <= 4."""
    if not 1 <= k <= 4:
        raise MissingSpectralCoefficient(
            "symbolic spectral coefficients are built in only for k <= 4; "
            "supply the higher ones with load_spectral_table()"
        )
    if not _BUILTIN_B:
        _BUILTIN_B[1] = const(0)
        _BUILTIN_B[2] = (
            Fraction(-1, 120) * G2 * EN * (EN + 1) * _poch_factors(-1, 1, 3)
        )
        _BUILTIN_B[3] = (
            Fraction(-1, 840) * G3 * EN * (EN + 1) * _poch_factors(-3, -1, 1, 3, 5)
        )
        _BUILTIN_B[4] = (
            Fraction(1, 201600)
            * G2**2
            * EN
            * (EN - 1)
            * (EN + 1)
            * _poch_factors(-1, 1, 3)
            * (56 * EN**4 + 76 * EN**3 - 94 * EN**2 + 201 * EN + 630)
        )
    return _BUILTIN_B[k]


def symbolic_spectral(max_k: int = 4) -> SpectralPoly:
    return SpectralPoly(None, tuple(builtin_spectral_b(k) for k in range(1, max_k + 1)))


def load_spectral_table(path: str) -> SpectralPoly:
    """Read a symbolic spectral table {"max_k": K, "b": [poly...]} and validate it."""
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, dict) or "max_k" not in data or "b" not in data:
        raise SpectralTableError("spectral table must carry 'max_k' and 'b' entries")
    max_k = data["max_k"]
    polys = data["b"]
    if not isinstance(polys, list) or len(polys) != max_k:
        raise SpectralTableError(f"expected {max_k} polynomials under 'b', got {len(polys)}")
    coeffs: List[MultiPoly] = []
    for i, raw in enumerate(polys, start=1):
        try:
            poly = MultiPoly.from_wire(raw, STANDARD)
        except (KeyError, ValueError, SymbolError) as exc:
            raise SpectralTableError(f"b[{i}]: malformed polynomial: {exc}") from exc
        for name in poly.table.names:
            if poly.uses(name) and name not in ("n", "g2", "g3"):
                raise SpectralTableError(f"b[{i}]: unexpected symbol {name!r}")
        if i == 1 and poly:
            raise SpectralTableError("b[1] must be zero")
        if poly and not poly.is_homogeneous(2 * i):
            raise SpectralTableError(f"b[{i}]: not weight-homogeneous of weight {2 * i}")
        if poly.degree_in("n") > floor(5 * i / 2):
            raise SpectralTableError(
                f"b[{i}]: degree {poly.degree_in('n')} in n exceeds {floor(5 * i / 2)}"
            )
        coeffs.append(poly)
    return SpectralPoly(None, tuple(coeffs))


# -- built-in exact spectral polynomials for n = 1..5 ---------------------------------

def _companion_product(factor_coeffs: Sequence[MultiPoly]) -> MultiPoly:
    """Product of factor(e_k) over the three roots e_k of 4t^3 - g2 t - g3.

    ``factor_coeffs`` lists the coefficients of the factor as a polynomial
    in the root variable t (constant first).  The product over the roots
    equals det(factor(C)) with C the companion matrix of
    t^3 - (g2/4) t - (g3/4), evaluated by Horner over 3x3 matrices.
    """
    zero = const(0)
    one = const(1)
    q = Fraction(1, 4) * G2
    r = Fraction(1, 4) * G3
    companion = [
        [zero, zero, r * one],
        [one, zero, q * one],
        [zero, one, zero],
    ]

    def mat_mul(a, b):
        return [
            [sum((a[i][k] * b[k][j] for k in range(3)), zero) for j in range(3)]
            for i in range(3)
        ]

    def mat_scale_add(mat, scalar_poly):
        return [
            [mat[i][j] + (scalar_poly if i == j else zero) for j in range(3)]
            for i in range(3)
        ]

    acc = [[zero] * 3 for _ in range(3)]
    for coeff in reversed(list(factor_coeffs)):
        acc = mat_scale_add(mat_mul(acc, companion), coeff)
    det = (
        acc[0][0] * (acc[1][1] * acc[2][2] - acc[1][2] * acc[2][1])
        - acc[0][1] * (acc[1][0] * acc[2][2] - acc[1][2] * acc[2][0])
        + acc[0][2] * (acc[1][0] * acc[2][1] - acc[1][1] * acc[2][0])
    )
    return det


def _radicand(n: int) -> MultiPoly:
    """Monic degree-(2n+1) spectral polynomial in E for n = 1..5."""
    if n == 1:
        return E**3 - Fraction(1, 4) * G2 * E + Fraction(1, 4) * G3
    if n == 2:
        return (
            E**5
            - Fraction(21, 4) * G2 * E**3
            - Fraction(27, 4) * G3 * E**2
            + Fraction(27, 4) * G2**2 * E
            + Fraction(81, 4) * G2 * G3
        )
    if n == 3:
        return (
            E**7
            - Fraction(63, 2) * G2 * E**5
            - Fraction(297, 2) * G3 * E**4
            + Fraction(4185, 16) * G2**2 * E**3
            + Fraction(18225, 8) * G2 * G3 * E**2
            - Fraction(3375, 16) * (G2**3 - 27 * G3**2) * E
        )
    if n == 4:
        cubic = E**3 - 52 * G2 * E - 560 * G3
        product = _companion_product(
            [E**2 - 7 * G2, -10 * E, const(-35)]  # E^2 - 10 e E - 35 e^2 - 7 g2
        )
        return cubic * product
    if n == 5:
        # The quadratic cofactor is weight-homogeneous only with g2 to the
        # first power; the expansion is cross-checked against the symbolic
        # b_2, b_3, b_4 at n = 5 in the test suite.
        quadratic = E**2 - 27 * G2
        product = _companion_product(
            [
                E**3 - 132 * G2 * E - 540 * G3,
                15 * E**2,
                315 * E,
                const(-675),
            ]  # E^3 + 15 e E^2 + (315 e^2 - 132 g2) E - 675 e^3 - 540 g3
        )
        return quadratic * product
    raise ValueError("built-in spectral polynomials cover n = 1..5 only")


def spectral_from_radicand(n: int) -> SpectralPoly:
    """Exact spectral coefficients for a concrete gap number n = 1..5."""
    if not 1 <= n <= 5:
        raise ValueError("built-in spectral polynomials cover n = 1..5 only")
    monic = _radicand(n)
    degree = 2 * n + 1
    if monic.coefficient_of("E", degree) != const(1):
        raise AssertionError(f"radicand for n={n} is not monic of degree {degree}")
    coeffs = tuple(monic.coefficient_of("E", degree - k) for k in range(1, degree + 1))
    return SpectralPoly(n, coeffs)


# -- series matching -------------------------------------------------------------------

def _binomial_half_series(b: Sequence[MultiPoly], order: int, zero: MultiPoly) -> List[MultiPoly]:
    """Truncated (1 + s)^(-1/2) where s = sum b_k E^-k; entry j is the E^-j coefficient."""
    out = [const(1)] + [zero] * order
    spower = [const(1)] + [zero] * order  # s^j accumulated
    coeff = Fraction(1)
    for j in range(1, order + 1):
        nxt = [zero] * (order + 1)
        for i in range(j - 1, order + 1):
            if spower[i].is_zero():
                continue
            for k, bk in enumerate(b, start=1):
                if i + k <= order:
                    nxt[i + k] = nxt[i + k] + spower[i] * bk
        spower = nxt
        coeff *= Fraction(-(2 * j - 1), 2 * j)  # C(-1/2, j) accumulation
        for i in range(j, order + 1):
            out[i] = out[i] + coeff * spower[i]
    return out


def dos_series_faulhaber_side(n: Union[int, None], order: int) -> List[MultiPoly]:
    """Coefficients r_1..r_K of the high-energy expansion of the density of states.

    ``n`` may be a concrete gap number or None for symbolic n; the result
    lives in Q[n, g2, g3, pbar] (division by omega replaces eta/omega with
    -pbar).
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    lam: Union[MultiPoly, Fraction]
    if n is None:
        lam = Fraction(1, 2) * EN * (EN + 1)
    else:
        lam = Fraction(n * (n + 1), 2)
    out: List[MultiPoly] = []
    for k in range(1, order + 1):
        fw = reduced_faulhaber_W(k).value
        omega_side = fw.omega_part.substitute("lambda", lam)
        eta_side = fw.xi_part.substitute("lambda", lam)
        scale = Fraction(2 * k - 1, 2 ** (2 * k - 1))
        rk = scale * (Fraction(1, 2) * omega_side - Fraction(1, 2) * eta_side * PBAR)
        out.append(rk)
    return out


def integrated_density_coefficients(n: Union[int, None], order: int) -> List[MultiPoly]:
    """Coefficients of the integrated-density expansion.

    Entry k (0-based) multiplies E^-k in

        N(E) = sqrt(E)/pi - 1/(pi sqrt(E)) * sum_{k>=0} entry_k E^-k,

    i.e. entry_k = F_{k+1}(lambda) / (4 omega 4^k) with eta/omega replaced
    by -pbar.  Derived from the density series (the same underlying
    object), so term-differentiating N reproduces the density series by
    construction: (2k+1) entry_k = r_{k+1}.
    """
    rho = dos_series_faulhaber_side(n, order + 1)
    return [rho[k] * Fraction(1, 2 * k + 1) for k in range(order + 1)]


def match_numerator(spectral: SpectralPoly, order: int) -> DosNumerator:
    """Solve the triangular system equating the two expansions of the density."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if spectral.max_k < order:
        raise MissingSpectralCoefficient(
            f"matching to order {order} needs b_1..b_{order}; "
            f"first missing order is {spectral.max_k + 1}"
        )
    zero = MultiPoly.zero(STANDARD)
    b = [spectral.b(k) for k in range(1, order + 1)]
    if spectral.n is not None:
        rhs = dos_series_faulhaber_side(spectral.n, order)
    else:
        rhs = dos_series_faulhaber_side(None, order)
    inv_sqrt = _binomial_half_series(b, order, zero)
    a: List[MultiPoly] = [const(1)]
    for k in range(1, order + 1):
        acc = rhs[k - 1]
        for j in range(k):
            acc = acc - a[j] * inv_sqrt[k - j]
        a.append(acc)
    return DosNumerator(order, tuple(a[1:]), spectral.n)


def numerator_for_integer_n(n: int) -> DosNumerator:
    """The exact numerator P_n for a concrete gap number n = 1..5."""
    return match_numerator(spectral_from_radicand(n), n)


# -- symbolic coefficients and their closed-form checks -----------------------------------

def dos_coefficient(k: int) -> MultiPoly:
    """Symbolic numerator coefficient a_k(n) for 1 <= k <= 4."""
    if not 1 <= k <= 4:
        raise MissingSpectralCoefficient(
            "symbolic a_k needs b_k beyond the built-in table for k > 4"
        )
    return match_numerator(symbolic_spectral(4), k).a(k)


def gap_factor(k: int) -> MultiPoly:
    """U_k(n) = (n+1) n (n-1) ... (n-k+1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    acc = EN + 1
    for j in range(k):
        acc = acc * (EN - j)
    return acc


def divisibility_report(k: int) -> CheckReport:
    """a_k is divisible by U_k(n) with the expected degree and weight."""
    report = CheckReport(f"numerator coefficient a_{k}")
    ak = dos_coefficient(k)
    quotient, remainder = ak.divmod_in("n", gap_factor(k))
    report.add("divisible by U_k(n)", remainder.is_zero(), f"remainder {remainder}")
    report.add(
        "degree in n",
        ak.degree_in("n") == floor(5 * k / 2),
        f"degree {ak.degree_in('n')}, expected {floor(5 * k / 2)}",
    )
    report.add(
        "weight 2k",
        ak.is_homogeneous(2 * k),
        f"weight {ak.weight()}, expected {2 * k}",
    )
    _ = quotient
    return report


def hat_coefficient_check(k: int, printed_hat: MultiPoly) -> CheckReport:
    """Symbolic a_k equals U_k(n) times a supplied reduced coefficient (k <= 4)."""
    report = CheckReport(f"reduced coefficient a_{k}/U_k")
    ak = dos_coefficient(k)
    report.add(
        "a_k == U_k * hat",
        ak == gap_factor(k) * printed_hat,
        f"{ak} vs U_k * ({printed_hat})",
    )
    return report
