"""Differential polynomials in u_0, u_1, u_2, ... with exact coefficients.

A monomial u_0^{m_0} u_1^{m_1} ... u_k^{m_k} has *rank*
sum_j (2 + j) m_j: the function u has rank 2 and each x-derivative adds
one.  Exponent vectors are variable-length tuples (trailing zeros are
stripped) so the derivative alphabet can grow as far as a computation
needs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .multipoly import (
    MultiPoly,
    Scalar,
    _coerce,
    _fraction_str,
    render_terms,
)

Exponents = Tuple[int, ...]


def _strip(exp: Sequence[int]) -> Exponents:
    exp = list(exp)
    while exp and exp[-1] == 0:
        exp.pop()
    return tuple(exp)


def monomial_rank(exp: Exponents) -> int:
    return sum((2 + j) * m for j, m in enumerate(exp))


class DiffPoly:
    """Sparse differential polynomial over the rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        clean: Dict[Exponents, Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                c = _coerce(coeff)
                if not c:
                    continue
                key = _strip(exp)
                if any(e < 0 for e in key):
                    raise ValueError("negative exponent in differential monomial")
                acc = clean.get(key, Fraction(0)) + c
                if acc:
                    clean[key] = acc
                else:
                    clean.pop(key, None)
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "DiffPoly":
        return cls()

    @classmethod
    def constant(cls, value: Scalar) -> "DiffPoly":
        c = _coerce(value)
        return cls({(): c} if c else None)

    @classmethod
    def u(cls, j: int, power: int = 1) -> "DiffPoly":
        if j < 0 or power < 0:
            raise ValueError("derivative order and power must be nonnegative")
        exp = [0] * (j + 1)
        exp[j] = power
        return cls({tuple(exp): Fraction(1)})

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def max_derivative(self) -> int:
        """Largest derivative order that occurs (-1 for constants/zero)."""
        return max((len(exp) - 1 for exp in self.terms if exp), default=-1)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: Union["DiffPoly", Scalar]) -> "DiffPoly":
        if not isinstance(other, DiffPoly):
            other = DiffPoly.constant(other)
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            acc = out.get(exp, Fraction(0)) + coeff
            if acc:
                out[exp] = acc
            else:
                out.pop(exp, None)
        res = DiffPoly()
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "DiffPoly":
        res = DiffPoly()
        res.terms = {exp: -c for exp, c in self.terms.items()}
        return res

    def __sub__(self, other: Union["DiffPoly", Scalar]) -> "DiffPoly":
        if not isinstance(other, DiffPoly):
            other = DiffPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "DiffPoly":
        return (-self) + other

    def __mul__(self, other: Union["DiffPoly", Scalar]) -> "DiffPoly":
        if not isinstance(other, DiffPoly):
            return self.scale(other)
        out: Dict[Exponents, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                if len(ea) < len(eb):
                    ea_p = ea + (0,) * (len(eb) - len(ea))
                    exp = tuple(x + y for x, y in zip(ea_p, eb))
                else:
                    eb_p = eb + (0,) * (len(ea) - len(eb))
                    exp = tuple(x + y for x, y in zip(ea, eb_p))
                acc = out.get(exp, Fraction(0)) + ca * cb
                if acc:
                    out[exp] = acc
                else:
                    out.pop(exp, None)
        res = DiffPoly()
        res.terms = out
        return res

    def __rmul__(self, other: Scalar) -> "DiffPoly":
        return self.scale(other)

    def scale(self, factor: Scalar) -> "DiffPoly":
        c = _coerce(factor)
        res = DiffPoly()
        if c:
            res.terms = {exp: coeff * c for exp, coeff in self.terms.items()}
        return res

    def __pow__(self, power: int) -> "DiffPoly":
        if not isinstance(power, int) or power < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = DiffPoly.constant(1)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = DiffPoly.constant(other)
        if not isinstance(other, DiffPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    # -- rank grading -----------------------------------------------------------

    def rank_report(self) -> Tuple[Optional[int], Optional[Tuple[Exponents, Exponents]]]:
        it = iter(sorted(self.terms))
        try:
            first = next(it)
        except StopIteration:
            return None, None
        r = monomial_rank(first)
        for exp in it:
            if monomial_rank(exp) != r:
                return None, (first, exp)
        return r, None

    def rank(self) -> Optional[int]:
        """Common rank of all monomials, or None if inhomogeneous or zero."""
        r, offending = self.rank_report()
        return r if offending is None else None

    def is_rank_homogeneous(self, rank: Optional[int] = None) -> bool:
        r, offending = self.rank_report()
        if offending is not None:
            return False
        if r is None:
            return True
        return rank is None or r == rank

    # -- calculus ------------------------------------------------------------------

    def total_x_derivative(self) -> "DiffPoly":
        """Apply d/dx with u_j -> u_{j+1} by the Leibniz rule."""
        out: Dict[Exponents, Fraction] = {}
        for exp, coeff in self.terms.items():
            for j, m in enumerate(exp):
                if not m:
                    continue
                lowered = list(exp) + [0, 0]
                lowered[j] -= 1
                lowered[j + 1] += 1
                key = _strip(lowered)
                acc = out.get(key, Fraction(0)) + coeff * m
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        res = DiffPoly()
        res.terms = out
        return res

    def substitute(self, images: Sequence[MultiPoly]) -> MultiPoly:
        """Replace u_j by images[j]; returns a MultiPoly over the images' table."""
        if not images:
            raise ValueError("need at least one image polynomial")
        table = images[0].table
        result = MultiPoly.zero(table)
        for exp, coeff in self.terms.items():
            if len(exp) > len(images):
                raise ValueError(
                    f"monomial uses u_{len(exp) - 1} but only {len(images)} images supplied"
                )
            acc = MultiPoly.constant(coeff, table)
            for j, m in enumerate(exp):
                if m:
                    acc = acc * images[j] ** m
            result = result + acc
        return result

    # -- coefficients ------------------------------------------------------------------

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(_strip(exp), Fraction(0))

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    # -- canonical order, wire format, rendering -----------------------------------------

    def sorted_terms(self) -> List[Tuple[Exponents, Fraction]]:
        width = max((len(exp) for exp in self.terms), default=0)
        padded = [
            (exp + (0,) * (width - len(exp)), exp, coeff)
            for exp, coeff in self.terms.items()
        ]
        padded.sort(key=lambda item: (sum(item[0]), item[0]), reverse=True)
        return [(exp, coeff) for _, exp, coeff in padded]

    def to_wire(self) -> dict:
        width = max((len(exp) for exp in self.terms), default=0)
        terms = []
        for exp, coeff in self.sorted_terms():
            terms.append(
                {
                    "coeff": _fraction_str(coeff),
                    "exp": list(exp + (0,) * (width - len(exp))),
                }
            )
        return {"symbols": [f"u{j}" for j in range(width)], "terms": terms}

    @classmethod
    def from_wire(cls, data: Mapping) -> "DiffPoly":
        symbols = list(data["symbols"])
        orders = []
        for name in symbols:
            if not name.startswith("u") or not name[1:].isdigit():
                raise ValueError(f"not a derivative symbol: {name!r}")
            orders.append(int(name[1:]))
        terms: Dict[Exponents, Fraction] = {}
        for item in data["terms"]:
            raw = list(item["exp"])
            if len(raw) != len(orders):
                raise ValueError("exponent vector length does not match symbol list")
            width = max(orders, default=-1) + 1
            exp = [0] * width
            for order, e in zip(orders, raw):
                exp[order] += int(e)
            key = _strip(exp)
            terms[key] = terms.get(key, Fraction(0)) + Fraction(item["coeff"])
        return cls(terms)

    def __str__(self) -> str:
        ordered = self.sorted_terms()
        width = max((len(exp) for exp, _ in ordered), default=0)
        names = [f"u{j}" for j in range(width)]
        padded = [(exp + (0,) * (width - len(exp)), coeff) for exp, coeff in ordered]
        return render_terms(padded, names)

    def __repr__(self) -> str:
        return f"DiffPoly({self})"


def u(j: int, power: int = 1) -> DiffPoly:
    """Shorthand constructor for u_j^power."""
    return DiffPoly.u(j, power)
