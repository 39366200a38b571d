"""Sparse multivariate polynomials with exact rational coefficients.

Every symbolic object in this library is built from two containers: the
multivariate polynomial implemented here (coefficients are
``fractions.Fraction``, monomials are exponent vectors over a fixed symbol
table) and the differential polynomial in :mod:`elliptica.diffpoly`.
Arithmetic is exact; there is no floating point anywhere in this module.

Each symbol carries an integer weight used for homogeneity checks
(``weight_of``).  The standard table below fixes the weights used
throughout:

    E:0  eta:+1  g1:2  g2:4  g3:6  lambda:0  n:0  omega:-1
    pbar:2  wp:2  wp1:3  x:0  xi:+1

``wp`` stands for the Weierstrass-type function and ``wp1`` for its first
derivative; both only ever appear as intermediate symbols during
elimination and never survive into results.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

Scalar = Union[Fraction, int]


class SymbolTableMismatch(ValueError):
    """Two polynomials over different symbol tables were combined."""


class SymbolError(KeyError):
    """A symbol name is unknown to the table at hand."""


class SymbolTable:
    """Immutable ordered set of (name, weight) pairs.

    The order of the names fixes the exponent-vector layout and the
    canonical term order, so it must never change for a given table.
    """

    __slots__ = ("names", "weights", "_index")

    def __init__(self, entries: Sequence[Tuple[str, int]]):
        names = tuple(name for name, _ in entries)
        if len(set(names)) != len(names):
            raise ValueError("duplicate symbol names in table")
        self.names: Tuple[str, ...] = names
        self.weights: Tuple[int, ...] = tuple(int(w) for _, w in entries)
        self._index: Dict[str, int] = {name: i for i, name in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise SymbolError(f"unknown symbol {name!r}") from None

    def weight(self, name: str) -> int:
        return self.weights[self.index(name)]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SymbolTable)
            and self.names == other.names
            and self.weights == other.weights
        )

    def __hash__(self) -> int:
        return hash((self.names, self.weights))

    def __repr__(self) -> str:
        return f"SymbolTable({list(zip(self.names, self.weights))!r})"


#: The symbol table shared by every computation in the library.
STANDARD = SymbolTable(
    [
        ("E", 0),
        ("eta", 1),
        ("g1", 2),
        ("g2", 4),
        ("g3", 6),
        ("lambda", 0),
        ("n", 0),
        ("omega", -1),
        ("pbar", 2),
        ("wp", 2),
        ("wp1", 3),
        ("x", 0),
        ("xi", 1),
    ]
)


def _coerce(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational scalar, got {type(value).__name__}")


class MultiPoly:
    """Sparse polynomial: map from exponent vector to nonzero Fraction.

    Instances are immutable by convention; all operations return new
    objects, which makes them safe to share between concurrent callers
    and to memoize.
    """

    __slots__ = ("table", "terms")

    def __init__(
        self,
        table: SymbolTable,
        terms: Optional[Mapping[Tuple[int, ...], Scalar]] = None,
    ):
        self.table = table
        clean: Dict[Tuple[int, ...], Fraction] = {}
        if terms:
            width = len(table)
            for exp, coeff in terms.items():
                if len(exp) != width:
                    raise ValueError(
                        f"exponent vector {exp!r} has length {len(exp)}, table has {width} symbols"
                    )
                c = _coerce(coeff)
                if c:
                    clean[tuple(int(e) for e in exp)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, table: SymbolTable = STANDARD) -> "MultiPoly":
        return cls(table)

    @classmethod
    def constant(cls, value: Scalar, table: SymbolTable = STANDARD) -> "MultiPoly":
        c = _coerce(value)
        if not c:
            return cls(table)
        return cls(table, {(0,) * len(table): c})

    @classmethod
    def symbol(cls, name: str, table: SymbolTable = STANDARD, power: int = 1) -> "MultiPoly":
        if power < 0:
            raise ValueError("negative powers are not representable")
        exp = [0] * len(table)
        exp[table.index(name)] = power
        return cls(table, {tuple(exp): Fraction(1)})

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(exp) for exp in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (zero if empty)."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def uses(self, name: str) -> bool:
        i = self.table.index(name)
        return any(exp[i] for exp in self.terms)

    # -- arithmetic ----------------------------------------------------

    def _check_table(self, other: "MultiPoly") -> None:
        if self.table is not other.table and self.table != other.table:
            raise SymbolTableMismatch(
                "operands live over different symbol tables"
            )

    def __add__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.table)
        self._check_table(other)
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            acc = out.get(exp, Fraction(0)) + coeff
            if acc:
                out[exp] = acc
            else:
                out.pop(exp, None)
        res = MultiPoly(self.table)
        res.terms = out
        return res

    def __radd__(self, other: Scalar) -> "MultiPoly":
        return self.__add__(other)

    def __neg__(self) -> "MultiPoly":
        res = MultiPoly(self.table)
        res.terms = {exp: -c for exp, c in self.terms.items()}
        return res

    def __sub__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.table)
        return self.__add__(-other)

    def __rsub__(self, other: Scalar) -> "MultiPoly":
        return (-self).__add__(other)

    def __mul__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            return NotImplemented
        self._check_table(other)
        out: Dict[Tuple[int, ...], Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                acc = out.get(exp, Fraction(0)) + ca * cb
                if acc:
                    out[exp] = acc
                else:
                    out.pop(exp, None)
        res = MultiPoly(self.table)
        res.terms = out
        return res

    def __rmul__(self, other: Scalar) -> "MultiPoly":
        return self.scale(other)

    def scale(self, factor: Scalar) -> "MultiPoly":
        c = _coerce(factor)
        res = MultiPoly(self.table)
        if c:
            res.terms = {exp: coeff * c for exp, coeff in self.terms.items()}
        return res

    def __pow__(self, power: int) -> "MultiPoly":
        if not isinstance(power, int) or power < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(1, self.table)
        base = self
        k = power
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.table)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    # -- structure -----------------------------------------------------

    def total_degree(self) -> int:
        return max((sum(exp) for exp in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        i = self.table.index(name)
        return max((exp[i] for exp in self.terms), default=0)

    def coefficient_of(self, name: str, power: int) -> "MultiPoly":
        """Coefficient of ``name**power`` as a polynomial in the remaining symbols."""
        i = self.table.index(name)
        out: Dict[Tuple[int, ...], Fraction] = {}
        for exp, coeff in self.terms.items():
            if exp[i] == power:
                reduced = exp[:i] + (0,) + exp[i + 1 :]
                out[reduced] = out.get(reduced, Fraction(0)) + coeff
        res = MultiPoly(self.table)
        res.terms = {e: c for e, c in out.items() if c}
        return res

    def extract_by(self, name: str) -> Dict[int, "MultiPoly"]:
        """Split into {power: coefficient polynomial} along one symbol."""
        i = self.table.index(name)
        buckets: Dict[int, Dict[Tuple[int, ...], Fraction]] = {}
        for exp, coeff in self.terms.items():
            reduced = exp[:i] + (0,) + exp[i + 1 :]
            buckets.setdefault(exp[i], {})[reduced] = coeff
        out: Dict[int, MultiPoly] = {}
        for power, terms in buckets.items():
            p = MultiPoly(self.table)
            p.terms = terms
            out[power] = p
        return out

    def substitute(self, name: str, value: Union["MultiPoly", Scalar]) -> "MultiPoly":
        """Replace a symbol by a polynomial or exact scalar."""
        if not isinstance(value, MultiPoly):
            value = MultiPoly.constant(value, self.table)
        self._check_table(value)
        by_power = self.extract_by(name)
        result = MultiPoly.zero(self.table)
        powers: Dict[int, MultiPoly] = {0: MultiPoly.constant(1, self.table)}
        for power in sorted(by_power):
            if power not in powers:
                prev = max(powers)
                acc = powers[prev]
                for _ in range(prev, power):
                    acc = acc * value
                powers[power] = acc
            result = result + by_power[power] * powers[power]
        return result

    def derivative(self, name: str) -> "MultiPoly":
        i = self.table.index(name)
        out: Dict[Tuple[int, ...], Fraction] = {}
        for exp, coeff in self.terms.items():
            e = exp[i]
            if e:
                lowered = exp[:i] + (e - 1,) + exp[i + 1 :]
                out[lowered] = out.get(lowered, Fraction(0)) + coeff * e
        res = MultiPoly(self.table)
        res.terms = {e: c for e, c in out.items() if c}
        return res

    # -- weights ---------------------------------------------------------

    def term_weight(self, exp: Tuple[int, ...]) -> int:
        return sum(e * w for e, w in zip(exp, self.table.weights))

    def weight_report(self) -> Tuple[Optional[int], Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]]:
        """Common weight of all terms, or None plus an offending term pair."""
        it = iter(self.sorted_terms())
        try:
            first_exp, _ = next(it)
        except StopIteration:
            return None, None
        w = self.term_weight(first_exp)
        for exp, _ in it:
            if self.term_weight(exp) != w:
                return None, (first_exp, exp)
        return w, None

    def weight(self) -> Optional[int]:
        """Weight if homogeneous, else None.  Zero polynomial reports None."""
        w, offending = self.weight_report()
        return w if offending is None else None

    def is_homogeneous(self, weight: Optional[int] = None) -> bool:
        w, offending = self.weight_report()
        if offending is not None:
            return False
        if w is None:
            return True  # zero polynomial is homogeneous of any weight
        return weight is None or w == weight

    # -- evaluation ------------------------------------------------------

    def evaluate(self, values: Mapping[str, Union[Scalar, float]]) -> Union[Fraction, float]:
        """Fully evaluate; every symbol that occurs must be given a value."""
        idx = {self.table.index(name): v for name, v in values.items()}
        total: Union[Fraction, float] = Fraction(0)
        for exp, coeff in self.terms.items():
            acc: Union[Fraction, float] = coeff
            for i, e in enumerate(exp):
                if not e:
                    continue
                if i not in idx:
                    raise SymbolError(
                        f"no value supplied for symbol {self.table.names[i]!r}"
                    )
                acc = acc * idx[i] ** e
            total = total + acc
        return total

    # -- canonical order, wire format, rendering --------------------------

    def sorted_terms(self) -> List[Tuple[Tuple[int, ...], Fraction]]:
        """Terms in canonical graded-lexicographic order, leading term first."""
        return sorted(
            self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True
        )

    def to_wire(self) -> dict:
        used = [
            i
            for i in range(len(self.table))
            if any(exp[i] for exp in self.terms)
        ]
        terms = []
        for exp, coeff in self.sorted_terms():
            terms.append(
                {
                    "coeff": _fraction_str(coeff),
                    "exp": [exp[i] for i in used],
                }
            )
        return {"symbols": [self.table.names[i] for i in used], "terms": terms}

    @classmethod
    def from_wire(cls, data: Mapping, table: SymbolTable = STANDARD) -> "MultiPoly":
        symbols = list(data["symbols"])
        positions = [table.index(name) for name in symbols]
        width = len(table)
        terms: Dict[Tuple[int, ...], Fraction] = {}
        for item in data["terms"]:
            exp = [0] * width
            raw = list(item["exp"])
            if len(raw) != len(symbols):
                raise ValueError("exponent vector length does not match symbol list")
            for pos, e in zip(positions, raw):
                exp[pos] = int(e)
            coeff = Fraction(item["coeff"])
            key = tuple(exp)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return cls(table, terms)

    def dumps(self) -> str:
        return json.dumps(self.to_wire(), separators=(",", ":"), sort_keys=True)

    def __str__(self) -> str:
        return render_terms(self.sorted_terms(), self.table.names)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    # -- univariate division ----------------------------------------------

    def divmod_in(self, name: str, divisor: "MultiPoly") -> Tuple["MultiPoly", "MultiPoly"]:
        """Long division along one symbol.

        The divisor must be univariate in ``name`` (its coefficients are
        plain rationals); the dividend may involve any other symbols.
        """
        self._check_table(divisor)
        dparts = divisor.extract_by(name)
        ddeg = max(dparts, default=0)
        if not divisor or any(not p.is_constant() for p in dparts.values()):
            raise ValueError(f"divisor must be univariate in {name!r}")
        lead = dparts[ddeg].constant_value()
        gen = MultiPoly.symbol(name, self.table)
        quotient = MultiPoly.zero(self.table)
        remainder = self
        while remainder and remainder.degree_in(name) >= ddeg:
            rdeg = remainder.degree_in(name)
            qterm = remainder.coefficient_of(name, rdeg).scale(Fraction(1, 1) / lead)
            qterm = qterm * gen ** (rdeg - ddeg)
            quotient = quotient + qterm
            remainder = remainder - qterm * divisor
        return quotient, remainder


def _fraction_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def render_terms(
    ordered: Sequence[Tuple[Tuple[int, ...], Fraction]], names: Sequence[str]
) -> str:
    """Plain-text rendering shared by MultiPoly and DiffPoly."""
    if not ordered:
        return "0"
    chunks: List[str] = []
    for pos, (exp, coeff) in enumerate(ordered):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        factors = []
        for name, e in zip(names, exp):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = _fraction_str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_fraction_str(mag)] + factors)
        if pos == 0:
            chunks.append(body if sign == "+" else "-" + body)
        else:
            chunks.append(f" {sign} {body}")
    return "".join(chunks)


# Convenience generators over the standard table -------------------------

_SYMBOL_CACHE: Dict[str, MultiPoly] = {}


def sym(name: str) -> MultiPoly:
    """Generator of the standard table, cached."""
    poly = _SYMBOL_CACHE.get(name)
    if poly is None:
        poly = MultiPoly.symbol(name, STANDARD)
        _SYMBOL_CACHE[name] = poly
    return poly


def const(value: Scalar) -> MultiPoly:
    return MultiPoly.constant(value, STANDARD)


# Spec-level operation aliases -------------------------------------------

def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def poly_scale(a: MultiPoly, factor: Scalar) -> MultiPoly:
    return a.scale(factor)
