"""Elements of the first cohomology of an elliptic curve.

Every period integral in this library reduces to a linear combination of
the two basic second-kind periods.  A :class:`CohomElem` stores the two
coefficient polynomials together with a basis tag:

* ``general`` - basis (omega, xi), curve with the quadratic parameter g1;
* ``reduced`` - basis (omega, eta), the g1 = 0 specialisation.

The coefficient polynomials themselves never contain the basis symbols.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, Optional, Union

from .multipoly import MultiPoly, Scalar, STANDARD, SymbolTable, sym

GENERAL = "general"
REDUCED = "reduced"

_BASIS_SECOND = {GENERAL: "xi", REDUCED: "eta"}
_FORBIDDEN = ("omega", "xi", "eta")


class BasisMismatch(ValueError):
    """Two cohomology elements in different bases were combined."""


class CohomElem:
    """A pair (A, B) meaning A*omega + B*xi (general) or A*omega + B*eta (reduced)."""

    __slots__ = ("omega_part", "xi_part", "basis")

    def __init__(self, omega_part: MultiPoly, xi_part: MultiPoly, basis: str = REDUCED):
        if basis not in (GENERAL, REDUCED):
            raise ValueError(f"unknown basis tag {basis!r}")
        omega_part._check_table(xi_part)
        for part in (omega_part, xi_part):
            for name in _FORBIDDEN:
                if name in part.table and part.uses(name):
                    raise ValueError(
                        f"coefficient polynomial must not contain the basis symbol {name!r}"
                    )
        self.omega_part = omega_part
        self.xi_part = xi_part
        self.basis = basis

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, basis: str = REDUCED, table: SymbolTable = STANDARD) -> "CohomElem":
        z = MultiPoly.zero(table)
        return cls(z, z, basis)

    @classmethod
    def omega(cls, coeff: Union[MultiPoly, Scalar], basis: str = REDUCED) -> "CohomElem":
        if not isinstance(coeff, MultiPoly):
            coeff = MultiPoly.constant(coeff, STANDARD)
        return cls(coeff, MultiPoly.zero(coeff.table), basis)

    @classmethod
    def second(cls, coeff: Union[MultiPoly, Scalar], basis: str = REDUCED) -> "CohomElem":
        if not isinstance(coeff, MultiPoly):
            coeff = MultiPoly.constant(coeff, STANDARD)
        return cls(MultiPoly.zero(coeff.table), coeff, basis)

    @property
    def second_symbol(self) -> str:
        return _BASIS_SECOND[self.basis]

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "CohomElem") -> None:
        if self.basis != other.basis:
            raise BasisMismatch(f"cannot mix bases {self.basis!r} and {other.basis!r}")

    def __add__(self, other: "CohomElem") -> "CohomElem":
        self._check(other)
        return CohomElem(
            self.omega_part + other.omega_part,
            self.xi_part + other.xi_part,
            self.basis,
        )

    def __sub__(self, other: "CohomElem") -> "CohomElem":
        self._check(other)
        return CohomElem(
            self.omega_part - other.omega_part,
            self.xi_part - other.xi_part,
            self.basis,
        )

    def __neg__(self) -> "CohomElem":
        return CohomElem(-self.omega_part, -self.xi_part, self.basis)

    def __mul__(self, factor: Union[MultiPoly, Scalar]) -> "CohomElem":
        return CohomElem(self.omega_part * factor, self.xi_part * factor, self.basis)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohomElem):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.omega_part == other.omega_part
            and self.xi_part == other.xi_part
        )

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return self.omega_part.is_zero() and self.xi_part.is_zero()

    # -- structure ----------------------------------------------------------

    def map_parts(self, fn: Callable[[MultiPoly], MultiPoly]) -> "CohomElem":
        return CohomElem(fn(self.omega_part), fn(self.xi_part), self.basis)

    def substitute(self, name: str, value: Union[MultiPoly, Scalar]) -> "CohomElem":
        return self.map_parts(lambda p: p.substitute(name, value))

    def as_reduced(self) -> "CohomElem":
        """Re-tag a general element whose parts no longer involve g1."""
        if self.basis == REDUCED:
            return self
        if self.omega_part.uses("g1") or self.xi_part.uses("g1"):
            raise ValueError("cannot reduce: parts still involve g1")
        return CohomElem(self.omega_part, self.xi_part, REDUCED)

    def weight(self) -> Optional[int]:
        """Common weight of the full element (omega counts -1, xi/eta +1)."""
        weights = set()
        if self.omega_part:
            w = self.omega_part.weight()
            if w is None:
                return None
            weights.add(w - 1)
        if self.xi_part:
            w = self.xi_part.weight()
            if w is None:
                return None
            weights.add(w + 1)
        if not weights:
            return None
        if len(weights) > 1:
            return None
        return weights.pop()

    def as_poly(self) -> MultiPoly:
        """Flatten to a single polynomial including the basis symbols."""
        return self.omega_part * sym("omega") + self.xi_part * sym(self.second_symbol)

    # -- evaluation and wire format ------------------------------------------

    def evaluate(self, values: Mapping[str, Union[Scalar, float]]) -> Union[Fraction, float]:
        """Numeric value; ``values`` must bind omega and xi/eta as well."""
        omega_val = values["omega"]
        second_val = values[self.second_symbol]
        return (
            self.omega_part.evaluate(values) * omega_val
            + self.xi_part.evaluate(values) * second_val
        )

    def to_wire(self) -> dict:
        return {
            "basis": self.basis,
            "omega": self.omega_part.to_wire(),
            self.second_symbol: self.xi_part.to_wire(),
        }

    @classmethod
    def from_wire(cls, data: Mapping, table: SymbolTable = STANDARD) -> "CohomElem":
        basis = data["basis"]
        second = _BASIS_SECOND[basis]
        return cls(
            MultiPoly.from_wire(data["omega"], table),
            MultiPoly.from_wire(data[second], table),
            basis,
        )

    def __str__(self) -> str:
        return str(self.as_poly())

    def __repr__(self) -> str:
        return f"CohomElem[{self.basis}]({self})"
