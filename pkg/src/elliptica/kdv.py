"""KdV conserved densities in normalised canonical form.

The densities are generated from the quadratic recurrence

    sigma_1 = u,   sigma_{m+1} = -sigma_m' - sum_{k=1}^{m-1} sigma_k sigma_{m-k}

and brought to canonical (irreducible) form by integration by parts:
a monomial whose highest derivative u_j occurs linearly is rewritten via

    R * u_{j-1}^p * u_j  ==  -1/(p+1) * (d/dx R) * u_{j-1}^{p+1}

modulo total x-derivatives.  The k-th density is
T_k = (-1)^(k-1) * canonicalize(sigma_{2k-1}); it is rank-homogeneous of
rank 2k, has integer coefficients, and its u_{k-2}^2 coefficient is 1.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .diffpoly import DiffPoly, monomial_rank, u

# sigma memo: guarded by a lock; fills are idempotent so duplicate
# computation by racing callers would also be harmless.
_SIGMA: List[DiffPoly] = [DiffPoly.zero(), u(0)]
_SIGMA_LOCK = threading.Lock()


class NotRankHomogeneous(ValueError):
    """canonicalize() was handed a rank-inhomogeneous polynomial."""


def sigma(m: int) -> DiffPoly:
    """The m-th density of the quadratic recurrence (rank m+1)."""
    if m < 1:
        raise ValueError("sigma is defined for m >= 1")
    with _SIGMA_LOCK:
        while len(_SIGMA) <= m:
            k = len(_SIGMA)
            nxt = -_SIGMA[k - 1].total_x_derivative()
            for i in range(1, k - 1):
                nxt = nxt - _SIGMA[i] * _SIGMA[k - 1 - i]
            _SIGMA.append(nxt)
        return _SIGMA[m]


def _reduce_monomial(exp: Tuple[int, ...], coeff: Fraction) -> DiffPoly:
    """One integration-by-parts step on a monomial with linear top derivative."""
    j = len(exp) - 1
    p = exp[j - 1] if j >= 1 else 0
    rest = list(exp)
    rest[j] = 0
    if j >= 1:
        rest[j - 1] = 0
    base = DiffPoly({tuple(rest): Fraction(1)})
    derived = base.total_x_derivative()
    factor = -coeff / (p + 1)
    return factor * derived * u(j - 1, p + 1)


def canonicalize(p: DiffPoly) -> DiffPoly:
    """Irreducible representative of p modulo total x-derivatives.

    Idempotent; raises :class:`NotRankHomogeneous` on inhomogeneous input.
    """
    if not p.is_rank_homogeneous():
        raise NotRankHomogeneous(f"rank-inhomogeneous input: {p}")
    work = p
    done: Dict[Tuple[int, ...], Fraction] = {}
    while work:
        reducible = DiffPoly.zero()
        pending: Dict[Tuple[int, ...], Fraction] = {}
        for exp, coeff in work.terms.items():
            j = len(exp) - 1
            if j >= 1 and exp[j] == 1:
                red = _reduce_monomial(exp, coeff)
                for e2, c2 in red.terms.items():
                    acc = pending.get(e2, Fraction(0)) + c2
                    if acc:
                        pending[e2] = acc
                    else:
                        pending.pop(e2, None)
            else:
                acc = done.get(exp, Fraction(0)) + coeff
                if acc:
                    done[exp] = acc
                else:
                    done.pop(exp, None)
        reducible.terms = pending
        work = reducible
    result = DiffPoly()
    result.terms = done
    return result


@dataclass(frozen=True)
class CanonicalDensity:
    """A KdV density T_k in normalised canonical form."""

    k: int
    body: DiffPoly

    def __post_init__(self) -> None:
        k, body = self.k, self.body
        if not body.is_rank_homogeneous(2 * k):
            raise ValueError(f"T_{k} is not rank-homogeneous of rank {2 * k}")
        for exp in body.terms:
            j = len(exp) - 1
            if j >= 1 and exp[j] == 1:
                raise ValueError(f"T_{k} contains a reducible monomial {exp}")
        if not body.has_integer_coefficients():
            raise ValueError(f"T_{k} has a non-integer coefficient")
        if k >= 2:
            lead = [0] * (k - 1)
            lead[k - 2] = 2
            if body.coefficient(lead) != 1:
                raise ValueError(
                    f"T_{k} normalisation broken: u_{k-2}^2 coefficient is "
                    f"{body.coefficient(lead)}"
                )


_DENSITY: Dict[int, CanonicalDensity] = {}
_DENSITY_LOCK = threading.Lock()


def density(k: int) -> CanonicalDensity:
    """The k-th KdV conserved density T_k."""
    if k < 1:
        raise ValueError("density is defined for k >= 1")
    with _DENSITY_LOCK:
        cached = _DENSITY.get(k)
    if cached is not None:
        return cached
    body = canonicalize(sigma(2 * k - 1))
    if (k - 1) % 2:
        body = -body
    result = CanonicalDensity(k, body)
    with _DENSITY_LOCK:
        _DENSITY.setdefault(k, result)
    return result


def top_u_coefficient(k: int) -> Fraction:
    """Coefficient of u_0^k in T_k: 2(2k-3)!/(k!(k-2)!) for k > 1, else 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return Fraction(1)
    return Fraction(2 * math.factorial(2 * k - 3), math.factorial(k) * math.factorial(k - 2))
