"""Numeric evaluation on real rectangular lattices.

Only curves with positive discriminant (three distinct real roots
e1 > e2 > e3) are supported; that covers every conjecture scan and plot
in this library.  The real half-period comes from the arithmetic-
geometric mean, the second-kind period from adaptive quadrature of the
subtracted integrand

    eta = integral_0^inf [1 - (t^2 + e1) / sqrt((t^2+e1-e2)(t^2+e1-e3))] dt

(the substitution x = e1 + t^2 removes the branch-point singularity and
the subtraction of the asymptotic 1 makes the tail integrable).

All floating point happens strictly after exact symbolic computation:
polynomials are computed exactly and only evaluated here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy import integrate

from .faulhaber import (
    bernoulli_number,
    classical_faulhaber,
    elliptic_bernoulli,
    reduced_faulhaber_W,
)


class UnsupportedLattice(ValueError):
    """The curve does not have three distinct real roots."""


@dataclass(frozen=True)
class RealCurve:
    """A real rectangular lattice: g2^3 - 27 g3^2 > 0, roots e1 > e2 > e3."""

    g2: float
    g3: float
    e1: float
    e2: float
    e3: float


@dataclass(frozen=True)
class PeriodPair:
    """Real half-period omega and the second-kind period eta."""

    omega: float
    eta: float


def real_curve(g2: float, g3: float) -> RealCurve:
    """Build a curve, solving 4x^3 - g2 x - g3 = 0 for the real roots."""
    disc = g2**3 - 27.0 * g3**2
    if disc <= 0:
        raise UnsupportedLattice(
            f"discriminant g2^3 - 27 g3^2 = {disc!r} must be positive"
        )
    roots = np.roots([4.0, 0.0, -g2, -g3])
    if np.max(np.abs(roots.imag)) > 1e-9 * max(1.0, np.max(np.abs(roots))):
        raise UnsupportedLattice("cubic roots did not come out real")
    e3, e2, e1 = np.sort(roots.real)
    total = abs(e1) + abs(e2) + abs(e3)
    if total and abs(e1 + e2 + e3) > 1e-12 * total:
        raise UnsupportedLattice("root sum failed the e1+e2+e3 = 0 sanity bound")
    return RealCurve(g2, g3, float(e1), float(e2), float(e3))


def _agm(a: float, b: float) -> float:
    # stop at 1 ulp or as soon as the gap stops shrinking: the quadratic
    # convergence stalls at rounding level after ~6 iterations
    prev_gap = math.inf
    while True:
        gap = abs(a - b)
        if gap <= 1e-15 * abs(a) or gap >= prev_gap:
            break
        prev_gap = gap
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def periods(g2: float, g3: float) -> PeriodPair:
    """Half-period pair (omega, eta) for a positive-discriminant curve."""
    curve = real_curve(g2, g3)
    omega = math.pi / (2.0 * _agm(math.sqrt(curve.e1 - curve.e3), math.sqrt(curve.e1 - curve.e2)))
    a = curve.e1 - curve.e2
    b = curve.e1 - curve.e3
    e1 = curve.e1

    def integrand(t: float) -> float:
        t2 = t * t
        return 1.0 - (t2 + e1) / math.sqrt((t2 + a) * (t2 + b))

    eta, _err = integrate.quad(integrand, 0.0, np.inf, epsabs=1e-13, epsrel=1e-13, limit=200)
    return PeriodPair(omega, eta)


# -- quadrature oracles used by the tests ------------------------------------------

def omega_by_quadrature(g2: float, g3: float) -> float:
    """Independent route: direct quadrature of dx / sqrt(4x^3 - g2 x - g3)."""
    curve = real_curve(g2, g3)
    a = curve.e1 - curve.e2
    b = curve.e1 - curve.e3

    def integrand(t: float) -> float:
        t2 = t * t
        return 1.0 / math.sqrt((t2 + a) * (t2 + b))

    value, _err = integrate.quad(integrand, 0.0, np.inf, epsabs=1e-13, epsrel=1e-13, limit=200)
    return value


def eta_by_complete_integrals(g2: float, g3: float) -> float:
    """Independent route: eta = c E(m) - e1 omega with m = (e2-e3)/(e1-e3)."""
    from scipy.special import ellipe, ellipk

    curve = real_curve(g2, g3)
    c = math.sqrt(curve.e1 - curve.e3)
    m = (curve.e2 - curve.e3) / (curve.e1 - curve.e3)
    omega = ellipk(m) / c
    return c * ellipe(m) - curve.e1 * omega


# -- normalised polynomial evaluation ------------------------------------------------

def _cohom_value(elem, lam: float, values: dict) -> float:
    binding = dict(values)
    binding["lambda"] = lam
    return float(elem.evaluate(binding))


def eval_phi(m: int, x: float, curve: RealCurve, pair: Optional[PeriodPair] = None) -> float:
    """The normalised reduced polynomial at lambda = (x^2+x)/2 on a concrete curve."""
    if m < 2:
        raise ValueError("normalisation needs m >= 2")
    if pair is None:
        pair = periods(curve.g2, curve.g3)
    values = {"g2": curve.g2, "g3": curve.g3, "omega": pair.omega, "eta": pair.eta}
    denom = 2.0 * float(elliptic_bernoulli(2 * m - 2).value.evaluate(values))
    if denom == 0.0:
        raise ZeroDivisionError(
            f"normalisation constant vanishes on curve g2={curve.g2}, g3={curve.g3}"
        )
    lam = 0.5 * (x * x + x)
    num = _cohom_value(reduced_faulhaber_W(m).value, lam, values)
    return num / denom


def eval_phi_classical(m: int, x: float) -> float:
    """Hyperbolic-limit analogue: classical polynomial over its Bernoulli normaliser."""
    if m < 2:
        raise ValueError("normalisation needs m >= 2")
    lam = 0.5 * (x * x + x)
    num = float(classical_faulhaber(m).poly.evaluate({"lambda": lam}))
    denom = float((2 * m - 1) * bernoulli_number(2 * m - 2)) / 2.0
    return num / denom


def phi_target(x: float) -> float:
    """(1 - cos 2 pi x) / (2 pi^2), the conjectured large-m limit shape."""
    return (1.0 - math.cos(2.0 * math.pi * x)) / (2.0 * math.pi**2)


def conjecture3_scan(
    m_max: int,
    curve: Optional[RealCurve],
    grid: np.ndarray,
) -> List[Tuple[int, float]]:
    """Max-norm distance of the normalised polynomials from the limit shape.

    ``curve`` may be None for the curve-free hyperbolic evaluation.  The
    distances are reported, never asserted: the underlying statement is a
    conjecture, not a theorem.
    """
    if m_max < 3:
        raise ValueError("scan starts at m = 3")
    pair = periods(curve.g2, curve.g3) if curve is not None else None
    rows: List[Tuple[int, float]] = []
    for m in range(3, m_max + 1):
        if curve is None:
            values = [eval_phi_classical(m, float(x)) for x in grid]
        else:
            values = [eval_phi(m, float(x), curve, pair) for x in grid]
        dist = max(abs(v - phi_target(float(x))) for v, x in zip(values, grid))
        rows.append((m, dist))
    return rows
