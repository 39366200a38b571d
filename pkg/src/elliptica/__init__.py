"""Exact-arithmetic computation of KdV conserved densities, elliptic
Faulhaber polynomials, elliptic Bernoulli numbers, Halphen coefficients
and Lame density-of-states expansions.

All symbolic results carry exact rational coefficients; floating point is
confined to :mod:`elliptica.numeval`, which evaluates the exact objects
on concrete curves.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .cohom import GENERAL, REDUCED, CohomElem
from .diffpoly import DiffPoly, u
from .faulhaber import (
    ClassicalFaulhaber,
    EllipticBernoulli,
    EllipticFaulhaber,
    bernoulli_number,
    bernoulli_poly,
    classical_faulhaber,
    discriminant_specialization,
    elliptic_bernoulli,
    elliptic_bernoulli_general,
    elliptic_faulhaber,
    faulhaber_lambda2_check,
    reduced_faulhaber_J,
    reduced_faulhaber_W,
    soliton_specialization_check,
)
from .kdv import CanonicalDensity, canonicalize, density, sigma, top_u_coefficient
from .lame import (
    DosNumerator,
    SpectralPoly,
    builtin_spectral_b,
    dos_coefficient,
    dos_series_faulhaber_side,
    load_spectral_table,
    match_numerator,
    numerator_for_integer_n,
    spectral_from_radicand,
)
from .multipoly import MultiPoly, STANDARD, SymbolTable, const, sym
from .numeval import PeriodPair, RealCurve, conjecture3_scan, eval_phi, periods, real_curve
from .weierstrass import (
    CurveParams,
    DerivPoly,
    bernoulli_hurwitz,
    deriv_poly,
    eliminate_odd_derivative,
    halphen,
    kn_equianharmonic,
    kn_lemniscatic,
    kn_via_halphen,
    laurent_c,
    period_integral_general,
    period_integral_reduced,
    principal_part_check,
)

__all__ = [
    "CanonicalDensity",
    "ClassicalFaulhaber",
    "CohomElem",
    "CurveParams",
    "DerivPoly",
    "DiffPoly",
    "DosNumerator",
    "EllipticBernoulli",
    "EllipticFaulhaber",
    "GENERAL",
    "MultiPoly",
    "PeriodPair",
    "REDUCED",
    "RealCurve",
    "STANDARD",
    "SpectralPoly",
    "SymbolTable",
    "bernoulli_hurwitz",
    "bernoulli_number",
    "bernoulli_poly",
    "builtin_spectral_b",
    "canonicalize",
    "classical_faulhaber",
    "conjecture3_scan",
    "const",
    "density",
    "deriv_poly",
    "discriminant_specialization",
    "dos_coefficient",
    "dos_series_faulhaber_side",
    "eliminate_odd_derivative",
    "elliptic_bernoulli",
    "elliptic_bernoulli_general",
    "elliptic_faulhaber",
    "eval_phi",
    "faulhaber_lambda2_check",
    "halphen",
    "kn_equianharmonic",
    "kn_lemniscatic",
    "kn_via_halphen",
    "laurent_c",
    "load_spectral_table",
    "match_numerator",
    "numerator_for_integer_n",
    "period_integral_general",
    "period_integral_reduced",
    "periods",
    "principal_part_check",
    "real_curve",
    "reduced_faulhaber_J",
    "reduced_faulhaber_W",
    "sigma",
    "soliton_specialization_check",
    "spectral_from_radicand",
    "sym",
    "top_u_coefficient",
    "u",
]
