"""Named verification suites: every fixture and invariant check in one place.

Each suite returns a list of :class:`CheckResult`; the CLI prints them as
a pass/fail matrix and the acceptance tests assert them one criterion at
a time.  Fixture files are read from the packaged ``fixtures`` directory
unless the environment variable ``ELLIPTICA_FIXTURES`` points elsewhere.
"""

from __future__ import annotations

import json
import math
import os
import pathlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List

import numpy as np

from . import faulhaber, golden, kdv, lame, numeval
from . import weierstrass as wst
from .cohom import REDUCED, CohomElem
from .diffpoly import DiffPoly
from .multipoly import MultiPoly


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def fixtures_dir() -> pathlib.Path:
    override = os.environ.get("ELLIPTICA_FIXTURES")
    if override:
        return pathlib.Path(override)
    return pathlib.Path(__file__).parent / "fixtures"


def load_fixture(name: str) -> dict:
    path = fixtures_dir() / name
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _result(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(passed), detail if not passed else "")


def _eq_check(name: str, got, expected) -> CheckResult:
    return _result(name, got == expected, f"computed {got}, fixture {expected}")


# -- suite 1: KdV densities -------------------------------------------------------

def suite_kdv() -> List[CheckResult]:
    out: List[CheckResult] = []
    fx = load_fixture("kdv_densities.json")["densities"]
    for k_str, wire in sorted(fx.items(), key=lambda kv: int(kv[0])):
        k = int(k_str)
        out.append(_eq_check(f"T_{k} matches the listed density", kdv.density(k).body, DiffPoly.from_wire(wire)))
    for k in range(1, 11):
        body = kdv.density(k).body
        out.append(_result(f"T_{k} integer coefficients", body.has_integer_coefficients()))
        out.append(_result(f"T_{k} rank 2k", body.is_rank_homogeneous(2 * k), f"rank {body.rank()}"))
        irreducible = all(
            not (len(exp) - 1 >= 1 and exp[-1] == 1) for exp in body.terms
        )
        out.append(_result(f"T_{k} irreducible", irreducible))
        if k >= 2:
            lead = [0] * (k - 1)
            lead[k - 2] = 2
            out.append(
                _result(
                    f"T_{k} top derivative normalised",
                    body.coefficient([*lead]) == 1,
                    f"u_{k-2}^2 coefficient {body.coefficient([*lead])}",
                )
            )
            expected = Fraction(
                2 * math.factorial(2 * k - 3), math.factorial(k) * math.factorial(k - 2)
            )
            got = body.coefficient([k])
            out.append(
                _result(
                    f"T_{k} top u coefficient closed form",
                    got == expected == kdv.top_u_coefficient(k),
                    f"{got} vs {expected}",
                )
            )
    # convolution identity of the top coefficients
    tops = [kdv.top_u_coefficient(k) for k in range(1, 11)]
    for k in range(2, 11):
        conv = sum(tops[i - 1] * tops[k - i - 1] for i in range(1, k))
        out.append(_result(f"top coefficient convolution k={k}", conv == tops[k - 1]))
    for j in range(1, 10):
        out.append(
            _result(
                f"sigma_{2 * j} is a total derivative",
                kdv.canonicalize(kdv.sigma(2 * j)).is_zero(),
            )
        )
    return out


# -- suite 2: Halphen table --------------------------------------------------------

def suite_halphen() -> List[CheckResult]:
    out: List[CheckResult] = []
    fx = load_fixture("halphen_table.json")["entries"]
    for entry in fx:
        n, r = entry["n"], entry["r"]
        out.append(
            _eq_check(
                f"B_{r}^({n}) table entry",
                wst.halphen(n, r),
                MultiPoly.from_wire(entry["value"]),
            )
        )
    for n in range(13):
        for r in range(n + 1):
            coeffs = wst.halphen(n, r).terms.values()
            out.append(
                _result(
                    f"B_{r}^({n}) nonnegative coefficients",
                    all(c >= 0 for c in coeffs),
                )
            )
    return out


# -- suite 3: period integrals ---------------------------------------------------------

def suite_kn() -> List[CheckResult]:
    out: List[CheckResult] = []
    fx = load_fixture("period_integrals_general.json")["integrals"]
    for n_str, wire in sorted(fx.items(), key=lambda kv: int(kv[0])):
        n = int(n_str)
        out.append(
            _eq_check(
                f"K*_{n} matches the listed integral",
                wst.period_integral_general(n),
                CohomElem.from_wire(wire),
            )
        )
    for n in range(13):
        red = wst.period_integral_reduced(n)
        hal = wst.kn_via_halphen(n)
        gen0 = wst.period_integral_general(n).substitute("g1", 0).as_reduced()
        out.append(_result(f"K_{n} recurrence == Halphen route", red == hal, f"{red} vs {hal}"))
        out.append(_result(f"K_{n} recurrence == g1=0 specialisation", red == gen0, f"{red} vs {gen0}"))
        lem = wst.kn_lemniscatic(n)
        red_g30 = red.substitute("g3", 0)
        out.append(_result(f"K_{n} lemniscatic closed form", lem == red_g30, f"{lem} vs {red_g30}"))
        equi = wst.kn_equianharmonic(n)
        red_g20 = red.substitute("g2", 0)
        out.append(_result(f"K_{n} equianharmonic closed form", equi == red_g20, f"{equi} vs {red_g20}"))
        if n % 3 == 2:
            out.append(_result(f"K_{n} vanishes (equianharmonic, n = 2 mod 3)", equi.is_zero()))
    # positivity of the recurrence-route coefficient polynomials
    for n in range(13):
        red = wst.period_integral_reduced(n)
        ok = all(c >= 0 for c in red.omega_part.terms.values()) and all(
            c <= 0 for c in red.xi_part.terms.values()
        )
        out.append(_result(f"K_{n} positive decomposition", ok))
    return out


# -- suite 4: elliptic Faulhaber ---------------------------------------------------------

def suite_faulhaber() -> List[CheckResult]:
    out: List[CheckResult] = []
    fx_gen = load_fixture("faulhaber_general.json")["polynomials"]
    for m_str, wire in sorted(fx_gen.items(), key=lambda kv: int(kv[0])):
        m = int(m_str)
        out.append(
            _eq_check(
                f"general elliptic Faulhaber {m} matches the list",
                faulhaber.elliptic_faulhaber(m).value,
                CohomElem.from_wire(wire),
            )
        )
    fx_w = load_fixture("faulhaber_weierstrass.json")["polynomials"]
    for m_str, wire in sorted(fx_w.items(), key=lambda kv: int(kv[0])):
        m = int(m_str)
        out.append(
            _eq_check(
                f"reduced polynomial {m} matches the table",
                faulhaber.reduced_faulhaber_W(m).value,
                CohomElem.from_wire(wire),
            )
        )
    for m in range(1, 9):
        value = faulhaber.elliptic_faulhaber(m).value
        out.append(
            _result(f"order {m} weight 2m-1", value.weight() == 2 * m - 1, f"weight {value.weight()}")
        )
        soliton = faulhaber.soliton_specialization_check(m)
        out.append(_result(f"order {m} soliton specialisation", soliton.ok, soliton.summary()))
        structure = faulhaber.structure_report(m)
        out.append(_result(f"order {m} reduced structure", structure.ok, structure.summary()))
    return out


# -- suite 5: elliptic Bernoulli numbers ----------------------------------------------------

def suite_ebernoulli() -> List[CheckResult]:
    out: List[CheckResult] = []
    fx = load_fixture("elliptic_bernoulli.json")["numbers"]
    for idx_str, wire in sorted(fx.items(), key=lambda kv: int(kv[0])):
        idx = int(idx_str)
        expected = CohomElem.from_wire(wire)
        for route_name, route in (
            ("direct", faulhaber.eb_route_direct),
            ("deriv", faulhaber.eb_route_deriv),
            ("recurrence", faulhaber.eb_route_recurrence),
        ):
            out.append(
                _eq_check(f"elliptic Bernoulli {idx} via {route_name}", route(idx), expected)
            )
    for n in range(2, 9):
        rep = faulhaber.discriminant_specialization(2 * n)
        out.append(_result(f"discriminant specialisation 2n={2 * n}", rep.ok, rep.summary()))
    for m in range(3, 10):
        rep = faulhaber.faulhaber_lambda2_check(m)
        out.append(_result(f"lambda^2 coefficient m={m}", rep.ok, rep.summary()))
    return out


# -- suite 6: Bernoulli-Hurwitz bridge ---------------------------------------------------------

def suite_bh_bridge() -> List[CheckResult]:
    out: List[CheckResult] = []
    for n in range(1, 9):
        rep = wst.principal_part_check(n)
        out.append(_result(f"principal part of wp^{n}", rep.ok, rep.summary()))
    for n in range(1, 9):
        for r in range(2, min(6, n)):
            expected = golden.halphen_via_laurent(r, n, wst.laurent_c)
            got = wst.halphen(n, r)
            out.append(
                _result(
                    f"B_{r}^({n}) through Laurent coefficients",
                    got == expected,
                    f"{got} vs {expected}",
                )
            )
    # Bernoulli-Hurwitz scaling spot values
    out.append(_eq_check("BH_4", wst.bernoulli_hurwitz(4), Fraction(2, 5) * wst.G2))
    out.append(
        _eq_check("c_4", wst.laurent_c(4), Fraction(1, 1200) * wst.G2**2)
    )
    return out


# -- suite 7: classical Faulhaber oracle ----------------------------------------------------------

def suite_classical() -> List[CheckResult]:
    out: List[CheckResult] = []
    fx = load_fixture("classical_faulhaber.json")["polynomials"]
    for m_str, wire in sorted(fx.items(), key=lambda kv: int(kv[0])):
        m = int(m_str)
        out.append(
            _eq_check(
                f"F_{m} matches the list",
                faulhaber.classical_faulhaber(m).poly,
                MultiPoly.from_wire(wire),
            )
        )
    for m in range(1, 9):
        poly = faulhaber.classical_faulhaber(m).poly
        bad = []
        for n in range(1, 21):
            lam = Fraction(n * (n + 1), 2)
            if poly.evaluate({"lambda": lam}) != faulhaber.power_sum(2 * m - 1, n):
                bad.append(n)
        out.append(
            _result(f"F_{m} power-sum oracle n <= 20", not bad, f"failed at n = {bad}")
        )
    return out


# -- suite 8: Lame symbolic coefficients ----------------------------------------------------------

def suite_lame_symbolic() -> List[CheckResult]:
    out: List[CheckResult] = []
    fx = load_fixture("lame_hat_coefficients.json")["coefficients"]
    for k in range(1, 5):
        hat = MultiPoly.from_wire(fx[str(k)])
        rep = lame.hat_coefficient_check(k, hat)
        out.append(_result(f"a_{k} equals U_k times the listed form", rep.ok, rep.summary()))
        div = lame.divisibility_report(k)
        out.append(_result(f"a_{k} divisibility/degree/weight", div.ok, div.summary()))
    return out


# -- suite 9: Lame exact numerators -------------------------------------------------------------------

def suite_lame_numeric() -> List[CheckResult]:
    out: List[CheckResult] = []
    fx = load_fixture("lame_numerators.json")["numerators"]
    hats = load_fixture("lame_hat_coefficients.json")["coefficients"]
    for n_str, wires in sorted(fx.items(), key=lambda kv: int(kv[0])):
        n = int(n_str)
        numerator = lame.numerator_for_integer_n(n)
        expected = [MultiPoly.from_wire(w) for w in wires]
        out.append(
            _result(
                f"P_{n} matches the listed numerator",
                list(numerator.coeffs) == expected,
                f"{[str(c) for c in numerator.coeffs]} vs {[str(c) for c in expected]}",
            )
        )
        # spectral coefficients from the factored radicand vs the symbolic table
        spectral = lame.spectral_from_radicand(n)
        for k in range(2, 5):
            if k <= spectral.max_k:
                sym_b = lame.builtin_spectral_b(k).substitute("n", n)
                out.append(
                    _eq_check(f"b_{k}({n}) radicand vs symbolic", spectral.b(k), sym_b)
                )
        # listed reduced coefficients evaluated at this n
        for k in range(1, min(n, 5) + 1):
            hat = MultiPoly.from_wire(hats[str(k)]).substitute("n", n)
            u_k = lame.gap_factor(k).substitute("n", n)
            out.append(
                _eq_check(
                    f"hat a_{k}({n}) * U_{k}({n}) equals extracted coefficient",
                    hat * u_k,
                    numerator.a(k) if k <= n else MultiPoly.zero(numerator.a(1).table),
                )
            )
    # matching beyond order n must return zero coefficients (full-series consistency)
    for n in (1, 2, 3):
        spectral = lame.spectral_from_radicand(n)
        extended = lame.match_numerator(spectral, 2 * n + 1)
        tail_zero = all(extended.a(k).is_zero() for k in range(n + 1, 2 * n + 2))
        out.append(
            _result(
                f"matching beyond order {n} vanishes",
                tail_zero,
                f"tail {[str(extended.a(k)) for k in range(n + 1, 2 * n + 2)]}",
            )
        )
    # integrated density and density are the same series object
    for n in (None, 3):
        rho = lame.dos_series_faulhaber_side(n, 5)
        integrated = lame.integrated_density_coefficients(n, 4)
        consistent = all(
            (2 * k + 1) * integrated[k] == rho[k] for k in range(5)
        )
        out.append(_result(f"series differentiation consistency n={n}", consistent))
    return out


# -- suite 10: numerics -----------------------------------------------------------------------------

def suite_numerics() -> List[CheckResult]:
    out: List[CheckResult] = []
    pair = numeval.periods(4.0, 0.0)
    out.append(
        _result(
            "lemniscatic product eta*omega = pi/4 (1e-10)",
            abs(pair.eta * pair.omega - math.pi / 4) < 1e-10,
            f"eta*omega = {pair.eta * pair.omega!r}",
        )
    )
    out.append(
        _result(
            "omega against quadrature oracle (1e-10)",
            abs(pair.omega - numeval.omega_by_quadrature(4.0, 0.0)) < 1e-10 * pair.omega,
        )
    )
    out.append(
        _result(
            "eta against complete-integral oracle (1e-10)",
            abs(pair.eta - numeval.eta_by_complete_integrals(4.0, 0.0)) < 1e-10 * abs(pair.eta),
        )
    )
    base = numeval.periods(7.0, 1.5)
    for c in (0.5, 2.0, 3.0):
        scaled = numeval.periods(c**4 * 7.0, c**6 * 1.5)
        ok = (
            abs(scaled.omega - base.omega / c) < 1e-9 * abs(base.omega / c)
            and abs(scaled.eta - c * base.eta) < 1e-9 * abs(c * base.eta)
        )
        out.append(_result(f"period scaling law c={c}", ok))
    curve = numeval.real_curve(4.0, 0.0)
    pair_curve = numeval.periods(curve.g2, curve.g3)
    grid = np.linspace(-1.5, 0.5, 101)
    for m in (3, 8):
        zero0 = abs(numeval.eval_phi(m, 0.0, curve, pair_curve))
        zero1 = abs(numeval.eval_phi(m, -1.0, curve, pair_curve))
        out.append(_result(f"Phi_{m}(0) = 0 (1e-10)", zero0 < 1e-10, f"{zero0!r}"))
        out.append(_result(f"Phi_{m}(-1) = 0 (1e-10)", zero1 < 1e-10, f"{zero1!r}"))
        worst = max(
            abs(
                numeval.eval_phi(m, float(x), curve, pair_curve)
                - numeval.eval_phi(m, float(-1.0 - x), curve, pair_curve)
            )
            for x in grid
        )
        out.append(_result(f"Phi_{m} symmetry on 101-point grid (1e-10)", worst < 1e-10, f"{worst!r}"))
    # leading behaviour is x^2 with slope 2 at zero; averaging +-x removes the
    # odd term after which the quadratic normalisation shows up at 1e-6
    small = 1e-4
    ratio = (
        numeval.eval_phi(8, small, curve, pair_curve)
        + numeval.eval_phi(8, -small, curve, pair_curve)
    ) / (2 * small**2)
    out.append(_result("Phi_8 ~ x^2 near zero (1e-6, symmetrised)", abs(ratio - 1.0) < 1e-6, f"{ratio!r}"))
    rows = numeval.conjecture3_scan(8, curve, grid)
    detail = ", ".join(f"m={m}: {d:.3e}" for m, d in rows)
    out.append(CheckResult(f"limit-shape distance table (reported): {detail}", True, ""))
    rows_classical = numeval.conjecture3_scan(8, None, grid)
    detail_c = ", ".join(f"m={m}: {d:.3e}" for m, d in rows_classical)
    out.append(CheckResult(f"limit-shape distances, hyperbolic limit (reported): {detail_c}", True, ""))
    return out


SUITES: Dict[str, Callable[[], List[CheckResult]]] = {
    "kdv": suite_kdv,
    "halphen": suite_halphen,
    "kn": suite_kn,
    "faulhaber": suite_faulhaber,
    "ebernoulli": suite_ebernoulli,
    "bh_bridge": suite_bh_bridge,
    "classical": suite_classical,
    "lame_symbolic": suite_lame_symbolic,
    "lame_numeric": suite_lame_numeric,
    "numerics": suite_numerics,
}

#: Accepted aliases for suite names.
SUITE_ALIASES: Dict[str, str] = {
    "table1": "halphen",
    "bh": "bh_bridge",
    "lame": "lame_symbolic",
}


def resolve_suite(name: str) -> str:
    key = SUITE_ALIASES.get(name, name)
    if key not in SUITES:
        raise KeyError(f"unknown suite {name!r}; available: {', '.join(sorted(SUITES))}")
    return key


def run_suite(name: str) -> List[CheckResult]:
    return SUITES[resolve_suite(name)]()
