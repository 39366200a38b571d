"""Deterministic text, LaTeX and JSON emission for polynomials.

The LaTeX layout for cohomology elements groups terms by the g2^k g3^l
monomial and the basis leg, with the lambda polynomial in brackets, so a
rendered polynomial can be eyeballed against a printed table line by
line.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from .cohom import CohomElem
from .diffpoly import DiffPoly
from .multipoly import MultiPoly, _fraction_str

_LATEX_NAMES = {
    "lambda": r"\lambda",
    "omega": r"\omega",
    "xi": r"\xi",
    "eta": r"\eta",
    "g1": "g_1",
    "g2": "g_2",
    "g3": "g_3",
    "pbar": r"\bar{\wp}",
    "wp": r"\wp",
    "wp1": r"\wp'",
    "n": "n",
    "x": "x",
    "E": "E",
}


def _latex_name(name: str) -> str:
    if name in _LATEX_NAMES:
        return _LATEX_NAMES[name]
    if name.startswith("u") and name[1:].isdigit():
        return f"u_{{{name[1:]}}}"
    return name


def _latex_coeff(value: Fraction) -> str:
    if value.denominator == 1:
        return str(abs(value.numerator))
    return rf"\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def latex_terms(ordered: Sequence[Tuple[Tuple[int, ...], Fraction]], names: Sequence[str]) -> str:
    if not ordered:
        return "0"
    chunks: List[str] = []
    for pos, (exp, coeff) in enumerate(ordered):
        sign = "-" if coeff < 0 else "+"
        factors = []
        for name, e in zip(names, exp):
            if e == 1:
                factors.append(_latex_name(name))
            elif e > 1:
                factors.append(f"{_latex_name(name)}^{{{e}}}")
        mag = abs(coeff)
        if not factors:
            body = _latex_coeff(mag)
        elif mag == 1:
            body = r" ".join(factors)
        else:
            body = r" ".join([_latex_coeff(mag)] + factors)
        if pos == 0 and sign == "+":
            chunks.append(body)
        else:
            chunks.append(f"{sign} {body}" if pos else f"-{body}")
        chunks.append(" ")
    return "".join(chunks).strip()


def latex_poly(poly: Union[MultiPoly, DiffPoly]) -> str:
    if isinstance(poly, DiffPoly):
        ordered = poly.sorted_terms()
        width = max((len(exp) for exp, _ in ordered), default=0)
        names = [f"u{j}" for j in range(width)]
        padded = [(exp + (0,) * (width - len(exp)), c) for exp, c in ordered]
        return latex_terms(padded, names)
    return latex_terms(poly.sorted_terms(), poly.table.names)


def latex_cohom(elem: CohomElem) -> str:
    """Grouped rendering: one line per g2^k g3^l monomial and basis leg."""
    lines: List[str] = []
    for part, leg in ((elem.omega_part, "omega"), (elem.xi_part, elem.second_symbol)):
        if part.is_zero():
            continue
        groups: Dict[Tuple[int, int], MultiPoly] = {}
        for k, by_g2 in part.extract_by("g2").items():
            for l, coeff in by_g2.extract_by("g3").items():
                if coeff:
                    groups[(k, l)] = coeff
        for (k, l) in sorted(groups, reverse=True):
            coeff = groups[(k, l)]
            prefix = ""
            if k:
                prefix += f"g_2^{{{k}}} " if k > 1 else "g_2 "
            if l:
                prefix += f"g_3^{{{l}}} " if l > 1 else "g_3 "
            prefix += _latex_name(leg)
            lines.append(rf"{prefix} \left[ {latex_poly(coeff)} \right]")
    if not lines:
        return "0"
    return "\n+ ".join(lines)


def to_text(obj: Union[MultiPoly, DiffPoly, CohomElem]) -> str:
    if isinstance(obj, CohomElem):
        return str(obj.as_poly())
    return str(obj)


def to_latex(obj: Union[MultiPoly, DiffPoly, CohomElem]) -> str:
    if isinstance(obj, CohomElem):
        return latex_cohom(obj)
    return latex_poly(obj)


def to_json(obj: Union[MultiPoly, DiffPoly, CohomElem], **extra) -> str:
    payload = dict(extra)
    payload.update(obj.to_wire() if not isinstance(obj, CohomElem) else obj.to_wire())
    return json.dumps(payload, indent=2, sort_keys=True)


def render(obj: Union[MultiPoly, DiffPoly, CohomElem], fmt: str, **extra) -> str:
    if fmt == "text":
        return to_text(obj)
    if fmt == "latex":
        return to_latex(obj)
    if fmt == "json":
        return to_json(obj, **extra)
    raise ValueError(f"unknown format {fmt!r}")
