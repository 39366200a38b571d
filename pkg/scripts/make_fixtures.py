#!/usr/bin/env python3
"""Regenerate the JSON fixture files from the golden transcriptions.

Run from the repository root:

    python scripts/make_fixtures.py

The output is deterministic; a clean run must leave the tree unchanged
(there is a test asserting exactly that).
"""

from __future__ import annotations

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from elliptica import golden, lame  # noqa: E402

FIXTURES = pathlib.Path(__file__).resolve().parents[1] / "src" / "elliptica" / "fixtures"


def dump(name: str, payload: dict) -> None:
    path = FIXTURES / name
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {path}")


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    dump(
        "kdv_densities.json",
        {"densities": {str(k): p.to_wire() for k, p in golden.KDV_DENSITIES.items()}},
    )
    dump(
        "period_integrals_general.json",
        {"integrals": {str(n): e.to_wire() for n, e in golden.KSTAR.items()}},
    )
    dump(
        "halphen_table.json",
        {
            "entries": [
                {"n": n, "r": r, "value": poly.to_wire()}
                for (n, r), poly in sorted(golden.HALPHEN_TABLE.items())
            ]
        },
    )
    dump(
        "classical_faulhaber.json",
        {"polynomials": {str(m): p.to_wire() for m, p in golden.CLASSICAL_FAULHABER.items()}},
    )
    dump(
        "faulhaber_general.json",
        {"polynomials": {str(m): e.to_wire() for m, e in golden.FAULHABER_GENERAL.items()}},
    )
    dump(
        "faulhaber_weierstrass.json",
        {"polynomials": {str(m): e.to_wire() for m, e in golden.FAULHABER_W.items()}},
    )
    dump(
        "elliptic_bernoulli.json",
        {"numbers": {str(i): e.to_wire() for i, e in golden.ELLIPTIC_BERNOULLI.items()}},
    )
    dump(
        "lame_hat_coefficients.json",
        {"coefficients": {str(k): p.to_wire() for k, p in golden.LAME_HAT.items()}},
    )
    dump(
        "lame_numerators.json",
        {
            "numerators": {
                str(n): [p.to_wire() for p in coeffs]
                for n, coeffs in golden.LAME_NUMERATORS.items()
            }
        },
    )
    dump(
        "spectral_table_k4.json",
        {"max_k": 4, "b": [lame.builtin_spectral_b(k).to_wire() for k in range(1, 5)]},
    )


if __name__ == "__main__":
    main()
