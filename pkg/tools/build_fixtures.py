"""Regenerate src/rcbpoly/data/claims.json from transcribed reference displays.

The printed strings are parsed with sympy so that the stored fixtures never
depend on this package's own arithmetic.  Run from the repository root:

    python3 tools/build_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

import sympy as sp
from sympy.parsing.sympy_parser import (
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

r = sp.Symbol("r")
x = sp.Symbol("x")
TRANSFORMS = standard_transformations + (implicit_multiplication_application,)
OUT = Path(__file__).resolve().parents[1] / "src" / "rcbpoly" / "data" / "claims.json"


def expr(text: str):
    return parse_expr(text.replace("^", "**"), local_dict={"r": r}, transformations=TRANSFORMS)


def poly_json(e) -> dict:
    p = sp.Poly(sp.expand(e), r)
    coeffs = list(reversed(p.all_coeffs()))
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return {"coeffs": [str(sp.Rational(c)) for c in coeffs]}


def seq(items, offset: int = 0) -> dict:
    return {"offset": offset, "terms": [poly_json(expr(t) if isinstance(t, str) else t) for t in items]}


def ints(text: str, offset: int = 0) -> dict:
    return seq([sp.Integer(v) for v in text.replace(" ", "").split(",")], offset)


def polys(text: str) -> dict:
    return seq([expr(v) for v in text.split(",")])


def matrix(text: str) -> dict:
    rows = [row.split("&") for row in text.strip().split("\\\\") if row.strip()]
    return {"rows": [[poly_json(expr(e)) for e in row] for row in rows]}


def matrix_from(fn, n: int) -> dict:
    return {"rows": [[poly_json(fn(i, j)) for j in range(n)] for i in range(n)]}


def series_prefix(g, n: int) -> dict:
    s = sp.series(g, x, 0, n).removeO()
    return seq([s.coeff(x, k) for k in range(n)])


def claim(claim_id, location, kind, provenance, data, applies="any", note=""):
    out = {
        "claim_id": claim_id,
        "location": location,
        "kind": kind,
        "provenance": provenance,
        "applies": applies,
        "data": data,
    }
    if note:
        out["note"] = note
    return out


def printed_pnk(form: str):
    """P_{n,k} exactly as typeset, for the erratum fixtures."""

    def fn(n, k):
        if k > n:
            return sp.Integer(0)
        mask = sp.Rational(1 + (-1) ** (n - k), 2)
        if mask == 0:
            return sp.Integer(0)
        s = (-1) ** ((n - k) // 2)
        m = sp.Rational(n + k, 2)
        z = 1 if n + k == 0 else 0
        top = sp.binomial(m, k)
        low = sp.binomial(m - 1, k)
        if form == "prop":
            return sp.expand(top * s * mask + r * low * s * mask + r * z)
        return sp.expand((top + r * low) * s * mask - r * z)

    return fn


P_MATRIX = r"""
 1 & 0 & 0 & 0 & 0 & 0 & 0 \\
 0 & 1 & 0 & 0 & 0 & 0 & 0 \\
 r-1 & 0 & 1 & 0 & 0 & 0 & 0 \\
 0 & r-2 & 0 & 1 & 0 & 0 & 0 \\
 1-r & 0 & r-3 & 0 & 1 & 0 & 0 \\
 0 & 3-2 r & 0 & r-4 & 0 & 1 & 0 \\
 r-1 & 0 & 3 (2-r) & 0 & r-5 & 0 & 1 \\
"""

M_MATRIX = r"""
 1 & 0 & 0 & 0 & 0 & 0 & 0 \\
 0 & 1 & 0 & 0 & 0 & 0 & 0 \\
 1-r & 0 & 1 & 0 & 0 & 0 & 0 \\
 0 & 2-r & 0 & 1 & 0 & 0 & 0 \\
 r^2-3 r+2 & 0 & 3-r & 0 & 1 & 0 & 0 \\
 0 & r^2-4 r+5 & 0 & 4-r & 0 & 1 & 0 \\
 -r^3+5 r^2-9 r+5 & 0 & r^2-5 r+9 & 0 & 5-r & 0 & 1 \\
"""

PRODUCTION = r"""
 0 & 1 & 0 & 0 & 0 & 0 & 0 \\
 1-r & 0 & 1 & 0 & 0 & 0 & 0 \\
 0 & 1 & 0 & 1 & 0 & 0 & 0 \\
 0 & 0 & 1 & 0 & 1 & 0 & 0 \\
 0 & 0 & 0 & 1 & 0 & 1 & 0 \\
 0 & 0 & 0 & 0 & 1 & 0 & 1 \\
 0 & 0 & 0 & 0 & 0 & 1 & 0 \\
"""

H_ARRAY = r"""
 1 & 0 & 0 & 0 & 0 & 0 & 0 \\
 1 & -1 & 0 & 0 & 0 & 0 & 0 \\
 1 & -2 & 0 & 0 & 0 & 0 & 0 \\
 1 & -3 & 1 & 1 & 0 & 0 & 0 \\
 1 & -4 & 3 & 2 & -1 & 0 & 0 \\
 1 & -5 & 6 & 2 & -4 & 0 & 0 \\
 1 & -6 & 10 & 0 & -9 & 2 & 1 \\
"""

H_REVERSAL = r"""
 1 & 0 & 0 & 0 & 0 & 0 & 0 \\
 -1 & 1 & 0 & 0 & 0 & 0 & 0 \\
 0 & -2 & 1 & 0 & 0 & 0 & 0 \\
 1 & 1 & -3 & 1 & 0 & 0 & 0 \\
 -1 & 2 & 3 & -4 & 1 & 0 & 0 \\
 0 & -4 & 2 & 6 & -5 & 1 & 0 \\
 1 & 2 & -9 & 0 & 10 & -6 & 1 \\
"""

MOMENTS = (
    "1, 0, 1 - r, 0, r^2 - 3r + 2, 0, - r^3 + 5r^2 - 9r + 5, 0, "
    "r^4 - 7r^3 + 20r^2 - 28r + 14, 0, - r^5 + 9r^4 - 35r^3 + 75r^2 - 90r + 42, 0"
)
CENTRAL = (
    "1, 0, r - 3, 0, 5(3 - r), 0, 28(r - 3), 0, 165(3 - r), 0, 1001(r - 3), 0, 6188(3 - r), 0"
)
CENTRAL_EXPANDED = (
    "1, 0, r - 3, 0, 15 - 5r, 0, 28r - 84, 0, 495 - 165r, 0, 1001r - 3003, 0, 18564 - 6188r, 0"
)
CENTRAL_RATIO = (
    "1, 1, -r - 2, - 3(r + 2), 3(10r + 11), 26(10r + 11), - 52(108r + 85), - 1292(108r + 85)"
)
UNAERATED_CENTRAL = "1, r - 3, 5(3 - r), 28(r - 3), 165(3 - r), 1001(r - 3), 6188(3 - r)"
H_SEQ = (
    "1, 1 - r, 1 - 2r, r^3 + r^2 - 3r + 1, - r^4 + 2r^3 + 3r^2 - 4r + 1, "
    "- 4r^4 + 2r^3 + 6r^2 - 5r + 1"
)


def build() -> dict:
    claims = [
        claim("paper.P_matrix.7x7", "coefficient array display", "matrix", "paper-display", matrix(P_MATRIX)),
        claim("paper.M_matrix.7x7", "moment matrix display", "matrix", "paper-display", matrix(M_MATRIX)),
        claim(
            "paper.production_matrix.7x7",
            "production matrix of the moment matrix",
            "matrix",
            "paper-display",
            matrix(PRODUCTION),
        ),
        claim(
            "paper.pnk.cor2",
            "second closed form of P_{n,k}",
            "matrix",
            "paper-display",
            matrix(P_MATRIX),
        ),
        claim(
            "paper.polys.P0_P3",
            "first polynomials P_0..P_3",
            "polys",
            "paper-display",
            [[poly_json(c) for c in reversed(sp.Poly(expr(p).subs(sp.Symbol("x"), x), x).all_coeffs())]
             for p in ("1", "x", "x^2+r-1", "x^3+x(r-2)")],
        ),
        claim("paper.moments.column", "moment sequence display", "sequence", "paper-display", polys(MOMENTS)),
        claim("paper.moments.closed_form", "moment sequence closed form", "sequence", "paper-display", polys(MOMENTS)),
        claim(
            "paper.moments.unaerated",
            "un-aerated moment sequence via (c(x), 1 - c(x))",
            "sequence",
            "paper-display",
            polys("1,1-r,r^2-3r+2,- r^3 + 5r^2 - 9r + 5"),
        ),
        claim(
            "paper.moment_hankel.aerated",
            "Hankel transform of the moments, (1 - r)^n",
            "sequence",
            "paper-display",
            seq([(1 - r) ** n for n in range(7)]),
        ),
        claim(
            "paper.moment_hankel.unaerated",
            "Hankel transform of the un-aerated moments, (1 - r)^n",
            "sequence",
            "paper-display",
            seq([(1 - r) ** n for n in range(7)]),
        ),
        claim(
            "paper.jfraction.moments",
            "continued fraction of the moment g.f. in x^2 blocks",
            "jfraction",
            "paper-display",
            {"a": [poly_json(0)] * 4, "b": [poly_json(1 - r)] + [poly_json(1)] * 3},
        ),
        claim(
            "paper.sfraction.unaerated",
            "Stieltjes fraction of the un-aerated moments",
            "sfraction",
            "paper-display",
            {"alpha": [poly_json(1 - r)] + [poly_json(1)] * 3},
        ),
        claim("paper.central.entries", "central coefficients P_{2n,n}", "sequence", "paper-display", polys(CENTRAL)),
        claim(
            "paper.central.closed_form",
            "central coefficients P_{2n,n}, expanded",
            "sequence",
            "paper-display",
            polys(CENTRAL_EXPANDED),
        ),
        claim(
            "paper.central.reversion_gf",
            "central coefficients via the reversion formula",
            "sequence",
            "paper-display",
            polys(CENTRAL),
        ),
        claim(
            "paper.central.boubaker",
            "central coefficients at r = 3 are 0^n",
            "sequence",
            "paper-display",
            ints("1,0,0,0,0,0,0,0,0,0,0,0,0,0"),
            "fixed",
        ),
        claim(
            "paper.central.r0_component",
            "aerated binom(3n,n)(-1)^n",
            "sequence",
            "paper-display",
            ints("1,0,-3,0,15,0,-84,0,495,0,-3003"),
            "fixed",
        ),
        claim(
            "paper.central.r1_component",
            "aerated binom(3n-1,n-1)(-1)^n",
            "sequence",
            "paper-display",
            ints("0, 0, 1, 0, -5, 0, 28, 0, -165, 0, 1001, 0, -6188, 0, 38760, 0, -245157, 0, 1562275, 0"),
            "fixed",
        ),
        claim(
            "paper.central_hankel.ratio",
            "h_n/(r-3)^n for the central coefficients",
            "sequence",
            "paper-display",
            polys(CENTRAL_RATIO),
            "fixed",
        ),
        claim(
            "paper.central_hankel.r0",
            "r-free part of h_n/(r-3)^n",
            "sequence",
            "paper-display",
            ints("1, 1, -2, -6, 33, 286, -4420, -109820, 4799134, 340879665"),
            "fixed",
        ),
        claim(
            "paper.central_hankel.r1",
            "r-coefficient of h_n/(r-3)^n",
            "sequence",
            "paper-display",
            ints("0, 0, -1, -3, 30, 260, -5616, -139536, 7683524, 545756190, -80623845225"),
            "fixed",
        ),
        claim(
            "paper.unaerated_central.sequence",
            "un-aerated central sequence",
            "sequence",
            "paper-display",
            polys(UNAERATED_CENTRAL),
        ),
        claim(
            "paper.unaerated_central.r0",
            "r-free part of the un-aerated central sequence",
            "sequence",
            "paper-display",
            ints("1, -3, 15, -84, 495, -3003, 18564"),
            "fixed",
        ),
        claim(
            "paper.unaerated_central.r1",
            "r-coefficient of the un-aerated central sequence",
            "sequence",
            "paper-display",
            ints("0, 1, -5, 28, -165, 1001, -6188"),
            "fixed",
        ),
        claim(
            "paper.unaerated_hankel.r0",
            "r-free part of H_n/(r-3)^n, un-aerated",
            "sequence",
            "paper-display",
            ints("1, -2, 11, -170, 7429, -920460, 323801820"),
            "fixed",
        ),
        claim(
            "erratum.unaerated_hankel.r1",
            "r-coefficient of H_n/(r-3)^n, un-aerated",
            "erratum",
            "paper-display",
            {
                "of": "sequence",
                "printed": ints("0, 1, -10, 216, -11894, 1757085, -712169820"),
                "actual": ints("0, -1, 10, -216, 11894, -1757085, 712169820"),
            },
            "fixed",
            "printed with every sign flipped; the determinant route gives the negation",
        ),
        claim(
            "paper.central_plus.r0",
            "r-free part of P_{2n,n+1}",
            "sequence",
            "paper-display",
            ints("0 ,1, 0, -5, 0, 28, 0, -165, 0, 1001, 0, -6188, 0"),
            "fixed",
        ),
        claim(
            "paper.central_plus.r1",
            "r-coefficient of P_{2n,n+1}",
            "sequence",
            "paper-display",
            ints("0, 0, 0, 1, 0, -7, 0, 45, 0, -286, 0, 1820, 0"),
            "fixed",
        ),
        claim(
            "paper.central_plus.boubaker",
            "P_{2n,n+1}(3)",
            "sequence",
            "paper-display",
            ints("0, 1, 0, -2, 0, 7, 0, -30, 0, 143, 0"),
            "fixed",
        ),
        claim(
            "paper.central_plus.boubaker_hankel",
            "Hankel transform of P_{2n,n+1}(3)",
            "sequence",
            "paper-display",
            ints("0, -1, 0, 9, 0, -676, 0, 417316, 0, -2105433225, 0"),
            "fixed",
        ),
        claim(
            "oeis.A006013.prefix",
            "signed aerated 1/(n+1) binom(3n+1,n) inside P_{2n,n+1}(3)",
            "sequence",
            "oeis-prefix",
            ints("1,2,7,30,143"),
            "fixed",
        ),
        claim(
            "oeis.A059492.prefix",
            "odd-index Hankel terms of P_{2n,n+1}(3), up to sign",
            "sequence",
            "oeis-prefix",
            ints("1,1,9,676,417316"),
            "fixed",
            "the Hankel route supplies terms from index 1",
        ),
        claim(
            "oeis.A005161.prefix",
            "r-free part of h_n/(r-3)^n, signs as displayed",
            "sequence",
            "oeis-prefix",
            ints("1, 1, -2, -6, 33, 286, -4420, -109820, 4799134, 340879665"),
            "fixed",
        ),
        claim(
            "oeis.A051255.prefix",
            "r-free part of H_n/(r-3)^n, signs as displayed",
            "sequence",
            "oeis-prefix",
            ints("1, -2, 11, -170, 7429, -920460, 323801820"),
            "fixed",
        ),
        claim("paper.rowsum_hankel.sequence", "H_n(r) display", "sequence", "paper-display", polys(H_SEQ)),
        claim(
            "paper.rowsum_hankel.coeff_array",
            "coefficient array of H_n(r)",
            "matrix",
            "paper-display",
            matrix(H_ARRAY),
            "fixed",
        ),
        claim(
            "paper.rowsum_hankel.reversal",
            "reversal of the H_n coefficient array",
            "matrix",
            "paper-display",
            matrix(H_REVERSAL),
            "fixed",
        ),
        claim(
            "paper.rowsum_hankel.reversal_pair",
            "(1/(1+x+x^2), x/(1+x+x^2))",
            "matrix",
            "paper-display",
            matrix(H_REVERSAL),
            "fixed",
        ),
        claim(
            "erratum.rowsum_hankel.factorization",
            "(1/(1+x^2), x/(1+x^2)) times (1/(1-x), x/(1-x)), first column",
            "erratum",
            "paper-display",
            {
                "of": "sequence",
                "printed": series_prefix(1 / (1 + x + x**2), 12),
                "actual": series_prefix(1 / (1 - x + x**2), 12),
            },
            "fixed",
            "the product with the binomial array is (1/(1-x+x^2), ...); "
            "(1/(1+x+x^2), ...) needs the inverse binomial array (1/(1+x), x/(1+x))",
        ),
        claim(
            "erratum.pnk.prop",
            "first closed form of P_{n,k} as typeset",
            "erratum",
            "paper-display",
            {"of": "matrix", "printed": matrix_from(printed_pnk("prop"), 7), "actual": matrix(P_MATRIX)},
            "fixed",
            "the r binom((n+k-2)/2, k) term needs a minus sign",
        ),
        claim(
            "erratum.pnk.cor1",
            "grouped closed form of P_{n,k} as typeset",
            "erratum",
            "paper-display",
            {"of": "matrix", "printed": matrix_from(printed_pnk("cor1"), 7), "actual": matrix(P_MATRIX)},
            "fixed",
            "needs - r binom((n+k-2)/2, k) and + r 0^(n+k)",
        ),
        claim("paper.moment_gf.matrix_variant", "moment g.f. shown with M(r)", "verdict", "paper-display", "pass", "fixed"),
        claim(
            "erratum.moment_gf.cfrac_variant",
            "moment g.f. shown with the continued fraction",
            "verdict",
            "paper-display",
            "fail",
            "fixed",
            "signs of r +- 1 swapped; the variant shown with M(r) is the correct one",
        ),
        claim(
            "erratum.rowsum_gf.closed_form",
            "closed form of the row-sum g.f.",
            "verdict",
            "paper-display",
            "fail",
            "fixed",
            "denominator factor (x - 1) should be (2x - 1)",
        ),
        claim("paper.rowsum_gf.corrected", "row-sum g.f. with (2x - 1)", "verdict", "paper-display", "pass", "fixed"),
        claim("paper.rowsum.proof_matrix", "binom(n+k, floor((n-k)/2)) as a Riordan array", "verdict", "paper-display", "pass", "fixed"),
        claim("paper.rowsum.ftra_identity", "row-sum g.f. via (g, 1 - c(x^2))", "verdict", "paper-display", "pass"),
        claim("paper.h_hat.closed_form", "H_n(r) = r^n U_n((1/r - 1)/2)", "verdict", "paper-display", "pass", "fixed"),
        claim(
            "erratum.qpoly.corollary",
            "alpha_n, beta_n for Q_n(x; r)",
            "verdict",
            "paper-display",
            "fail",
            "fixed",
            "at r = 2, 3, 5 beta_n equals b_{n+1} and alpha_n / r^2 equals a_n of the row-sum J-fraction",
        ),
    ]
    ids = [c["claim_id"] for c in claims]
    assert len(ids) == len(set(ids)), "duplicate claim ids"
    return {"claims": claims}


if __name__ == "__main__":
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(build(), indent=1) + "\n")
    print(f"wrote {OUT}")
