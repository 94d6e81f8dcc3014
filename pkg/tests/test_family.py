from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rcbpoly.exactalg import AlgebraError, ParamPoly, Series
from rcbpoly.family import (
    SYMBOLIC,
    FamilyContext,
    central,
    central_entry,
    central_hankel_report,
    central_plus,
    central_plus_sequence,
    central_sequence,
    central_via_gf,
    check_moment_closed_form,
    check_rowsum_closed_form,
    check_three_term,
    coeff_closed_form,
    coefficient_array,
    generalized_chebyshev_array,
    generalized_chebyshev_poly,
    h_hat,
    h_hat_closed,
    moment_gf_closed_form,
    moment_hankel,
    moment_matrix,
    moments,
    moments_unaerated,
    moments_unaerated_ftra,
    polynomial,
    polynomials,
    qpoly_recurrence_check,
    render_xpoly,
    row_sum_sequence,
    rowsum_gf,
    rowsum_gf_closed_form,
    rowsum_gf_via_proof,
    rowsum_hankel,
    unaerated_central,
)
from rcbpoly.hankel import JFraction, chebyshev_u_half, hankel_transform, jfraction_to_gf, unaerate
from rcbpoly.riordan import entry, production_matrix, to_matrix

R = ParamPoly.r()
P = ParamPoly.parse


def ints(seq) -> list:
    return [t.constant_value() for t in seq]


def test_context():
    assert SYMBOLIC.mode == "symbolic" and SYMBOLIC.param == R
    ctx = FamilyContext.numeric("1/2", 8)
    assert ctx.mode == "numeric" and ctx.param == Fraction(1, 2)
    assert ctx.spec(R + 1) == Fraction(3, 2)
    with pytest.raises(ValueError):
        FamilyContext(None, 3)
    with pytest.raises(TypeError):
        FamilyContext(0.5)


def test_array_rows_at_fixed_r():
    # r = 0: modified Chebyshev U_n(x/2); r = 3: Boubaker
    assert ints(to_matrix(coefficient_array(FamilyContext.numeric(0, 8)), 5).rows[4]) == [1, 0, -3, 0, 1]
    assert ints(to_matrix(coefficient_array(FamilyContext.numeric(3, 8)), 5).rows[4]) == [-2, 0, 0, 0, 1]


@pytest.mark.parametrize("form", ["prop", "cor1", "cor2"])
def test_closed_forms_match_array(form):
    M = to_matrix(coefficient_array(FamilyContext.symbolic(17)), 17)
    for n in range(17):
        for k in range(n + 1):
            assert coeff_closed_form(n, k, form) == M[n, k], (n, k)


def test_closed_form_examples():
    assert coeff_closed_form(2, 0) == R - 1
    assert coeff_closed_form(6, 2) == 6 - 3 * R
    assert coeff_closed_form(5, 5) == 1
    assert coeff_closed_form(3, 0) == 0
    with pytest.raises(ValueError):
        coeff_closed_form(2, 3)
    with pytest.raises(ValueError):
        coeff_closed_form(2, 0, "other")


def test_polynomial_examples():
    assert polynomial(SYMBOLIC, 2) == (R - 1, 0, 1)
    assert polynomial(SYMBOLIC, 3) == (0, R - 2, 0, 1)
    assert render_xpoly(polynomial(SYMBOLIC, 3)) == "x^3 + (-2 + r)*x"
    assert render_xpoly(polynomial(FamilyContext.numeric(3), 2)) == "x^2 + 2"
    with pytest.raises(ValueError):
        polynomial(SYMBOLIC, 2, "other")


def test_polynomial_forms_agree():
    for ctx in (SYMBOLIC, FamilyContext.numeric(-2), FamilyContext.numeric("1/3")):
        for n in range(17):
            s = polynomial(ctx, n, "sum")
            assert s == polynomial(ctx, n, "chebyshev") == tuple(polynomial(ctx, n, "array")[: n + 1])
            assert s[n] == 1
            assert all(not s[j] for j in range(n - 1, -1, -2))


def test_three_term():
    assert check_three_term(SYMBOLIC, 16).ok
    assert check_three_term(FamilyContext.numeric(3), 16).ok
    polys = list(polynomials(SYMBOLIC, 8))
    polys[5] = tuple(c + 1 if j == 1 else c for j, c in enumerate(polys[5]))
    rep = check_three_term(SYMBOLIC, 7, polys)
    assert rep.status == "fail" and rep.location == {"n": 5}
    assert rep.to_json()["claim_id"] == "three_term"


def test_central_terms():
    assert [central(n) for n in range(5)] == [1, 0, R - 3, 0, 15 - 5 * R]
    assert all(central(n) == central(n, "alt") for n in range(20))
    assert list(central_via_gf(FamilyContext.numeric(5), 12)) == list(central_sequence(FamilyContext.numeric(5), 13))
    assert all(central_entry(SYMBOLIC, n) == central(n) for n in range(14))
    with pytest.raises(ValueError):
        central(2, "other")


def test_central_plus():
    D = coefficient_array(FamilyContext.symbolic(26))
    for n in range(12):
        want = entry(D, 2 * n, n + 1) if n else ParamPoly()
        assert central_plus(n) == central_plus(n, "ratio") == want
    assert central_plus(1) == 1
    assert central_plus(3) == -5 + R
    assert ints(central_plus_sequence(FamilyContext.numeric(3), 6)) == [0, 1, 0, -2, 0, 7]


def test_unaerated_central():
    assert [unaerated_central(n) for n in range(3)] == [1, R - 3, 15 - 5 * R]
    assert unaerate([central(n) for n in range(11)]).terms == tuple(unaerated_central(n) for n in range(6))


def test_central_hankel_components():
    rep = central_hankel_report(5)
    r0, r1 = rep.aerated_components
    assert r0 == [1, 1, -2, -6, 33, 286]
    assert r1 == [0, 0, -1, -3, 30, 260]
    u0, u1 = rep.unaerated_components
    assert u0[:5] == [1, -2, 11, -170, 7429]
    # the r-part carries the opposite sign to a literal 0, 1, -10, 216, ... reading
    assert u1[:4] == [0, -1, 10, -216]
    assert "aerated_ratio" in rep.to_json()


def test_moments():
    assert list(moments(SYMBOLIC, 5)) == [1, 0, 1 - R, 0, P("2-3*r+r^2")]
    assert moments_unaerated(SYMBOLIC, 12) == unaerate(moments(SYMBOLIC, 23))
    assert moments_unaerated(SYMBOLIC, 12) == moments_unaerated_ftra(SYMBOLIC, 12)
    # r = 0: aerated Catalan; r = 1: 0^n
    assert ints(moments(FamilyContext.numeric(0), 9)) == [1, 0, 1, 0, 2, 0, 5, 0, 14]
    assert ints(moments_unaerated(FamilyContext.numeric(1), 6)) == [1, 0, 0, 0, 0, 0]


def test_moment_hankel_degenerate_r1():
    assert ints(moment_hankel(FamilyContext.numeric(1), 5)) == [1, 0, 0, 0, 0, 0]


def test_moment_gf_closed_forms():
    assert check_moment_closed_form(10, "matrix").ok
    rep = check_moment_closed_form(10, "cfrac")
    assert rep.status == "fail"
    M = moment_matrix(FamilyContext.numeric(4, 12)).g
    assert moment_gf_closed_form(4, 12, "matrix") == M
    with pytest.raises(ValueError):
        moment_gf_closed_form(4, 12, "other")


def test_production_matrix_symbolic():
    Pm = production_matrix(moment_matrix(FamilyContext.symbolic(12)), 10)
    assert Pm.is_tridiagonal()
    assert Pm[1, 0] == 1 - R and Pm[5, 4] == 1 and Pm[4, 5] == 1 and Pm[3, 3] == 0


def test_row_sums():
    assert list(row_sum_sequence(SYMBOLIC, 5)) == [1, 1, 2 - R, 3 - R, P("6-4*r+r^2")]
    # r = 0: central binomials C(n, floor(n/2))
    assert ints(row_sum_sequence(FamilyContext.numeric(0), 8)) == [comb(n, n // 2) for n in range(8)]
    ctx = FamilyContext.symbolic(16)
    assert rowsum_gf(ctx) == Series(row_sum_sequence(ctx, 16), 16)
    assert rowsum_gf_via_proof(ctx) == rowsum_gf(ctx)


def test_rowsum_closed_forms():
    assert check_rowsum_closed_form(10, "corrected").ok
    rep = check_rowsum_closed_form(10, "printed")
    assert rep.status == "fail" and rep.location["n"] == 1
    s = row_sum_sequence(FamilyContext.numeric(-2), 10)
    assert rowsum_gf_closed_form(-2, 10) == Series(s, 10)


def test_h_hat():
    assert [h_hat(n) for n in range(4)] == [1, 1 - R, 1 - 2 * R, P("1-3*r+r^2+r^3")]
    for rv in (Fraction(1, 2), 2, -3):
        assert [h_hat(n)(rv) for n in range(10)] == [h_hat_closed(n, rv) for n in range(10)]
    assert ints(rowsum_hankel(FamilyContext.numeric(2), 4)) == [1, -1, -3, 7, 5]
    with pytest.raises(ValueError):
        h_hat(-1)


def test_qpoly_report():
    rep = qpoly_recurrence_check(3, 4)
    assert rep.status == "fail"
    assert rep.first_mismatch["n"] == 1 and rep.first_mismatch["which"] == "alpha"
    assert rep.beta_shift == 1
    assert rep.alpha_alignment == (0, -2)
    js = rep.to_json()
    assert js["status"] == "fail" and js["r"] == "3"
    assert qpoly_recurrence_check(3, 0).status == "pass"


def test_qpoly_requires_nonvanishing_h():
    # H_1(1) = 0
    with pytest.raises(AlgebraError):
        qpoly_recurrence_check(1, 3)


def test_generalized_chebyshev():
    # (lam, mu, a, b) = (0, -r, 0, 1) is the family itself
    fam = generalized_chebyshev_array(0, -R, 0, 1, 8)
    assert to_matrix(fam, 8) == to_matrix(coefficient_array(FamilyContext.symbolic(8)), 8)
    assert generalized_chebyshev_poly(0, 0, 0, 1, 4) == tuple(ParamPoly.const(c) for c in chebyshev_u_half(4))
    with pytest.raises(ValueError):
        generalized_chebyshev_poly(0, 0, 0, 2, 3)


@settings(max_examples=40)
@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.sampled_from([1, 4, 9]))
def test_generalized_chebyshev_rows(lam, mu, a, b):
    M = to_matrix(generalized_chebyshev_array(lam, mu, a, b, 7), 7)
    for n in range(7):
        assert generalized_chebyshev_poly(lam, mu, a, b, n) == M.rows[n][: n + 1]


@settings(max_examples=20)
@given(st.fractions(min_value=-6, max_value=6, max_denominator=5))
def test_numeric_matches_symbolic(rv):
    ctx = FamilyContext.numeric(rv, 12)
    sym = FamilyContext.symbolic(12)
    assert moments(ctx, 12) == moments(sym, 12).evaluate_r(rv)
    assert row_sum_sequence(ctx, 12) == row_sum_sequence(sym, 12).evaluate_r(rv)
    assert to_matrix(moment_matrix(ctx), 8) == to_matrix(moment_matrix(sym), 8).evaluate_r(rv)
    assert hankel_transform(moments(ctx, 9), 4) == moment_hankel(sym, 4).evaluate_r(rv)


def test_moments_from_jfraction():
    # a = 0, b = 1 - r, 1, 1, ... rebuilds the moment g.f.
    cf_b = (1 - R,) + (1,) * 12
    gf = jfraction_to_gf(JFraction((0,) * 13, cf_b), 25)
    assert Series(moments(SYMBOLIC, 25), 25) == gf
