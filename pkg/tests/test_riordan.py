from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings

from rcbpoly.exactalg import AlgebraError, OutOfOrder, ParamPoly, Series, catalan
from rcbpoly.family import FamilyContext, coefficient_array, moment_matrix
from rcbpoly.riordan import (
    RiordanPair,
    SeqVec,
    TriMatrix,
    a_sequence,
    binomial_pair,
    check_az_recurrences,
    entry,
    ftra_apply,
    identity_pair,
    inverse,
    lower_inverse,
    multiply,
    pair_from_rational,
    production_matrix,
    row_sums,
    to_matrix,
    z_sequence,
)
from strategies import series, x_series

R = ParamPoly.r()
ORDER = 7


def ints(seq) -> list:
    return [t.constant_value() for t in seq]


def test_pair_validation():
    with pytest.raises(AlgebraError):
        RiordanPair(Series([2], 4), Series.x(4))
    with pytest.raises(AlgebraError):
        RiordanPair(Series.one(4), Series([1, 1], 4))
    improper = RiordanPair(Series.one(4), Series([0, 2], 4))
    assert not improper.is_proper
    with pytest.raises(AlgebraError):
        inverse(improper)


def test_binomial_entries():
    B = binomial_pair(8)
    M = to_matrix(B, 8)
    assert all(M[n, k] == comb(n, k) for n in range(8) for k in range(8))
    assert entry(B, 6, 2) == 15
    with pytest.raises(OutOfOrder):
        entry(B, 8, 0)
    with pytest.raises(ValueError):
        entry(B, 2, 3)


def test_binomial_inverse_and_square():
    B = binomial_pair(8)
    Binv = to_matrix(inverse(B), 8)
    assert all(Binv[n, k] == (-1) ** (n - k) * comb(n, k) for n in range(8) for k in range(n + 1))
    B2 = to_matrix(multiply(B, B), 8)
    assert all(B2[n, k] == 2 ** (n - k) * comb(n, k) for n in range(8) for k in range(n + 1))
    assert to_matrix(B, 8) @ to_matrix(B, 8) == B2


def test_catalan_pair_sequences():
    # (c(x), x c(x)) has A = 1/(1-x), Z = 1/(1-x)... here A-sequence 1,1,1 and Z 1,1,1
    c = catalan(8)
    D = RiordanPair(c, c.mul_x(1))
    assert ints(a_sequence(D))[:6] == [1, 1, 1, 1, 1, 1]
    assert ints(z_sequence(D))[:6] == [1, 1, 1, 1, 1, 1]


def test_family_sequences():
    D = coefficient_array(FamilyContext.symbolic(10))
    M = moment_matrix(FamilyContext.symbolic(10))
    assert list(a_sequence(M))[:4] == [1, 0, 1, 0]
    assert list(z_sequence(M))[:3] == [0, 1 - R, 0]
    assert check_az_recurrences(D, 8).ok
    assert check_az_recurrences(M, 8).ok


def test_identity_pair():
    I = identity_pair(6)
    assert to_matrix(I, 6) == TriMatrix.identity(6)
    assert ints(a_sequence(I)) == [1, 0, 0, 0, 0]
    assert ints(z_sequence(I))[:4] == [0, 0, 0, 0]


def test_production_matrices():
    # identity gives the shift matrix
    P = production_matrix(identity_pair(6), 5)
    assert P == TriMatrix.from_function(5, 5, lambda i, j: 1 if j == i + 1 else 0)
    # Pascal: rows Z, A shifted
    P = production_matrix(binomial_pair(8), 5)
    assert ints(P.rows[0]) == [1, 1, 0, 0, 0]
    assert ints(P.rows[3]) == [0, 0, 0, 1, 1]
    with pytest.raises(OutOfOrder):
        production_matrix(binomial_pair(5), 5)


def test_lower_inverse():
    M = to_matrix(binomial_pair(6), 6)
    assert M @ lower_inverse(M) == TriMatrix.identity(6)
    with pytest.raises(AlgebraError):
        lower_inverse(TriMatrix(((R,),)))


def test_ftra_matches_matrix_vector():
    D = coefficient_array(FamilyContext.symbolic(8))
    a = Series([1, 2, R, 0, -1, 3, R * R, 5], 8)
    lhs = ftra_apply(D, a)
    assert lhs.coeffs == to_matrix(D, 8).apply(a.coeffs)


def test_row_sums():
    assert ints(row_sums(binomial_pair(7), 7)) == [2**n for n in range(7)]
    assert ints(row_sums(coefficient_array(FamilyContext.numeric(0, 8)), 6)) == [1, 1, 0, -1, -1, 0]  # U_n(1/2)


def test_pair_from_rational():
    D = pair_from_rational([1], [1, 1, 1], 6)
    assert ints(D.g) == [1, -1, 0, 1, -1, 0]
    assert ints(D.f) == [0, 1, -1, 0, 1, -1]


def test_az_negative_control():
    D = binomial_pair(8)
    M = to_matrix(D, 7)
    bad = [list(row) for row in M.rows]
    bad[4][2] = bad[4][2] + 1
    rep = check_az_recurrences(D, 7, TriMatrix(tuple(tuple(r) for r in bad)))
    assert not rep.ok
    assert rep.location == (4, 2)
    assert rep.kind == "A"
    assert rep.to_json()["location"] == [4, 2]
    bad = [list(row) for row in M.rows]
    bad[3][0] = ParamPoly()
    rep = check_az_recurrences(D, 7, TriMatrix(tuple(tuple(r) for r in bad)))
    assert (rep.ok, rep.location, rep.kind) == (False, (3, 0), "Z")


def test_matrix_helpers():
    M = TriMatrix.from_function(3, 3, lambda i, j: i + j if j <= i else 0)
    assert M.is_lower_triangular()
    assert M.column(0) == (0, 1, 2)
    assert M.row_reversal().rows[2][:3] == (4, 3, 2)
    assert TriMatrix.from_json(M.to_json()) == M
    assert M.evaluate_r(5) == M
    with pytest.raises(ValueError):
        TriMatrix(((1, 2), (3,)))
    with pytest.raises(ValueError):
        M @ TriMatrix(((1,),))
    s = SeqVec((1, R, Fraction(1, 2)), offset=2)
    assert SeqVec.from_json(s.to_json()) == s
    assert s.render() == "1, r, 1/2"
    with pytest.raises(ValueError):
        SeqVec(())


@settings(max_examples=40)
@given(series(ORDER, 1), x_series(ORDER))
def test_inverse_roundtrip(g, f):
    D = RiordanPair(g, f)
    Dinv = inverse(D)
    assert to_matrix(D, ORDER) @ to_matrix(Dinv, ORDER) == TriMatrix.identity(ORDER)
    prod = multiply(D, Dinv)
    assert prod.g == Series.one(ORDER) and prod.f == Series.x(ORDER)


@settings(max_examples=40)
@given(series(ORDER, 1), x_series(ORDER))
def test_az_recurrences_hold(g, f):
    assert check_az_recurrences(RiordanPair(g, f), ORDER - 1).ok


@settings(max_examples=30)
@given(series(ORDER, 1), x_series(ORDER), series(ORDER, 1), x_series(ORDER))
def test_multiply_is_matrix_product(g1, f1, g2, f2):
    D1, D2 = RiordanPair(g1, f1), RiordanPair(g2, f2)
    assert to_matrix(multiply(D1, D2), ORDER) == to_matrix(D1, ORDER) @ to_matrix(D2, ORDER)


@settings(max_examples=30)
@given(series(ORDER, 1), x_series(ORDER))
def test_production_matrix_identity(g, f):
    # D-bar = D P on the truncation
    D = RiordanPair(g, f)
    n = ORDER - 1
    P = production_matrix(D, n)
    full = to_matrix(D, ORDER)
    Dbar = TriMatrix(tuple(row[:n] for row in full.rows[1:]))
    assert full.submatrix(n) @ P == Dbar
