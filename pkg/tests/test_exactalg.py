from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rcbpoly.exactalg import (
    AlgebraError,
    BadConstantTerm,
    BadLowOrderTerms,
    NonUnitConstantTerm,
    NonZeroRemainder,
    NonzeroInnerConstant,
    OutOfOrder,
    ParamPoly,
    Series,
    as_rat,
    catalan,
    poly_arith,
    poly_divexact,
    poly_eval,
    series_arith,
    series_compose,
    series_revert,
    series_sqrt,
)
from strategies import nonzero_polys, polys, rats, series, x_series

R = ParamPoly.r()
ORDER = 7


def lagrange_revert(f: list, n: int) -> list:
    """Oracle: [x^m] fbar = (1/m) [x^(m-1)] (x/f)^m, over Fraction lists."""

    def mul(a, b):
        out = [Fraction(0)] * n
        for i, ai in enumerate(a[:n]):
            for j, bj in enumerate(b[: n - i]):
                out[i + j] += ai * bj
        return out

    # h = x / f = 1 / (f/x)
    q = [Fraction(c) for c in f[1:]] + [Fraction(0)]
    h = [Fraction(0)] * n
    for i in range(n):
        h[i] = (Fraction(int(i == 0)) - sum(q[j] * h[i - j] for j in range(1, i + 1))) / q[0]
    out = [Fraction(0)] * n
    power = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for m in range(1, n):
        power = mul(power, h)
        out[m] = power[m - 1] / m
    return out


# --- ParamPoly --------------------------------------------------------------


def test_parse_and_render():
    assert ParamPoly.parse("r^2-3 r+2") == ParamPoly([2, -3, 1])
    assert ParamPoly.parse("-r^3 + 5*r^2 - 9*r + 5").coeffs == (5, -9, 5, -1)
    assert ParamPoly.parse("1/2 r") == ParamPoly([0, Fraction(1, 2)])
    assert str(ParamPoly([9, -6, 1])) == "9 - 6*r + r^2"
    assert str(ParamPoly()) == "0"
    assert ParamPoly.parse(str(ParamPoly([Fraction(-1, 3), 0, 7]))) == ParamPoly([Fraction(-1, 3), 0, 7])


@pytest.mark.parametrize("text", ["", "r r", "2 3", "(r+1)", "x"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        ParamPoly.parse(text)


def test_trim_and_degree():
    assert ParamPoly([1, 0, 0]).coeffs == (1,)
    assert ParamPoly([0, 0]).is_zero()
    assert ParamPoly().degree == -1
    assert ParamPoly([Fraction(4, 2)]).coeffs == (2,)
    assert type(ParamPoly([Fraction(4, 2)]).coeffs[0]) is int


def test_arith_examples():
    assert (R - 3) * (R - 3) == ParamPoly([9, -6, 1])
    assert poly_arith(R, ParamPoly.const(1), "add") == R + 1
    assert poly_arith(R, R, "mul") == R**2
    assert poly_divexact(R**2 - 1, R - 1) == R + 1
    assert poly_eval(R**2 - 3 * R + 2, Fraction(1, 2)) == Fraction(3, 4)
    assert (R - 3) ** 0 == ParamPoly.const(1)
    with pytest.raises(ValueError):
        poly_arith(R, R, "div")


def test_divexact_errors():
    with pytest.raises(NonZeroRemainder):
        (R**2 + 1).divexact(R - 1)
    with pytest.raises(ZeroDivisionError):
        R.divexact(ParamPoly())


def test_as_rat():
    assert as_rat("3/6") == Fraction(1, 2)
    assert as_rat(Fraction(4, 2)) == 2 and type(as_rat(Fraction(4, 2))) is int
    assert as_rat(True) == 1
    with pytest.raises(TypeError):
        as_rat(0.5)
    with pytest.raises(ValueError):
        as_rat("0.5")


def test_constant_value():
    assert ParamPoly.const(Fraction(2, 3)).constant_value() == Fraction(2, 3)
    assert ParamPoly().constant_value() == 0
    with pytest.raises(ValueError):
        R.constant_value()


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a


@given(polys, nonzero_polys)
def test_divexact_roundtrip(a, b):
    assert (a * b).divexact(b) == a
    q, rem = a.divmod(b)
    assert q * b + rem == a
    assert rem.degree < b.degree


@given(polys, polys, rats)
def test_eval_is_homomorphism(a, b, v):
    assert (a * b)(v) == a(v) * b(v)
    assert (a + b)(v) == a(v) + b(v)


@given(polys)
def test_json_roundtrip(a):
    assert ParamPoly.from_json(a.to_json()) == a
    assert ParamPoly.parse(str(a)) == a


# --- Series -----------------------------------------------------------------


def test_geometric_and_catalan():
    assert Series.geometric(R, 4).coeffs == (1, R, R**2, R**3)
    assert [c.constant_value() for c in catalan(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


def test_order_rules():
    a, b = Series([1, 2, 3], 3), Series([1, 1], 5)
    assert (a + b).order == 3
    assert (a * b).order == 3
    with pytest.raises(OutOfOrder):
        a[3]
    with pytest.raises(OutOfOrder):
        a.truncate(4)
    assert Series([1, 2, 3, 4], 4).div_x(0).order == 4
    assert Series([0, 0, 1], 4).div_x(2) == Series([1], 2)
    with pytest.raises(AlgebraError):
        Series([0, 1], 3).div_x(2)
    assert Series([1, 2, 3], 3).mul_x(1) == Series([0, 1, 2], 3)
    assert Series([1, 2, 3], 3).agrees(Series([1, 2, 9], 3), 2)
    assert not Series([1, 2, 3], 3).agrees(Series([1, 2, 9], 3))


def test_division_errors():
    with pytest.raises(NonUnitConstantTerm):
        Series.one(4) / Series([0, 1], 4)
    with pytest.raises(NonUnitConstantTerm):
        Series.one(4) / Series([R, 1], 4)
    assert (Series.one(4) / Series([2], 4))[0] == Fraction(1, 2)


def test_compose_revert_sqrt_errors():
    with pytest.raises(NonzeroInnerConstant):
        series_compose(Series.one(4), Series([1, 1], 4))
    with pytest.raises(BadLowOrderTerms):
        series_revert(Series([0, 2], 4))
    with pytest.raises(BadConstantTerm):
        series_sqrt(Series([4, 1], 4))


def test_revert_examples():
    # x - x^2 reverts to x c(x)
    fbar = series_revert(Series([0, 1, -1], 8))
    assert fbar == catalan(8).mul_x(1)
    # x / (1 + x^2) reverts to x c(x^2)... as aerated Catalan times x
    g = series_revert(Series([0, 1], 9) / Series([1, 0, 1], 9))
    assert [g[k].constant_value() for k in range(9)] == [0, 1, 0, 1, 0, 2, 0, 5, 0]


def test_sqrt_and_derivative():
    s = series_sqrt(Series([1, -4], 6))
    assert [c.constant_value() for c in s] == [1, -2, -2, -4, -10, -28]
    assert Series([1, R, R**2], 3).derivative() == Series([R, 2 * R**2], 2)
    assert series_arith(Series([1], 3), Series([0, 1], 3), "sub") == Series([1, -1], 3)


def test_evaluate_r():
    s = Series([1, R, R**2 - 1], 3)
    assert s.evaluate_r(Fraction(1, 2)) == Series([1, Fraction(1, 2), Fraction(-3, 4)], 3)


@given(series(ORDER, 1), series(ORDER))
def test_division_roundtrip(d, n):
    assert (n / d) * d == n


@settings(max_examples=40)
@given(x_series(ORDER))
def test_revert_matches_lagrange(f):
    fbar = series_revert(f)
    assert series_compose(f, fbar) == Series.x(ORDER)
    assert series_compose(fbar, f) == Series.x(ORDER)
    for v in (0, 2, Fraction(-1, 3)):
        oracle = lagrange_revert([c(v) for c in f.evaluate_r(v)], ORDER)
        assert [c.constant_value() for c in fbar.evaluate_r(v)] == oracle


@given(series(ORDER, 1))
def test_sqrt_squares_back(a):
    s = series_sqrt(a)
    assert s * s == a


@given(series(ORDER), series(ORDER), x_series(ORDER))
def test_compose_is_ring_map(a, b, f):
    assert series_compose(a * b, f) == series_compose(a, f) * series_compose(b, f)


@given(st.integers(0, 6), st.integers(1, 8))
def test_geometric_power_binomial(k, n):
    # 1/(1-x)^(k+1) has coefficients C(n+k, k)
    s = Series.geometric(1, n) ** (k + 1)
    assert [c.constant_value() for c in s] == [comb(i + k, k) for i in range(n)]
