"""The restricted Chebyshev-Boubaker family P_n(x; r).

Coefficient array ((1 + r x^2)/(1 + x^2), x/(1 + x^2)), its closed forms,
central coefficients, moments, moment-matrix row sums and their Hankel
transforms.  Every function takes a ``FamilyContext``: symbolic r keeps
results in Q[r], numeric r specializes them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import kernels as K
from .exactalg import (
    DEFAULT_ORDER,
    AlgebraError,
    ParamPoly,
    RatNum,
    Series,
    as_poly,
    as_rat,
    catalan,
    series_compose,
    series_revert,
    series_sqrt,
)
from .hankel import (
    ZeroHankelBlock,
    chebyshev_u,
    chebyshev_u_half,
    hankel_transform,
    jfraction_extract,
)
from .riordan import (
    RiordanPair,
    SeqVec,
    TriMatrix,
    binomial_pair,
    entry,
    ftra_apply,
    inverse,
    multiply,
    pair_from_rational,
    row_sums,
    to_matrix,
)

R = ParamPoly.r()
ZERO = ParamPoly()
ONE = ParamPoly.const(1)


@dataclass(frozen=True)
class FamilyContext:
    """Symbolic r (``r is None``) or a fixed rational r, plus truncation order."""

    r: RatNum | None = None
    order: int = DEFAULT_ORDER

    def __post_init__(self):
        if self.r is not None:
            object.__setattr__(self, "r", as_rat(self.r))
        if self.order < 4:
            raise ValueError("order must be at least 4")

    @classmethod
    def symbolic(cls, order: int = DEFAULT_ORDER) -> "FamilyContext":
        return cls(None, order)

    @classmethod
    def numeric(cls, value, order: int = DEFAULT_ORDER) -> "FamilyContext":
        return cls(as_rat(value), order)

    @property
    def mode(self) -> str:
        return "symbolic" if self.r is None else "numeric"

    @property
    def param(self) -> ParamPoly:
        return R if self.r is None else ParamPoly.const(self.r)

    def spec(self, p) -> ParamPoly:
        """Specialize a symbolic result to this context's r."""
        p = as_poly(p)
        return p if self.r is None else ParamPoly.const(p(self.r))

    def spec_seq(self, s: SeqVec) -> SeqVec:
        return s if self.r is None else s.evaluate_r(self.r)


SYMBOLIC = FamilyContext()


def _binom(top, k: int) -> int:
    """Binomial with integer top of any sign; zero for negative k."""
    top = as_rat(top)
    if not isinstance(top, int):
        raise ValueError(f"binomial top {top} is not an integer")
    if k < 0:
        return 0
    out = 1
    for i in range(k):
        out = out * (top - i) // (i + 1)
    return out


def _zero_pow(n: int) -> int:
    return 1 if n == 0 else 0


# --- coefficient array -----------------------------------------------------


def coefficient_array(ctx: FamilyContext = SYMBOLIC) -> RiordanPair:
    return pair_from_rational([1, 0, ctx.param], [1, 0, 1], ctx.order)


def coeff_closed_form(n: int, k: int, form: str = "prop") -> ParamPoly:
    """P_{n,k} in Q[r] from one of the three closed forms.

    ``prop``: C(m,k) s - r C(m-1,k) s + r 0^(n+k);  ``cor1``: the same
    grouped as (C(m,k) - r C(m-1,k)) s + r 0^(n+k);  ``cor2``:
    C(m,k) (1 - r (n-k)/(n+k+0^(n+k))) s.  Here m = (n+k)/2 and
    s = (-1)^((n-k)/2), all masked to even n - k.  The r-terms of the first
    two carry a minus sign: with a plus sign P_{2,0} would be -1 - r.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    z = _zero_pow(n + k)
    if (n - k) % 2:
        return ZERO
    m = (n + k) // 2
    s = -1 if ((n - k) // 2) % 2 else 1
    if form == "prop":
        return _binom(m, k) * s - R * (_binom(m - 1, k) * s) + R * z
    if form == "cor1":
        return (ParamPoly.const(_binom(m, k)) - R * _binom(m - 1, k)) * s + R * z
    if form == "cor2":
        ratio = ParamPoly([1, Fraction(-(n - k), n + k + z)])
        return ratio * (_binom(m, k) * s)
    raise ValueError(f"unknown closed form {form!r}")


def polynomial(ctx: FamilyContext, n: int, form: str = "sum") -> tuple:
    """Coefficients of P_n(x; r), ascending in x.

    ``sum``: sum_k C(n-k,k) (n-(r+1)k)/(n-k) (-1)^k x^(n-2k);
    ``chebyshev``: U_n(x/2) + r U_{n-2}(x/2);  ``array``: row n of the array.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    r = ctx.param
    if form == "sum":
        out = [ZERO] * (n + 1)
        if n == 0:
            return (ONE,)
        for k in range(n // 2 + 1):
            weight = (ParamPoly.const(n) - (r + 1) * k) * Fraction(1, n - k)
            out[n - 2 * k] = weight * (_binom(n - k, k) * (-1) ** k)
        return tuple(out)
    if form == "chebyshev":
        u = chebyshev_u_half(n)
        v = chebyshev_u_half(n - 2)
        return tuple(
            ParamPoly.const(u[j] if j < len(u) else 0) + r * (v[j] if j < len(v) else 0)
            for j in range(n + 1)
        )
    if form == "array":
        if n >= ctx.order:
            raise ValueError(f"row {n} needs order > {n}")
        M = to_matrix(coefficient_array(ctx), n + 1)
        return M.rows[n]
    raise ValueError(f"unknown polynomial form {form!r}")


def polynomials(ctx: FamilyContext, n_terms: int, form: str = "sum") -> tuple:
    return tuple(polynomial(ctx, n, form) for n in range(n_terms))


def render_xpoly(coeffs) -> str:
    """Human form of a polynomial in x with Q[r] coefficients, descending."""
    parts = []
    for j in range(len(coeffs) - 1, -1, -1):
        c = as_poly(coeffs[j])
        if not c:
            continue
        mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
        cs = str(c)
        if not mono:
            body = cs if c.is_constant() else f"({cs})"
        elif c == 1:
            body = mono
        elif c == -1:
            body = "-" + mono
        elif c.is_constant():
            body = f"{cs}*{mono}"
        else:
            body = f"({cs})*{mono}"
        parts.append(body)
    if not parts:
        return "0"
    text = parts[0]
    for p in parts[1:]:
        text += " - " + p[1:] if p.startswith("-") else " + " + p
    return text


@dataclass(frozen=True)
class CheckReport:
    """A single verified claim: status is pass, fail or skipped."""

    claim_id: str
    status: str
    lhs: object = None
    rhs: object = None
    location: object = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "status": self.status,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "location": _jsonable(self.location),
            "detail": self.detail,
        }


def _jsonable(v):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, ParamPoly):
        return str(v)
    if isinstance(v, (SeqVec, TriMatrix)):
        return _jsonable(v.terms if isinstance(v, SeqVec) else v.rows)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def _xpoly_sub(a, b):
    n = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else ZERO) - (b[i] if i < len(b) else ZERO) for i in range(n)
    )


def _xpoly_shift(a):
    return (ZERO,) + tuple(a)


def _xpoly_scale(a, c):
    return tuple(e * c for e in a)


def _xpoly_eq(a, b):
    return not any(_xpoly_sub(a, b))


def check_three_term(ctx: FamilyContext, n_max: int, polys=None) -> CheckReport:
    """P_n = x P_{n-1} - P_{n-2} for 3 <= n <= n_max, and P_2 = x P_1 - (1-r) P_0."""
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    P = list(polys) if polys is not None else list(polynomials(ctx, n_max + 1))
    r = ctx.param
    want = _xpoly_sub(_xpoly_shift(P[1]), _xpoly_scale(P[0], 1 - r))
    if not _xpoly_eq(want, P[2]):
        return CheckReport("three_term", "fail", P[2], want, {"n": 2})
    for n in range(3, n_max + 1):
        want = _xpoly_sub(_xpoly_shift(P[n - 1]), P[n - 2])
        if not _xpoly_eq(want, P[n]):
            return CheckReport("three_term", "fail", P[n], want, {"n": n})
    return CheckReport("three_term", "pass", detail=f"n <= {n_max}")


# --- central coefficients ----------------------------------------------------


def central(n: int, form: str = "prop") -> ParamPoly:
    """P_{2n,n}(r) from the closed form (``prop``) or its alternative (``alt``)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    z = _zero_pow(n)
    if n % 2:
        return ZERO if form in ("prop", "alt") else _bad_form(form)
    h = n // 2
    sign = -1 if h % 2 else 1
    if form == "prop":
        return z - (R - 3) * (sign * _binom(3 * h - 1, h - 1))
    if form == "alt":
        return (R - 2) * z - (R - 3) * (sign * _binom(3 * h - 1, n))
    return _bad_form(form)


def _bad_form(form):
    raise ValueError(f"unknown closed form {form!r}")


def central_entry(ctx: FamilyContext, n: int) -> ParamPoly:
    return entry(coefficient_array(ctx), 2 * n, n)


def central_sequence(ctx: FamilyContext, n_terms: int, form: str = "prop") -> SeqVec:
    return SeqVec(tuple(ctx.spec(central(n, form)) for n in range(n_terms)))


def central_via_gf(ctx: FamilyContext, n_max: int) -> SeqVec:
    """d_{2n,n} as [t^n] g(v) / (f(v)/v) * v'(t), where v reverts t / (f(t)/t).

    Here f(t)/t = 1/(1 + t^2), so v reverts t(1 + t^2); the pieces are
    composed as series rather than simplified.
    """
    order = n_max + 2
    D = coefficient_array(FamilyContext(ctx.r, order + 1))
    g = D.g.truncate(order)
    f_over_t = D.f.div_x(1)
    v = series_revert(Series.x(order) / f_over_t)
    body = series_compose(g, v) / series_compose(f_over_t, v)
    out = body * v.derivative()
    return SeqVec(out.coeffs[: n_max + 1])


def central_plus(n: int, form: str = "diff") -> ParamPoly:
    """P_{2n,n+1}(r); zero at n = 0, where (0, 1) lies outside the triangle.

    ``diff``: (C((3n+1)/2, n+1) - r C((3n-1)/2, n+1)) (-1)^((n-1)/2), odd n;
    ``ratio``: C((3n+1)/2, n+1) (1 + r - n(r-3))/(3n+1) (-1)^((n-1)/2), odd n.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n % 2 == 0:
        if form not in ("diff", "ratio"):
            _bad_form(form)
        return ZERO
    sign = -1 if ((n - 1) // 2) % 2 else 1
    top = (3 * n + 1) // 2
    if form == "diff":
        return (ParamPoly.const(_binom(top, n + 1)) - R * _binom(top - 1, n + 1)) * sign
    if form == "ratio":
        lin = ParamPoly([1 + 3 * n, 1 - n]) * Fraction(1, 3 * n + 1)
        return lin * (_binom(top, n + 1) * sign)
    return _bad_form(form)


def central_plus_sequence(ctx: FamilyContext, n_terms: int, form: str = "diff") -> SeqVec:
    return SeqVec(tuple(ctx.spec(central_plus(n, form)) for n in range(n_terms)))


def unaerated_central(n: int) -> ParamPoly:
    """-(r-3)(-1)^n C(3n-1, n-1) + 0^n."""
    return _zero_pow(n) - (R - 3) * ((-1) ** n * _binom(3 * n - 1, n - 1))


def r_components(seq, max_degree: int | None = None) -> list:
    """Split polynomials in r into the integer sequences of their r^j coefficients."""
    terms = seq.terms if isinstance(seq, SeqVec) else tuple(seq)
    top = max(t.degree for t in terms) if max_degree is None else max_degree
    return [[t.coeff(j) for t in terms] for j in range(max(top, 0) + 1)]


@dataclass(frozen=True)
class CentralHankelReport:
    """Hankel transforms of the central sequences, divided by (r-3)^n."""

    aerated_ratio: SeqVec
    unaerated_ratio: SeqVec

    @property
    def aerated_components(self) -> list:
        return r_components(self.aerated_ratio, 1)

    @property
    def unaerated_components(self) -> list:
        return r_components(self.unaerated_ratio, 1)

    def to_json(self) -> dict:
        return {
            "aerated_ratio": [str(t) for t in self.aerated_ratio],
            "unaerated_ratio": [str(t) for t in self.unaerated_ratio],
            "aerated_components": _jsonable(self.aerated_components),
            "unaerated_components": _jsonable(self.unaerated_components),
        }


def _ratio_by_power(h: SeqVec, base: ParamPoly) -> SeqVec:
    return SeqVec(tuple(t.divexact(base**n) for n, t in enumerate(h)))


def central_hankel_report(max_n: int, unaerated_max_n: int | None = None) -> CentralHankelReport:
    """Symbolic h_n/(r-3)^n for P_{2n,n} (aerated) and for the un-aerated sequence.

    Raises NonZeroRemainder if (r-3)^n does not divide h_n.
    """
    un_n = max_n if unaerated_max_n is None else unaerated_max_n
    aer = hankel_transform([central(n) for n in range(2 * max_n + 1)], max_n)
    una = hankel_transform([unaerated_central(n) for n in range(2 * un_n + 1)], un_n)
    return CentralHankelReport(_ratio_by_power(aer, R - 3), _ratio_by_power(una, R - 3))


# --- moments -----------------------------------------------------------------


def moment_matrix(ctx: FamilyContext = SYMBOLIC) -> RiordanPair:
    return inverse(coefficient_array(ctx))


def moment_gf_closed_form(r_value, order: int, variant: str = "matrix") -> Series:
    """Printed closed form of the moment g.f. at a numeric r (r != 0 needed).

    ``matrix``: (sqrt(1-4x^2)(r-1) + r + 1) / (2(r + x^2 (r-1)^2)), shown with M(r);
    ``cfrac``: (sqrt(1-4x^2)(r+1) + r - 1) / (2(r - x^2 (r+1)^2)), shown with the
    continued fraction.
    """
    rv = as_rat(r_value)
    root = series_sqrt(Series([1, 0, -4], order))
    if variant == "matrix":
        return (root * (rv - 1) + (rv + 1)) / Series([2 * rv, 0, 2 * (rv - 1) ** 2], order)
    if variant == "cfrac":
        return (root * (rv + 1) + (rv - 1)) / Series([2 * rv, 0, -2 * (rv + 1) ** 2], order)
    raise ValueError(f"unknown variant {variant!r}")


def moment_f_closed_form(order: int) -> Series:
    """(1 - sqrt(1 - 4x^2)) / (2x)."""
    root = series_sqrt(Series([1, 0, -4], order + 1))
    return ((1 - root) * Fraction(1, 2)).div_x(1)


def check_moment_closed_form(order: int = 16, variant: str = "matrix") -> CheckReport:
    """Compare a printed closed form with inverse(coefficient_array) by evaluation.

    After multiplying coefficient n of either side by r^(n/2 + 1) both are
    polynomials in r of degree at most n + 1, so agreement at order + 3
    nonzero values of r proves the identity through x^(order-1).
    """
    M = moment_matrix(FamilyContext.symbolic(order)).g
    points = range(1, order + 4)
    for rv in points:
        lhs = M.evaluate_r(rv)
        rhs = moment_gf_closed_form(rv, order, variant)
        if lhs != rhs:
            bad = next(i for i in range(order) if lhs[i] != rhs[i])
            return CheckReport(
                f"moment_gf.{variant}", "fail", lhs[bad], rhs[bad], {"r": rv, "n": bad}
            )
    return CheckReport(f"moment_gf.{variant}", "pass", detail=f"{len(points)} values of r")


def moments(ctx: FamilyContext, n_terms: int) -> SeqVec:
    """mu_n(r) from the closed form, n < n_terms."""
    out = []
    for n in range(n_terms):
        if n % 2:
            out.append(ZERO)
            continue
        h = n // 2
        acc = ZERO
        for k in range(h + 1):
            c = Fraction(2 * k + 1, h + k + 1) * _binom(n, h - k) * (-1) ** k
            acc = acc + ParamPoly([0] * k + [c])
        out.append(ctx.spec(acc))
    return SeqVec(tuple(out))


def moments_unaerated(ctx: FamilyContext, n_terms: int) -> SeqVec:
    """sum_k (2k+1)/(n+k+1) C(2n, n-k) (-1)^k r^k, n < n_terms."""
    out = []
    for n in range(n_terms):
        acc = ZERO
        for k in range(n + 1):
            c = Fraction(2 * k + 1, n + k + 1) * _binom(2 * n, n - k) * (-1) ** k
            acc = acc + ParamPoly([0] * k + [c])
        out.append(ctx.spec(acc))
    return SeqVec(tuple(out))


def moment_column(ctx: FamilyContext, n_terms: int) -> SeqVec:
    return SeqVec(moment_matrix(ctx).g.coeffs[:n_terms])


def moments_unaerated_ftra(ctx: FamilyContext, n_terms: int) -> SeqVec:
    """(c(x), 1 - c(x)) applied to 1/(1 - r x)."""
    order = n_terms
    c = catalan(order)
    pair = RiordanPair(c, 1 - c)
    return SeqVec(ftra_apply(pair, Series.geometric(ctx.param, order)).coeffs)


def moment_hankel(ctx: FamilyContext, max_n: int, aerated: bool = True) -> SeqVec:
    if aerated:
        src = moments(ctx, 2 * max_n + 1)
    else:
        src = moments_unaerated(ctx, 2 * max_n + 1)
    return hankel_transform(src, max_n)


# --- row sums ----------------------------------------------------------------


def row_sum_sequence(ctx: FamilyContext, n_terms: int) -> SeqVec:
    """s_n = sum_{k <= n/2} C(n, floor((n-2k)/2)) (-1)^k r^k."""
    out = []
    for n in range(n_terms):
        acc = ZERO
        for k in range(n // 2 + 1):
            acc = acc + ParamPoly([0] * k + [_binom(n, (n - 2 * k) // 2) * (-1) ** k])
        out.append(ctx.spec(acc))
    return SeqVec(tuple(out))


def row_sums_of_moment_matrix(ctx: FamilyContext, n_terms: int) -> SeqVec:
    return row_sums(moment_matrix(ctx), n_terms)


def rowsum_gf(ctx: FamilyContext) -> Series:
    """Row-sum g.f. of the moment matrix: M(r) applied to 1/(1 - x)."""
    return ftra_apply(moment_matrix(ctx), Series.geometric(1, ctx.order))


def rowsum_gf_closed_form(r_value, order: int, variant: str = "corrected") -> Series:
    """(sqrt(1-4x^2)(x(r-1) - r) + 2x^2(r-1) + x(r+1) - r) / (2 L (x^2(r-1)^2 + r)).

    ``corrected`` takes L = 2x - 1; ``printed`` takes L = x - 1, which
    already fails at s_1.
    """
    rv = as_rat(r_value)
    if variant not in ("corrected", "printed"):
        raise ValueError(f"unknown variant {variant!r}")
    root = series_sqrt(Series([1, 0, -4], order))
    num = root * Series([-rv, rv - 1], order) + Series([-rv, rv + 1, 2 * (rv - 1)], order)
    lead = 2 if variant == "corrected" else 1
    sq = (rv - 1) ** 2
    den = Series([-2 * rv, 2 * lead * rv, -2 * sq, 2 * lead * sq], order)
    return num / den


def check_rowsum_closed_form(order: int = 16, variant: str = "corrected") -> CheckReport:
    """Row-sum g.f. against its closed form at order + 3 nonzero values of r.

    The degree bound is the same as for the moment g.f.
    """
    S = rowsum_gf(FamilyContext.symbolic(order))
    for rv in range(1, order + 4):
        lhs = S.evaluate_r(rv)
        rhs = rowsum_gf_closed_form(rv, order, variant)
        if lhs != rhs:
            bad = next(i for i in range(order) if lhs[i] != rhs[i])
            return CheckReport(
                f"rowsum_gf.{variant}", "fail", lhs[bad], rhs[bad], {"r": rv, "n": bad}
            )
    return CheckReport(f"rowsum_gf.{variant}", "pass", detail=f"{order + 3} values of r")


def rowsum_proof_pair(order: int) -> RiordanPair:
    """((1 + x c(x^2))/sqrt(1 - 4x^2), (c(x^2) - 1)/x)."""
    c2 = series_compose(catalan(order + 1), Series.monomial(1, 2, order + 1))
    g = (1 + Series.x(order) * c2) / series_sqrt(Series([1, 0, -4], order))
    return RiordanPair(g, (c2 - 1).div_x(1))


def rowsum_proof_matrix(n_rows: int) -> TriMatrix:
    """Entries C(n+k, floor((n-k)/2))."""
    return TriMatrix.from_function(
        n_rows, n_rows, lambda n, k: _binom(n + k, (n - k) // 2) if k <= n else 0
    )


def rowsum_gf_via_proof(ctx: FamilyContext) -> Series:
    """((1 + x c(x^2))/sqrt(1 - 4x^2), 1 - c(x^2)) applied to 1/(1 - r x)."""
    order = ctx.order
    pair = rowsum_proof_pair(order)
    c2 = series_compose(catalan(order), Series.monomial(1, 2, order))
    return ftra_apply(RiordanPair(pair.g, 1 - c2), Series.geometric(ctx.param, order))


def h_hat(n: int) -> ParamPoly:
    """Polynomial form of r^n U_n((1/r - 1)/2): H_0 = 1, H_1 = 1 - r,
    H_{n+1} = (1 - r) H_n - r^2 H_{n-1}."""
    if n < 0:
        raise ValueError("n must be non-negative")
    prev, cur = ONE, 1 - R
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, (1 - R) * cur - R * R * prev
    return cur


def h_hat_closed(n: int, r_value) -> RatNum:
    """r^n U_n((1/r - 1)/2) evaluated directly at a nonzero rational r."""
    rv = Fraction(as_rat(r_value))
    y = (1 / rv - 1) / 2
    u = K.peval(chebyshev_u(n), y)
    return as_rat(rv**n * u)


def h_hat_sequence(ctx: FamilyContext, n_terms: int) -> SeqVec:
    return SeqVec(tuple(ctx.spec(h_hat(n)) for n in range(n_terms)))


def rowsum_hankel(ctx: FamilyContext, max_n: int) -> SeqVec:
    return hankel_transform(row_sum_sequence(ctx, 2 * max_n + 1), max_n)


def h_hat_coefficient_array(n_rows: int) -> TriMatrix:
    """Row n holds the coefficients of H_n in r, ascending."""
    return TriMatrix.from_function(n_rows, n_rows, lambda n, k: h_hat(n).coeff(k))


def rowsum_coeffarray_identities(n_rows: int = 7, factor_rows: int = 12) -> list:
    """Reversal of the H coefficient array and the Chebyshev-binomial factorization."""
    order = max(n_rows, factor_rows) + 1
    target = pair_from_rational([1], [1, 1, 1], order)
    rev = h_hat_coefficient_array(n_rows).row_reversal()
    tm = to_matrix(target, n_rows)
    reports = [
        CheckReport(
            "rowsum_hankel.reversal",
            "pass" if rev == tm else "fail",
            rev,
            tm,
            {"rows": n_rows},
        )
    ]
    cheb = pair_from_rational([1], [1, 0, 1], order)
    for claim_id, right, want in (
        # the identity holds through the inverse binomial array (1/(1+x), x/(1+x))
        ("rowsum_hankel.factorization", inverse(binomial_pair(order)), target),
        # with (1/(1-x), x/(1-x)) the product is (1/(1-x+x^2), x/(1-x+x^2)) instead
        ("rowsum_hankel.factorization_printed", binomial_pair(order), target),
    ):
        prod = multiply(cheb, right)
        lhs = to_matrix(cheb, factor_rows) @ to_matrix(right, factor_rows)
        rhs = to_matrix(want, factor_rows)
        ok = lhs == rhs and to_matrix(prod, factor_rows) == rhs
        reports.append(
            CheckReport(
                claim_id,
                "pass" if ok else "fail",
                SeqVec(prod.g.coeffs[:factor_rows]),
                SeqVec(want.g.coeffs[:factor_rows]),
                {"rows": factor_rows},
            )
        )
    return reports


# --- Q_n(x; r) recurrence ---------------------------------------------------


@dataclass(frozen=True)
class QPolyReport:
    """Stated alpha_n, beta_n for Q_n(x; r) compared with the row-sum J-fraction.

    ``a``/``b`` are the extracted J-fraction coefficients (a_0.., b_1..);
    ``alpha``/``beta`` the formula values for n = 1..depth.  The literal
    reading pairs alpha_n with a_{n-1} and beta_n with b_{n-1}.
    """

    r: RatNum
    depth: int
    status: str
    a: tuple = ()
    b: tuple = ()
    alpha: tuple = ()
    beta: tuple = ()
    first_mismatch: dict | None = None
    beta_shift: int | None = None
    alpha_alignment: tuple | None = None
    achieved_depth: int | None = None

    def to_json(self) -> dict:
        return {
            "claim_id": f"qpoly.r={self.r}",
            "status": self.status,
            "r": str(self.r),
            "depth": self.depth,
            "a": [str(v) for v in self.a],
            "b": [str(v) for v in self.b],
            "alpha": [str(v) for v in self.alpha],
            "beta": [str(v) for v in self.beta],
            "first_mismatch": _jsonable(self.first_mismatch),
            "beta_shift": self.beta_shift,
            "alpha_alignment": _jsonable(self.alpha_alignment),
            "achieved_depth": self.achieved_depth,
        }


def qpoly_recurrence_check(r_value, depth: int, order: int = DEFAULT_ORDER) -> QPolyReport:
    """Test alpha_n = r^(2n+1)/(H_{n-1} H_n), beta_n = H_{n-1} H_{n+1}/H_n^2.

    The J-fraction of the row-sum g.f. at r = r_value is extracted to depth + 2
    so shifted alignments can be reported alongside the literal verdict.
    """
    rv = as_rat(r_value)
    if depth == 0:
        return QPolyReport(rv, 0, "pass")
    H = [h_hat(n)(rv) for n in range(depth + 2)]
    if any(h == 0 for h in H):
        raise AlgebraError(f"H_n({rv}) vanishes below depth {depth + 1}")
    gf = rowsum_gf(FamilyContext.numeric(rv, order))
    want = min(depth + 2, (order - 1) // 2)
    try:
        cf = jfraction_extract(gf, want)
    except ZeroHankelBlock as exc:
        cf = exc.partial
        if cf.depth < depth:
            raise
    a = tuple(v.constant_value() for v in cf.a)
    b = tuple(v.constant_value() for v in cf.b)
    alpha = tuple(Fraction(rv) ** (2 * n + 1) / (H[n - 1] * H[n]) for n in range(1, depth + 1))
    beta = tuple(Fraction(H[n - 1] * H[n + 1], 1) / H[n] ** 2 for n in range(1, depth + 1))

    mismatch = None
    for n in range(1, depth + 1):
        if alpha[n - 1] != a[n - 1]:
            mismatch = {"n": n, "which": "alpha", "formula": alpha[n - 1], "extracted": a[n - 1]}
            break
        if n >= 2 and beta[n - 1] != b[n - 2]:
            mismatch = {"n": n, "which": "beta", "formula": beta[n - 1], "extracted": b[n - 2]}
            break

    # beta_n = b_{n+s} (1-based b) and alpha_n * r^p = a_{n+t} (0-based a);
    # the literal reading is s = -2, t = -1, p = 0
    ns = range(1, depth + 1)
    beta_shift = next(
        (
            s
            for s in (-2, -1, 0, 1, 2)
            if all(1 <= n + s <= len(b) and beta[n - 1] == b[n + s - 1] for n in ns)
        ),
        None,
    )
    alpha_alignment = next(
        (
            (t, p)
            for t in (-1, 0, 1)
            for p in (0, -2, 2)
            if all(
                0 <= n + t < len(a) and alpha[n - 1] * Fraction(rv) ** p == a[n + t] for n in ns
            )
        ),
        None,
    )

    return QPolyReport(
        rv,
        depth,
        "pass" if mismatch is None else "fail",
        a,
        b,
        alpha,
        beta,
        mismatch,
        beta_shift,
        alpha_alignment,
        cf.depth,
    )


# --- generalized Chebyshev arrays -------------------------------------------


def generalized_chebyshev_array(lam, mu, a, b, order: int = DEFAULT_ORDER) -> RiordanPair:
    """((1 - lam x - mu x^2)/(1 + a x + b x^2), x/(1 + a x + b x^2))."""
    lam, mu, a, b = (as_poly(v) for v in (lam, mu, a, b))
    return pair_from_rational([1, -lam, -mu], [1, a, b], order)


def generalized_chebyshev_poly(lam, mu, a, b, n: int) -> tuple:
    """Q_n(x) = t^n U_n((x-a)/(2t)) - lam t^(n-1) U_{n-1}(.) - mu t^(n-2) U_{n-2}(.),
    t = sqrt(b), for integer parameters with b a perfect square (t > 0).

    U with negative index is taken as zero.
    """
    t = isqrt(b)
    if b <= 0 or t * t != b:
        raise ValueError(f"b = {b} is not a positive perfect square")

    def scaled_u(m: int) -> list:
        # t^m U_m((x - a)/(2t)) as integer coefficients in x
        if m < 0:
            return [0]
        out = [Fraction(0)] * (m + 1)
        for j, c in enumerate(chebyshev_u(m)):
            if not c:
                continue
            # c * t^(m-j) * ((x - a)/2)^j
            shift = [Fraction(1)]
            for _ in range(j):
                shift = [Fraction(0)] + shift
                for i in range(len(shift) - 1):
                    shift[i] -= a * shift[i + 1]
            for i, s in enumerate(shift):
                out[i] += c * Fraction(t) ** (m - j) * s / 2**j
        return out

    parts = [scaled_u(n), [lam * v for v in scaled_u(n - 1)], [mu * v for v in scaled_u(n - 2)]]
    res = [Fraction(0)] * (n + 1)
    for sign, p in zip((1, -1, -1), parts):
        for i, v in enumerate(p):
            res[i] += sign * v
    return tuple(ParamPoly.const(v) for v in res)
