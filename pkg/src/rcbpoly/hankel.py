"""Hankel determinants, Jacobi/Stieltjes continued fractions, aeration, Chebyshev U."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels as K
from .exactalg import AlgebraError, ParamPoly, Series, as_poly
from .riordan import SeqVec, TriMatrix


class InsufficientTerms(ValueError):
    """Sequence is too short for the requested Hankel order."""

    def __init__(self, needed: int, have: int):
        super().__init__(f"need {needed} terms, have {have}")
        self.needed = needed
        self.have = have


class NotAerated(ValueError):
    """Odd-index terms are not all zero."""


class ZeroHankelBlock(AlgebraError):
    """A J-fraction coefficient b_k vanished before the requested depth.

    ``partial`` holds the fraction extracted so far and ``depth`` its length.
    """

    def __init__(self, partial: "JFraction", depth: int):
        super().__init__(f"J-fraction stops at depth {depth}: b_{depth} = 0")
        self.partial = partial
        self.depth = depth


class ZeroPivot(AlgebraError):
    """An S-fraction coefficient vanished while the remainder did not."""

    def __init__(self, partial: "SFraction", depth: int):
        super().__init__(f"S-fraction breaks down at depth {depth}")
        self.partial = partial
        self.depth = depth


@dataclass(frozen=True)
class HankelSpec:
    source: SeqVec
    max_n: int

    def __post_init__(self):
        if len(self.source) < 2 * self.max_n + 1:
            raise InsufficientTerms(2 * self.max_n + 1, len(self.source))


@dataclass(frozen=True)
class JFraction:
    """1/(1 - a0 x - b1 x^2/(1 - a1 x - b2 x^2/(...))).

    ``a[k]`` is a_k and ``b[k]`` is b_{k+1}; both have ``depth`` entries.
    """

    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(as_poly(v) for v in self.a))
        object.__setattr__(self, "b", tuple(as_poly(v) for v in self.b))
        if len(self.a) != len(self.b):
            raise ValueError("J-fraction needs as many a as b coefficients")

    @property
    def depth(self) -> int:
        return len(self.a)

    def to_json(self) -> dict:
        return {"a": [v.to_json() for v in self.a], "b": [v.to_json() for v in self.b]}

    @classmethod
    def from_json(cls, obj: dict) -> "JFraction":
        return cls(
            tuple(ParamPoly.from_json(v) for v in obj["a"]),
            tuple(ParamPoly.from_json(v) for v in obj["b"]),
        )


@dataclass(frozen=True)
class SFraction:
    """1/(1 - alpha1 x/(1 - alpha2 x/(...)));  ``alpha[k]`` is alpha_{k+1}."""

    alpha: tuple

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(as_poly(v) for v in self.alpha))

    def to_json(self) -> dict:
        return {"alpha": [v.to_json() for v in self.alpha]}

    @classmethod
    def from_json(cls, obj: dict) -> "SFraction":
        return cls(tuple(ParamPoly.from_json(v) for v in obj["alpha"]))


def _terms(s) -> tuple:
    if isinstance(s, SeqVec):
        return s.terms
    if isinstance(s, Series):
        return s.coeffs
    return tuple(as_poly(t) for t in s)


def hankel_matrix(s, n: int) -> TriMatrix:
    """(n+1) x (n+1) matrix with entry (i, j) = s[i + j]."""
    terms = _terms(s)
    if len(terms) < 2 * n + 1:
        raise InsufficientTerms(2 * n + 1, len(terms))
    return TriMatrix(tuple(tuple(terms[i + j] for j in range(n + 1)) for i in range(n + 1)))


def det_fraction_free(M: TriMatrix) -> ParamPoly:
    n, m = M.shape
    if n != m:
        raise ValueError("determinant needs a square matrix")
    return ParamPoly._wrap(K.det_bareiss([[e._c for e in row] for row in M.rows]))


def det_cofactor(M: TriMatrix) -> ParamPoly:
    """Laplace expansion along the first row; only for small matrices."""
    rows = [list(r) for r in M.rows]

    def rec(mat):
        if not mat:
            return ParamPoly.const(1)
        total = ParamPoly()
        for j, e in enumerate(mat[0]):
            if not e:
                continue
            minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
            term = e * rec(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    return rec(rows)


def hankel_transform(s, max_n: int) -> SeqVec:
    """h_n = det(s[i+j])_{0<=i,j<=n} for n = 0..max_n."""
    terms = _terms(s)
    if len(terms) < 2 * max_n + 1:
        raise InsufficientTerms(2 * max_n + 1, len(terms))
    return SeqVec(tuple(det_fraction_free(hankel_matrix(terms, n)) for n in range(max_n + 1)))


def _divide_exact_series(rem: Series, b: ParamPoly) -> Series:
    return Series._wrap([ParamPoly._wrap(c).divexact(b)._c for c in rem._raw], rem.order)


def jfraction_extract(gf: Series, depth: int) -> JFraction:
    """Jacobi continued fraction of gf (gf(0) = 1) to the given depth.

    A zero b_k with k < depth raises ZeroHankelBlock carrying the partial
    fraction.  Over Q[r] each level divides by b_k exactly and fails with
    NonZeroRemainder when the quotient is not polynomial in r.
    """
    if gf.order < 1 or gf[0] != 1:
        raise AlgebraError("J-fraction needs gf(0) = 1")
    if 2 * depth >= gf.order:
        raise ValueError(f"depth {depth} needs a series of order > {2 * depth}")
    a, b = [], []
    cur = gf
    for k in range(depth):
        inv = 1 / cur
        ak = -inv[1]
        # inv = 1 - a_k x - b_{k+1} x^2 * next
        rem = -(inv - 1 + Series.monomial(ak, 1, inv.order)).div_x(2)
        bk = rem[0]
        a.append(ak)
        b.append(bk)
        if k == depth - 1:
            break
        if not bk:
            raise ZeroHankelBlock(JFraction(tuple(a), tuple(b)), k + 1)
        cur = _divide_exact_series(rem, bk)
    return JFraction(tuple(a), tuple(b))


def sfraction_extract(gf: Series, depth: int) -> SFraction:
    """Stieltjes continued fraction of gf (gf(0) = 1) to the given depth.

    A terminating fraction (remainder identically zero) is padded with zeros.
    """
    if gf.order < 1 or gf[0] != 1:
        raise AlgebraError("S-fraction needs gf(0) = 1")
    if depth >= gf.order:
        raise ValueError(f"depth {depth} needs a series of order > {depth}")
    alpha = []
    cur = gf
    for k in range(depth):
        rem = (1 - 1 / cur).div_x(1)
        ak = rem[0]
        if not ak:
            if rem.is_zero():
                alpha.extend([ParamPoly()] * (depth - k))
                break
            raise ZeroPivot(SFraction(tuple(alpha)), k)
        alpha.append(ak)
        cur = _divide_exact_series(rem, ak)
    return SFraction(tuple(alpha))


def jfraction_to_gf(cf: JFraction, order: int) -> Series:
    """Evaluate the finite J-fraction bottom-up as a series of the given order."""
    t = Series.one(order)
    x = Series.x(order)
    for k in range(cf.depth - 1, -1, -1):
        t = 1 / (1 - x * cf.a[k] - (x * x) * cf.b[k] * t)
    return t


def sfraction_to_gf(cf: SFraction, order: int) -> Series:
    t = Series.one(order)
    x = Series.x(order)
    for k in range(len(cf.alpha) - 1, -1, -1):
        t = 1 / (1 - x * cf.alpha[k] * t)
    return t


def hankel_from_jfraction(cf: JFraction, max_n: int) -> SeqVec:
    """h_n = prod_{k=1}^{n} b_k^(n+1-k)."""
    if max_n > cf.depth:
        raise ValueError(f"need b_1..b_{max_n}, fraction has depth {cf.depth}")
    out = []
    for n in range(max_n + 1):
        h = ParamPoly.const(1)
        for k in range(1, n + 1):
            h = h * cf.b[k - 1] ** (n + 1 - k)
        out.append(h)
    return SeqVec(tuple(out))


def jfraction_contract(sf: SFraction) -> JFraction:
    """Even contraction of an S-fraction into a J-fraction.

    a_0 = alpha_1, a_k = alpha_{2k} + alpha_{2k+1}, b_k = alpha_{2k-1} alpha_{2k}.
    """
    al = (ParamPoly(),) + sf.alpha
    depth = (len(al) - 1) // 2
    a = [al[1]] + [al[2 * k] + al[2 * k + 1] for k in range(1, depth)]
    b = [al[2 * k - 1] * al[2 * k] for k in range(1, depth + 1)]
    return JFraction(tuple(a[:depth]), tuple(b))


def aerate(s) -> SeqVec:
    terms = _terms(s)
    out = []
    for t in terms:
        out.extend([t, ParamPoly()])
    return SeqVec(tuple(out[:-1]))


def unaerate(s) -> SeqVec:
    terms = _terms(s)
    if any(terms[i] for i in range(1, len(terms), 2)):
        raise NotAerated("odd-index terms are not all zero")
    return SeqVec(terms[0::2])


def chebyshev_u(n: int) -> tuple:
    """Integer coefficients of U_n(y), ascending in y."""
    if n < 0:
        return ()
    prev, cur = (), (1,)
    for _ in range(n):
        two_y = (0,) + tuple(2 * c for c in cur)
        prev, cur = cur, K.psub(two_y, prev)
    return cur


def chebyshev_u_half(n: int) -> tuple:
    """Coefficients of U_n(x/2), ascending in x; empty for n < 0."""
    return tuple(c // (1 << k) for k, c in enumerate(chebyshev_u(n)))
