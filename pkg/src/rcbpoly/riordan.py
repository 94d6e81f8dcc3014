"""Riordan arrays over Q[r]: entries, group law, A/Z-sequences, production matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import kernels as K
from .exactalg import (
    AlgebraError,
    OutOfOrder,
    ParamPoly,
    Series,
    as_poly,
    as_rat,
    series_compose,
    series_divide,
    series_revert,
)

ZERO = ParamPoly()
ONE = ParamPoly.const(1)


@dataclass(frozen=True)
class SeqVec:
    """A finite run of sequence terms starting at index ``offset``."""

    terms: tuple
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(as_poly(t) for t in self.terms))
        if not self.terms:
            raise ValueError("SeqVec needs at least one term")

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __iter__(self):
        return iter(self.terms)

    def evaluate_r(self, at) -> "SeqVec":
        v = as_rat(at)
        return SeqVec(tuple(ParamPoly.const(t(v)) for t in self.terms), self.offset)

    def to_json(self) -> dict:
        return {"offset": self.offset, "terms": [t.to_json() for t in self.terms]}

    @classmethod
    def from_json(cls, obj: dict) -> "SeqVec":
        return cls(tuple(ParamPoly.from_json(t) for t in obj["terms"]), obj.get("offset", 0))

    def render(self, sep: str = ", ") -> str:
        return sep.join(str(t) for t in self.terms)


@dataclass(frozen=True)
class TriMatrix:
    """Dense matrix of ``ParamPoly`` entries, row-major.

    Lower-triangular arrays are stored with their zeros; ``rows`` may also be
    rectangular (a production matrix or a truncated D-bar).
    """

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(as_poly(e) for e in row) for row in self.rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int) -> "TriMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_function(cls, n_rows: int, n_cols: int, fn: Callable[[int, int], object]) -> "TriMatrix":
        return cls(tuple(tuple(fn(i, j) for j in range(n_cols)) for i in range(n_rows)))

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, idx) -> ParamPoly:
        i, j = idx
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def is_lower_triangular(self) -> bool:
        return all(not self.rows[i][j] for i in range(len(self.rows)) for j in range(i + 1, self.shape[1]))

    def is_tridiagonal(self) -> bool:
        return all(
            not self.rows[i][j]
            for i in range(len(self.rows))
            for j in range(self.shape[1])
            if abs(i - j) > 1
        )

    def __matmul__(self, other: "TriMatrix") -> "TriMatrix":
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for i in range(n):
            row = []
            for j in range(p):
                acc = ()
                for k in range(m):
                    a = self.rows[i][k]._c
                    b = other.rows[k][j]._c
                    if a and b:
                        acc = K.padd(acc, K.pmul(a, b))
                row.append(ParamPoly._wrap(acc))
            out.append(tuple(row))
        return TriMatrix(tuple(out))

    def apply(self, vec: Sequence) -> tuple:
        """Matrix times column vector."""
        n, m = self.shape
        out = []
        for i in range(n):
            acc = ZERO
            for k in range(min(m, len(vec))):
                acc = acc + self.rows[i][k] * as_poly(vec[k])
            out.append(acc)
        return tuple(out)

    def submatrix(self, n_rows: int, n_cols: int | None = None) -> "TriMatrix":
        n_cols = n_rows if n_cols is None else n_cols
        return TriMatrix(tuple(row[:n_cols] for row in self.rows[:n_rows]))

    def evaluate_r(self, at) -> "TriMatrix":
        v = as_rat(at)
        return TriMatrix(tuple(tuple(ParamPoly.const(e(v)) for e in row) for row in self.rows))

    def row_reversal(self) -> "TriMatrix":
        """Reverse the first n+1 entries of each row n of a lower-triangular array."""
        n, m = self.shape
        return TriMatrix(
            tuple(
                tuple(self.rows[i][i - j] if j <= i else ZERO for j in range(m))
                for i in range(n)
            )
        )

    def to_json(self) -> dict:
        return {"rows": [[e.to_json() for e in row] for row in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "TriMatrix":
        return cls(tuple(tuple(ParamPoly.from_json(e) for e in row) for row in obj["rows"]))

    def render(self) -> str:
        cells = [[str(e) for e in row] for row in self.rows]
        if not cells:
            return ""
        widths = [max(len(cells[i][j]) for i in range(len(cells))) for j in range(len(cells[0]))]
        return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells)


def lower_inverse(M: TriMatrix) -> TriMatrix:
    """Exact inverse of a square lower-triangular matrix with rational-unit diagonal."""
    n, m = M.shape
    if n != m:
        raise ValueError("lower_inverse needs a square matrix")
    inv = [[()] * n for _ in range(n)]
    for i in range(n):
        d = M.rows[i][i]._c
        if len(d) != 1:
            raise AlgebraError(f"diagonal entry {M.rows[i][i]} at {i} is not a rational unit")
        dinv = K.trim([1 / Fraction(d[0])])
        for j in range(i + 1):
            acc = (1,) if i == j else ()
            for k in range(j, i):
                a = M.rows[i][k]._c
                b = inv[k][j]
                if a and b:
                    acc = K.psub(acc, K.pmul(a, b))
            inv[i][j] = K.pmul(acc, dinv)
    return TriMatrix(tuple(tuple(ParamPoly._wrap(c) for c in row) for row in inv))


@dataclass(frozen=True)
class RiordanPair:
    """A Riordan array given by its series pair (g, f).

    ``g(0) = 1`` and ``f(0) = 0`` are always required.  The array is proper
    when additionally ``[x^1] f = 1``; inversion, A/Z-sequences and production
    matrices need a proper pair.  Improper f is allowed so that the
    fundamental-theorem action g(x) a(f(x)) can be taken with any f.
    """

    g: Series
    f: Series

    def __post_init__(self):
        if not self.g.order or self.g[0] != 1:
            raise AlgebraError("Riordan pair needs g(0) = 1")
        if not self.f.order or self.f[0]:
            raise AlgebraError("Riordan pair needs f(0) = 0")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    @property
    def is_proper(self) -> bool:
        return self.f.order > 1 and self.f[1] == 1

    def _require_proper(self):
        if not self.is_proper:
            raise AlgebraError("operation needs a proper Riordan pair ([x^1] f = 1)")

    def columns(self, n_rows: int) -> list:
        """Column series g f^k, k < n_rows, each truncated to n_rows."""
        if n_rows > self.order:
            raise OutOfOrder(f"{n_rows} rows requested from a pair of order {self.order}")
        g = self.g.truncate(n_rows)
        f = self.f.truncate(n_rows)
        cols, cur = [], g
        for _ in range(n_rows):
            cols.append(cur)
            cur = cur * f
        return cols

    def evaluate_r(self, at) -> "RiordanPair":
        return RiordanPair(self.g.evaluate_r(at), self.f.evaluate_r(at))

    def __repr__(self) -> str:
        return f"RiordanPair(g={self.g!r}, f={self.f!r})"


def identity_pair(order: int) -> RiordanPair:
    return RiordanPair(Series.one(order), Series.x(order))


def binomial_pair(order: int) -> RiordanPair:
    """(1/(1-x), x/(1-x))."""
    geo = Series.geometric(1, order)
    return RiordanPair(geo, geo.mul_x(1))


def entry(D: RiordanPair, n: int, k: int) -> ParamPoly:
    """[x^n] g f^k."""
    if not 0 <= k <= n:
        raise ValueError("entry needs 0 <= k <= n")
    if n >= D.order:
        raise OutOfOrder(f"row {n} is beyond the truncation order {D.order}")
    col = D.g.truncate(n + 1)
    f = D.f.truncate(n + 1)
    for _ in range(k):
        col = col * f
    return col[n]


def to_matrix(D: RiordanPair, n_rows: int) -> TriMatrix:
    cols = D.columns(n_rows)
    return TriMatrix(tuple(tuple(cols[k][n] for k in range(n_rows)) for n in range(n_rows)))


def multiply(D1: RiordanPair, D2: RiordanPair) -> RiordanPair:
    """(g1, f1)(g2, f2) = (g1 g2(f1), f2(f1))."""
    return RiordanPair(D1.g * series_compose(D2.g, D1.f), series_compose(D2.f, D1.f))


def inverse(D: RiordanPair) -> RiordanPair:
    """(g, f)^-1 = (1/g(fbar), fbar)."""
    D._require_proper()
    fbar = series_revert(D.f)
    return RiordanPair(1 / series_compose(D.g, fbar), fbar)


def ftra_apply(D: RiordanPair, a: Series) -> Series:
    """The action g(x) a(f(x)) of the array on a generating function."""
    return D.g * series_compose(a, D.f)


def a_sequence(D: RiordanPair) -> SeqVec:
    """Coefficients of A(x) = x / fbar(x)."""
    D._require_proper()
    fbar = series_revert(D.f)
    A = 1 / fbar.div_x(1)
    return SeqVec(A.coeffs)


def z_sequence(D: RiordanPair) -> SeqVec:
    """Coefficients of Z(x) = (1 - 1/g(fbar)) / fbar."""
    D._require_proper()
    fbar = series_revert(D.f)
    A = 1 / fbar.div_x(1)
    tail = (1 - 1 / series_compose(D.g, fbar)).div_x(1)
    return SeqVec((A * tail).coeffs)


def production_matrix(D: RiordanPair, size: int) -> TriMatrix:
    """P = D^-1 Dbar on a size x size truncation, Dbar being D without its top row.

    Uses exact triangular inversion of the truncated matrix.
    """
    if size + 1 > D.order:
        raise OutOfOrder(f"production matrix of size {size} needs order > {size}")
    full = to_matrix(D, size + 1)
    Dinv = lower_inverse(full.submatrix(size))
    Dbar = TriMatrix(tuple(row[:size] for row in full.rows[1 : size + 1]))
    return Dinv @ Dbar


def row_sums(D: RiordanPair, n_terms: int) -> SeqVec:
    M = to_matrix(D, n_terms)
    out = []
    for row in M.rows:
        acc = ()
        for e in row:
            acc = K.padd(acc, e._c)
        out.append(ParamPoly._wrap(acc))
    return SeqVec(tuple(out))


@dataclass(frozen=True)
class AZReport:
    """Outcome of checking the A- and Z-sequence recurrences on a matrix."""

    ok: bool
    rows_checked: int
    location: tuple | None = None
    expected: ParamPoly | None = None
    found: ParamPoly | None = None
    kind: str | None = None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "rows_checked": self.rows_checked,
            "location": list(self.location) if self.location else None,
            "kind": self.kind,
            "expected": str(self.expected) if self.expected is not None else None,
            "found": str(self.found) if self.found is not None else None,
        }


def check_az_recurrences(
    D: RiordanPair, n_rows: int, matrix: TriMatrix | None = None
) -> AZReport:
    """Check d[n+1,k+1] = sum_j a_j d[n,k+j] and d[n+1,0] = sum_j z_j d[n,j].

    The A/Z sequences come from D; the entries come from ``matrix`` when
    given (to test a tampered matrix) and from D otherwise.  The first
    violating entry is reported.
    """
    if n_rows >= D.order:
        raise OutOfOrder(f"{n_rows} rows need order > {n_rows}")
    A = a_sequence(D).terms
    Z = z_sequence(D).terms
    M = matrix if matrix is not None else to_matrix(D, n_rows)
    rows = M.rows
    n_check = min(n_rows, len(rows))
    width = M.shape[1]

    def d(n, k):
        return rows[n][k] if k < width else ZERO

    for n in range(n_check - 1):
        rhs = ZERO
        for j in range(n + 1):
            if j < len(Z):
                rhs = rhs + Z[j] * d(n, j)
        if d(n + 1, 0) != rhs:
            return AZReport(False, n_check, (n + 1, 0), rhs, d(n + 1, 0), "Z")
        for k in range(n + 1):
            rhs = ZERO
            for j in range(n - k + 1):
                if j < len(A):
                    rhs = rhs + A[j] * d(n, k + j)
            if d(n + 1, k + 1) != rhs:
                return AZReport(False, n_check, (n + 1, k + 1), rhs, d(n + 1, k + 1), "A")
    return AZReport(True, n_check)


def pair_from_rational(num: Sequence, den: Sequence, order: int) -> RiordanPair:
    """The pair (num/den, x/den) for polynomials num, den in x."""
    n = Series(num, order)
    d = Series(den, order)
    return RiordanPair(series_divide(n, d), series_divide(Series.x(order), d))
