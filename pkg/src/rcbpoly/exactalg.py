"""Exact scalars, polynomials in the family parameter r, and truncated power series.

Scalars are ``int`` or ``fractions.Fraction`` (integral fractions are stored as
``int``).  ``ParamPoly`` is a dense polynomial in r over Q.  ``Series`` is a
power series in x with ``ParamPoly`` coefficients, truncated at an explicit
order: coefficients 0..order-1 are known, nothing beyond.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import kernels as K

RatNum = Union[int, Fraction]

DEFAULT_ORDER = 32


class AlgebraError(ArithmeticError):
    """Base class for exact-algebra failures."""


class NonZeroRemainder(AlgebraError):
    """Exact polynomial division left a remainder."""


class NonUnitConstantTerm(AlgebraError):
    """Series denominator has a constant term that is not a nonzero rational."""


class NonzeroInnerConstant(AlgebraError):
    """Inner series of a composition has a nonzero constant term."""


class BadLowOrderTerms(AlgebraError):
    """Series to revert does not start x + O(x^2)."""


class BadConstantTerm(AlgebraError):
    """Series square root needs constant term 1."""


class OutOfOrder(IndexError):
    """Coefficient requested beyond the truncation order."""


def as_rat(value) -> RatNum:
    """Coerce an int, Fraction or rational literal ``"p/q"`` to a RatNum.

    Floats are rejected: they are not exact.
    """
    if isinstance(value, bool):
        return int(value)
    if type(value) is int:
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, int):
        return int(value)
    if isinstance(value, str):
        text = value.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            raise ValueError(f"not an exact rational literal: {value!r}")
        return as_rat(Fraction(text))
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rat_str(c: RatNum) -> str:
    return str(c)


class ParamPoly:
    """Polynomial in r with rational coefficients, ascending degree.

    >>> r = ParamPoly.r()
    >>> str((r - 3) * (r - 3))
    '9 - 6*r + r^2'
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        self._c = K.trim([as_rat(c) for c in coeffs])

    @classmethod
    def _wrap(cls, raw: tuple) -> "ParamPoly":
        p = object.__new__(cls)
        p._c = raw
        return p

    @classmethod
    def r(cls) -> "ParamPoly":
        return cls._wrap((0, 1))

    @classmethod
    def const(cls, c) -> "ParamPoly":
        return cls._wrap(K.trim([as_rat(c)]))

    @classmethod
    def coerce(cls, value) -> "ParamPoly":
        if isinstance(value, ParamPoly):
            return value
        return cls.const(value)

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree in r; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def constant_value(self) -> RatNum:
        if len(self._c) > 1:
            raise ValueError(f"{self} depends on r")
        return self._c[0] if self._c else 0

    def coeff(self, k: int) -> RatNum:
        return self._c[k] if 0 <= k < len(self._c) else 0

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, ParamPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == K.trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("ParamPoly", self._c))

    def __add__(self, other):
        if not isinstance(other, ParamPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = ParamPoly.const(other)
        return ParamPoly._wrap(K.padd(self._c, other._c))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ParamPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = ParamPoly.const(other)
        return ParamPoly._wrap(K.psub(self._c, other._c))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self) -> "ParamPoly":
        return ParamPoly._wrap(K.pneg(self._c))

    def __mul__(self, other):
        if isinstance(other, ParamPoly):
            return ParamPoly._wrap(K.pmul(self._c, other._c))
        if isinstance(other, (int, Fraction)):
            return ParamPoly._wrap(K.pscale(self._c, other))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "ParamPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = ParamPoly._wrap((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, other: "ParamPoly") -> tuple["ParamPoly", "ParamPoly"]:
        other = ParamPoly.coerce(other)
        q, rem = K.pdivmod(self._c, other._c)
        return ParamPoly._wrap(q), ParamPoly._wrap(rem)

    def divexact(self, other) -> "ParamPoly":
        other = ParamPoly.coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        q, rem = K.pdivmod(self._c, other._c)
        if rem:
            raise NonZeroRemainder(f"({self}) is not divisible by ({other})")
        return ParamPoly._wrap(q)

    def __call__(self, at) -> RatNum:
        return K.peval(self._c, as_rat(at))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k, c in enumerate(self._c):
            if not c:
                continue
            neg = c < 0
            mag = -c if neg else c
            if k == 0:
                body = str(mag)
            else:
                mono = "r" if k == 1 else f"r^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"ParamPoly({str(self)!r})"

    def to_json(self) -> dict:
        return {"coeffs": [rat_str(c) for c in self._c]}

    @classmethod
    def from_json(cls, obj) -> "ParamPoly":
        if isinstance(obj, dict):
            obj = obj["coeffs"]
        return cls(as_rat(c) for c in obj)

    _TERM = re.compile(
        r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*(r(?:\s*\^\s*(\d+))?)?\s*"
    )

    @classmethod
    def parse(cls, text: str) -> "ParamPoly":
        """Parse sums of terms like ``2 - 3*r + r^2`` or ``r^2-3 r+2``."""
        src = text.strip()
        if not src:
            raise ValueError("empty polynomial")
        pos = 0
        acc = ParamPoly()
        first = True
        while pos < len(src):
            m = cls._TERM.match(src, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial {text!r}")
            sign, coef, mono, power = m.groups()
            if coef is None and mono is None:
                raise ValueError(f"cannot parse polynomial {text!r}")
            if sign is None and not first:
                raise ValueError(f"missing operator in {text!r}")
            c = Fraction(coef) if coef else Fraction(1)
            if sign == "-":
                c = -c
            k = 0 if mono is None else (int(power) if power else 1)
            acc = acc + ParamPoly([0] * k + [c])
            pos = m.end()
            first = False
        return acc


def as_poly(value) -> ParamPoly:
    if isinstance(value, ParamPoly):
        return value
    if isinstance(value, str):
        return ParamPoly.parse(value)
    return ParamPoly.const(value)


def poly_arith(a: ParamPoly, b: ParamPoly, op: str) -> ParamPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_divexact(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    return as_poly(a).divexact(as_poly(b))


def poly_eval(a: ParamPoly, at) -> RatNum:
    return as_poly(a)(at)


class Series:
    """Truncated power series in x with ``ParamPoly`` coefficients.

    ``order`` is the number of known coefficients; results of binary
    operations carry the smaller of the operand orders.
    """

    __slots__ = ("_raw", "order")

    def __init__(self, coeffs: Iterable = (), order: int = DEFAULT_ORDER):
        if order < 0:
            raise ValueError("order must be non-negative")
        raw = [as_poly(c)._c for c in coeffs][:order]
        raw.extend([()] * (order - len(raw)))
        self._raw = raw
        self.order = order

    @classmethod
    def _wrap(cls, raw: list, order: int) -> "Series":
        s = object.__new__(cls)
        s._raw = raw
        s.order = order
        return s

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls._wrap([()] * order, order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls.constant(1, order)

    @classmethod
    def constant(cls, c, order: int = DEFAULT_ORDER) -> "Series":
        return cls([c], order)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, c, k: int, order: int = DEFAULT_ORDER) -> "Series":
        return cls([0] * k + [c], order)

    @classmethod
    def geometric(cls, c, order: int = DEFAULT_ORDER) -> "Series":
        """1/(1 - c x)."""
        c = as_poly(c)
        terms, p = [], ParamPoly.const(1)
        for _ in range(order):
            terms.append(p)
            p = p * c
        return cls(terms, order)

    @property
    def coeffs(self) -> tuple:
        return tuple(ParamPoly._wrap(c) for c in self._raw)

    def __getitem__(self, n: int) -> ParamPoly:
        if n < 0 or n >= self.order:
            raise OutOfOrder(f"coefficient {n} requested from a series of order {self.order}")
        return ParamPoly._wrap(self._raw[n])

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self._raw == other._raw

    def __hash__(self) -> int:
        return hash((self.order, tuple(self._raw)))

    def agrees(self, other: "Series", order: int | None = None) -> bool:
        """Coefficientwise equality up to ``order`` (default: shared order)."""
        n = min(self.order, other.order) if order is None else order
        if n > min(self.order, other.order):
            raise OutOfOrder(f"cannot compare to order {n}")
        return self._raw[:n] == other._raw[:n]

    def is_zero(self) -> bool:
        return not any(self._raw)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise OutOfOrder(f"series of order {self.order} cannot be extended to {order}")
        return Series._wrap(self._raw[:order], order)

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction, ParamPoly)):
            return Series.constant(other, self.order)
        raise TypeError(f"cannot combine Series with {type(other).__name__}")

    def __add__(self, other) -> "Series":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return Series._wrap([K.padd(self._raw[i], other._raw[i]) for i in range(n)], n)

    __radd__ = __add__

    def __sub__(self, other) -> "Series":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return Series._wrap([K.psub(self._raw[i], other._raw[i]) for i in range(n)], n)

    def __rsub__(self, other) -> "Series":
        return self._coerce(other) - self

    def __neg__(self) -> "Series":
        return Series._wrap([K.pneg(c) for c in self._raw], self.order)

    def __mul__(self, other) -> "Series":
        if isinstance(other, (int, Fraction, ParamPoly)):
            c = as_poly(other)._c
            return Series._wrap([K.pmul(a, c) for a in self._raw], self.order)
        other = self._coerce(other)
        n = min(self.order, other.order)
        return Series._wrap(K.smul(self._raw, other._raw, n), n)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Series":
        out = Series.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def __truediv__(self, other) -> "Series":
        return series_divide(self, self._coerce(other))

    def __rtruediv__(self, other) -> "Series":
        return series_divide(self._coerce(other), self)

    def mul_x(self, k: int = 1) -> "Series":
        """x^k times the series, same order."""
        raw = [()] * k + self._raw[: self.order - k]
        return Series._wrap(raw[: self.order], self.order)

    def div_x(self, k: int = 1) -> "Series":
        """Divide by x^k; the first k coefficients must vanish.  Order drops by k."""
        if any(self._raw[:k]):
            raise AlgebraError(f"series is not divisible by x^{k}")
        return Series._wrap(self._raw[k:], max(self.order - k, 0))

    def compose(self, inner: "Series") -> "Series":
        return series_compose(self, inner)

    def revert(self) -> "Series":
        return series_revert(self)

    def sqrt(self) -> "Series":
        return series_sqrt(self)

    def derivative(self) -> "Series":
        return series_derivative(self)

    def evaluate_r(self, at) -> "Series":
        """Specialize the parameter r to a rational value."""
        v = as_rat(at)
        return Series._wrap([K.trim([K.peval(c, v)]) for c in self._raw], self.order)

    def __repr__(self) -> str:
        shown = ", ".join(str(ParamPoly._wrap(c)) for c in self._raw[:8])
        more = ", ..." if self.order > 8 else ""
        return f"Series([{shown}{more}], order={self.order})"


def series_arith(a: Series, b: Series, op: str) -> Series:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown series operation {op!r}")


def series_divide(num: Series, den: Series) -> Series:
    n = min(num.order, den.order)
    d0 = den._raw[0] if den.order else ()
    if len(d0) != 1:
        raise NonUnitConstantTerm(
            f"constant term {ParamPoly._wrap(d0)} of the denominator is not a nonzero rational"
        )
    return Series._wrap(K.sdiv(num._raw, den._raw, n), n)


def series_compose(outer: Series, inner: Series) -> Series:
    if inner.order and inner._raw[0]:
        raise NonzeroInnerConstant("inner series must have zero constant term")
    n = min(outer.order, inner.order)
    return Series._wrap(K.scompose(outer._raw, inner._raw, n), n)


def series_revert(f: Series) -> Series:
    if f.order < 2 or f._raw[0] or f._raw[1] != (1,):
        raise BadLowOrderTerms("reversion needs f(0) = 0 and [x^1] f = 1")
    return Series._wrap(K.srevert(f._raw, f.order), f.order)


def series_sqrt(a: Series) -> Series:
    if not a.order or a._raw[0] != (1,):
        raise BadConstantTerm("square root needs constant term 1")
    return Series._wrap(K.ssqrt(a._raw, a.order), a.order)


def series_derivative(a: Series) -> Series:
    n = max(a.order - 1, 0)
    return Series._wrap([K.pscale(a._raw[k + 1], k + 1) for k in range(n)], n)


def catalan(order: int = DEFAULT_ORDER) -> Series:
    """c(x) = (1 - sqrt(1 - 4x)) / (2x), to the given order."""
    root = series_sqrt(Series([1, -4], order + 1))
    return ((1 - root) * Fraction(1, 2)).div_x(1)


def poly_series(coeffs: Sequence, order: int = DEFAULT_ORDER) -> Series:
    """A polynomial in x (coefficients may be ParamPoly or rationals) as a series."""
    return Series(coeffs, order)
