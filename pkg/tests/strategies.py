from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from rcbpoly.exactalg import ParamPoly, Series

rats = st.one_of(
    st.integers(-6, 6),
    st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4)),
)
raw_polys = st.lists(rats, max_size=4)
polys = raw_polys.map(ParamPoly)
nonzero_polys = polys.filter(bool)


def series(order: int, c0=None):
    if c0 is None:
        return st.lists(polys, min_size=order, max_size=order).map(lambda cs: Series(cs, order))
    return st.lists(polys, min_size=order - 1, max_size=order - 1).map(
        lambda cs: Series([c0] + cs, order)
    )


def x_series(order: int):
    """f(0) = 0, [x^1] f = 1."""
    return st.lists(polys, min_size=order - 2, max_size=order - 2).map(
        lambda cs: Series([0, 1] + cs, order)
    )
