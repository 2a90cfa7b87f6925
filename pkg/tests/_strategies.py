from gmpy2 import mpq
from hypothesis import strategies as st

from pvfuchs.diffops import DiffOperator
from pvfuchs.exactcore import Poly, TruncatedSeries

small_ints = st.integers(-9, 9)
nonzero_ints = small_ints.filter(bool)


@st.composite
def rationals(draw, lo=-20, hi=20, maxden=12):
    return mpq(draw(st.integers(lo, hi)), draw(st.integers(1, maxden)))


@st.composite
def nonzero_rationals(draw):
    return mpq(draw(nonzero_ints), draw(st.integers(1, 9)))


@st.composite
def series(draw, min_len=1, max_len=12, var="t", unit=False):
    cs = draw(st.lists(rationals(), min_size=min_len, max_size=max_len))
    if unit:
        cs[0] = draw(nonzero_rationals())
    base = 0 if unit else draw(st.integers(-3, 3))
    valid = base + len(cs) + draw(st.integers(0, 4))
    return TruncatedSeries(cs, valid=valid, base=base, var=var)


@st.composite
def polys(draw, max_deg=3, var="t", nonzero=False):
    cs = draw(st.lists(small_ints, min_size=1, max_size=max_deg + 1))
    if nonzero and not any(cs):
        cs[-1] = 1
    return Poly(cs, var)


@st.composite
def ordinary_order2(draw):
    """D^2 + a D + b with polynomial a, b: t = 0 is ordinary."""
    a = draw(polys(2))
    b = draw(polys(2))
    return DiffOperator([b, a, 1])


@st.composite
def order1(draw):
    return DiffOperator([draw(polys(2)), draw(polys(1, nonzero=True))])


@st.composite
def matrices(draw, max_rows=5, max_cols=6):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c),
                         min_size=r, max_size=r))
    return rows, c
