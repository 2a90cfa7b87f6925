from fractions import Fraction

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from _strategies import matrices, nonzero_rationals, polys, rationals, series
from pvfuchs.exactcore import (EliminationError, MultiPoly, Poly, RationalFunction,
                               SeriesError, TruncatedSeries, as_rational, binomial,
                               change_variable, format_rational, parse_rational,
                               pfq_series, pfq_terminating, pochhammer, poly_gcd,
                               rational_nullspace, rational_rank, resultant_eliminate,
                               series_derivative, series_product, series_reciprocal)

PROP = settings(max_examples=120, deadline=None)


def test_rational_parsing_and_formatting():
    assert parse_rational("-3/4") == mpq(-3, 4)
    assert format_rational(mpq(6, 8)) == "3/4"
    assert format_rational(mpq(5)) == "5"
    assert as_rational(sympy.Rational(2, 3)) == mpq(2, 3)
    assert as_rational(sympy.Integer(7)) == 7
    assert as_rational(Fraction(1, 9)) == mpq(1, 9)


def test_pochhammer_and_binomial():
    assert pochhammer(mpq(1, 2), 3) == mpq(15, 8)
    assert binomial(mpq(1, 2), 2) == mpq(-1, 8)
    assert binomial(5, 2) == 10


def test_series_basic_arithmetic():
    a = TruncatedSeries([1, 1], valid=5)
    b = a.reciprocal()
    assert [b.coefficient(k) for k in range(5)] == [1, -1, 1, -1, 1]
    assert b.valid_order == 5
    with pytest.raises(SeriesError):
        b.coefficient(5)
    assert b.coefficient(-2) == 0


def test_series_ramified_sum_and_product():
    half = TruncatedSeries.monomial(Fraction(1, 2))
    s = half * half
    assert s.terms() == [(Fraction(1), 1)]
    assert s.ram == 1
    mixed = half + TruncatedSeries.constant(1)
    assert mixed.ram == 2


def test_exact_series_division_needs_order():
    one = TruncatedSeries.constant(1)
    d = TruncatedSeries.exact([1, -1])
    with pytest.raises(SeriesError):
        one / d


def test_zero_series_not_invertible():
    with pytest.raises(SeriesError):
        TruncatedSeries([], valid=4).reciprocal()


def test_pfq_series_matches_closed_form():
    # 1F0(a;;t) = (1 - t)^(-a)
    s = pfq_series([mpq(1, 2)], [], "t", 8)
    for k in range(8):
        assert s.coefficient(k) == binomial(mpq(-1, 2), k) * (-1) ** k


def test_change_variable_power_and_inverse():
    s = TruncatedSeries([1, 2, 3], valid=3)
    p = change_variable(s, "power", 4, new_var="s")
    assert p.var == "s" and p.valid_order == 12 and p.coefficient(4) == 2
    inv = change_variable(TruncatedSeries.exact([1, 2]), "inverse")
    assert inv.terms() == [(Fraction(-1), 2), (Fraction(0), 1)]
    with pytest.raises(SeriesError):
        change_variable(s, "inverse")


def test_series_serialization_round_trip():
    s = TruncatedSeries([1, mpq(1, 3)], valid=5, base=1, ram=2)
    assert TruncatedSeries.from_dict(s.to_dict()) == s


def test_multipoly_basics():
    x, y = MultiPoly.symbols("S0", "t")
    p = (x + y) ** 2
    assert p.degree("S0") == 2
    assert p.diff("S0") == (x + y) * 2
    assert p.subs({"t": 1}) == (x + 1) ** 2
    assert p.exact_div(x + y) == x + y
    assert MultiPoly.from_dict(p.to_dict()) == p


def test_resultant_of_linear_pair():
    x, y = MultiPoly.symbols("S1", "S0")
    r = resultant_eliminate(x - y, x + y - 2, "S1")
    assert r.primitive() == (y - 1).primitive()


def test_resultant_nothing_to_eliminate():
    x, y = MultiPoly.symbols("S1", "S0")
    with pytest.raises(EliminationError, match="nothing to eliminate"):
        resultant_eliminate(y, x, "S1")


def test_rational_function_normalization():
    t = Poly.x()
    f = RationalFunction(t * t - 1, (t - 1) * 2)
    assert f.den == Poly.const(1) and f.num == (t + 1) * mpq(1, 2)
    assert f(3) == 2
    with pytest.raises(ZeroDivisionError):
        RationalFunction(t, t - 2)(2)


def test_nullspace_simple():
    ker = rational_nullspace([[1, 2, 3], [2, 4, 6]], 3)
    assert len(ker) == 2
    assert rational_rank([[1, 2], [2, 4]]) == 1
    assert rational_nullspace([[1, 0], [0, 1]], 2) == []


# properties --------------------------------------------------------------

@PROP
@given(series(), series())
def test_leibniz(a, b):
    lhs = series_derivative(series_product(a, b))
    rhs = a.derivative() * b + a * b.derivative()
    assert lhs.agrees_with(rhs)


@PROP
@given(series(unit=True))
def test_reciprocal(a):
    inv = series_reciprocal(a)
    prod = a * inv
    assert (prod - 1).is_zero()
    assert prod.valid_order == a.valid_order - a.leading_exponent


@PROP
@given(matrices())
def test_nullspace_exactness(mc):
    rows, ncols = mc
    ker = rational_nullspace(rows, ncols)
    for v in ker:
        assert len(v) == ncols
        for r in rows:
            assert sum(mpq(a) * b for a, b in zip(r, v)) == 0
    assert len(ker) == ncols - rational_rank(rows)
    if ker:
        assert rational_rank(ker) == len(ker)


@PROP
@given(polys(4), polys(3, nonzero=True))
def test_poly_division_identity(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@PROP
@given(polys(3, nonzero=True), polys(3, nonzero=True), polys(2, nonzero=True))
def test_gcd_divides(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert ((a * c) % g).is_zero() and ((b * c) % g).is_zero()
    assert (g % c.monic()).is_zero()


@PROP
@given(st.integers(0, 8), rationals(maxden=5), rationals(1, 20, 5))
def test_chu_vandermonde(n, b, c):
    if any(c + k == 0 for k in range(n)):
        return
    lhs = pfq_terminating([-n, b], [c], 1)
    assert lhs == pochhammer(c - b, n) / pochhammer(c, n)


@PROP
@given(st.lists(st.integers(-3, 3), min_size=2, max_size=4),
       st.lists(st.integers(-3, 3), min_size=2, max_size=4))
def test_resultant_matches_sympy(pc, qc):
    if pc[-1] == 0:
        pc[-1] = 1
    if qc[-1] == 0:
        qc[-1] = 2
    x, t = sympy.symbols("S0 t")
    pe = sum(c * (x ** i) * (t + i) for i, c in enumerate(pc))
    qe = sum(c * (x ** i) * (t - i) for i, c in enumerate(qc))
    if sympy.degree(pe, x) < 1 or sympy.degree(qe, x) < 1:
        return
    P = MultiPoly.from_sympy(pe, ["S0", "t"])
    Q = MultiPoly.from_sympy(qe, ["S0", "t"])
    ours = resultant_eliminate(P, Q, "S0")
    ref = sympy.expand(sympy.resultant(pe, qe, x))
    if ref == 0:
        assert ours.is_zero()
        return
    # argument order conventions differ by (-1)^(mn)
    ref = MultiPoly.from_sympy(ref, ["t"])
    assert ours == ref or ours == -ref


@PROP
@given(nonzero_rationals(), st.integers(1, 6))
def test_reciprocal_of_binomial(a, n):
    s = TruncatedSeries([1, a], valid=n + 1)
    inv = s.reciprocal()
    for k in range(n + 1):
        assert inv.coefficient(k) == (-a) ** k
