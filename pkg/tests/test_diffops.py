from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from _strategies import order1, ordinary_order2, rationals
from pvfuchs.catalog import fixture
from pvfuchs.correlations import correlation_diag, elliptic_series
from pvfuchs.diffops import (DiffOperator, fuchsian_analysis, indicial_exponents,
                             intertwiner_search, lclm, op_apply, op_change_variable,
                             op_multiply, symmetric_power, taylor_solution)
from pvfuchs.exactcore import Poly, RationalFunction, TruncatedSeries

PROP = settings(max_examples=120, deadline=None)
D = DiffOperator.D()
T = DiffOperator.scalar(Poly.x())


def test_commutator():
    assert D * T - T * D == DiffOperator([1])


def test_constant_coefficients_commute():
    one = DiffOperator([1])
    assert (D + one) * (D - one) == D * D - one


def test_apply_derivative():
    y = TruncatedSeries.exact([0, 0, 1])
    assert op_apply(D, y) == TruncatedSeries.exact([0, 2])


def test_sympow_trivial_cases():
    L = D * D
    assert symmetric_power(L, 1) == L
    assert symmetric_power(L, 2) == D * D * D
    with pytest.raises(ValueError):
        symmetric_power(D, 2)


def test_l11_annihilates_c11(fx):
    y = correlation_diag(1, order=30)
    assert op_apply(fx("L11"), y).is_zero()


def test_le_annihilates_e():
    L = fixture("LE").value
    r = op_apply(L, elliptic_series("E", 60))
    assert r.is_zero() and r.valid_order >= 40


def test_exponents_l11(fx):
    L = fx("L11")
    assert indicial_exponents(L, 0).exponents == [mpq(-1, 2), mpq(1, 2)]
    assert indicial_exponents(L, 1).exponents == [0, 1]
    assert indicial_exponents(L, 1).apparent is False


def test_apparent_singularity_detected():
    t = Poly.x()
    L = DiffOperator([RationalFunction(Poly.const(-1), t - 2), 1])
    rep = fuchsian_analysis(L)
    assert rep.apparent_points == [2]


def test_ordinary_point_exponents(fx):
    rep = indicial_exponents(fx("L22"), mpq(1, 2))
    assert not rep.singular and rep.exponents == [0, 1, 2]


def test_l12_singular_points_in_s(fx):
    rep = fuchsian_analysis(fx("L12"))
    assert rep.all_regular
    pts = [str(p) for p in rep.singular_points]
    assert set(pts) <= {"0", "1", "-1", "s**2 + 1", "infinity"}


def test_change_variable_power_round_trip():
    # D_t on y(t) = t becomes (1/(4 s^3)) D_s on s^4
    L = op_change_variable(D, "power", 4, new_var="s")
    y = TruncatedSeries.exact([0, 0, 0, 0, 1], var="s")
    assert op_apply(L, y) == TruncatedSeries.constant(1, var="s")


def test_intertwiner_l11_le_conjugated(fx):
    res = intertwiner_search(fx("l1_conjugated"), fx("LE"), 1, 4)
    assert res is not None
    A, R = res
    assert (A * fx("l1_conjugated") - fx("LE") * R).is_zero()


def test_lclm_constant_coefficients():
    one = DiffOperator([1])
    M = lclm(D - one, D + one)
    assert M == D * D - one


def test_divmod_right_identity(fx):
    L = fx("L22")
    q, r = L.divmod_right(D + DiffOperator([1]))
    assert q * (D + DiffOperator([1])) + r == L and r.order == 0


def test_serialization_round_trip(fx):
    L = fx("L33")
    assert DiffOperator.from_dict(L.to_dict()) == L
    assert DiffOperator.from_cleared_dict(L.to_cleared_dict()).equivalent_up_to_scalar(L)


# properties ---------------------------------------------------------------

@PROP
@given(ordinary_order2(), st.integers(2, 3))
def test_sym_annihilates_products(L, n):
    y1 = taylor_solution(L, [1, 0], 18)
    y2 = taylor_solution(L, [0, 1], 18)
    assert op_apply(L, y1).is_zero() and op_apply(L, y2).is_zero()
    S = symmetric_power(L, n)
    assert S.order == n + 1
    for a in range(n + 1):
        prod = TruncatedSeries.constant(1)
        for _ in range(a):
            prod = prod * y1
        for _ in range(n - a):
            prod = prod * y2
        assert op_apply(S, prod).is_zero()


@PROP
@given(order1(), order1())
def test_lclm_divisible(A, B):
    M = lclm(A, B)
    for X in (A, B):
        _, r = M.divmod_right(X)
        assert r.is_zero()
    assert M.order <= A.order + B.order


@PROP
@given(st.integers(1, 6), rationals(-6, 6, 6), rationals(-6, 6, 6))
def test_fuchs_relation_on_conjugated_fixtures(N, a, b):
    L = fixture(f"L{N}{N}").value
    t = Poly.x()
    r = RationalFunction(Poly.const(a), t) + RationalFunction(Poly.const(b), t - 1)
    M = op_change_variable(L, "conjugate", r)
    n = M.order
    ex = {p: indicial_exponents(M, p, check_apparent=False).exponents
          for p in (0, 1, "infinity")}
    assert sum(sum(e) for e in ex.values()) == Fraction(n * (n - 1), 2)
    base = indicial_exponents(L, 0, check_apparent=False).exponents
    assert sorted(ex[0]) == sorted(e - a for e in base)


@PROP
@given(ordinary_order2(), ordinary_order2())
def test_multiply_matches_composition(A, B):
    y = taylor_solution(DiffOperator([1, 0, 0, 0, 1]), [1, 2, 3, 4], 20)
    assert op_apply(op_multiply(A, B), y).agrees_with(op_apply(A, op_apply(B, y)))
