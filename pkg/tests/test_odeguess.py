import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from pvfuchs.correlations import correlation_diag, elliptic_series
from pvfuchs.diffops import DiffOperator, indicial_exponents, op_apply, op_change_variable
from pvfuchs.exactcore import Poly, TruncatedSeries, change_variable, pfq_series
from pvfuchs.odeguess import (AmbiguousGuess, GuessError, GuessSpec, InsufficientSeries,
                              guess_ode, minimal_ode)


def _diag(N, spec, extra=25):
    return correlation_diag(N, order=spec.unknowns + spec.safety_margin + extra + N)


def test_geometric_series():
    y = TruncatedSeries([1] * 40, valid=40)
    L = guess_ode(y, GuessSpec.free(1, 1))
    t = Poly.x()
    assert L.equivalent_up_to_scalar(DiffOperator([-1, 1 - t]))
    # canonical sign: positive leading coefficient on the top polynomial
    assert L.cleared()[-1].c[-1] > 0


def test_constant_gives_d():
    y = TruncatedSeries([1], valid=40)
    assert minimal_ode(y, 2, 2) == DiffOperator.D()


def test_c22_minimal_order_three():
    y = correlation_diag(2, order=70)
    L = minimal_ode(y, 3, 6)
    assert L.order == 3
    for order in (1, 2):
        for deg in range(7):
            try:
                assert guess_ode(y, GuessSpec.free(order, deg)) is None
            except AmbiguousGuess:
                pytest.fail("spurious ambiguity")


def test_e_recovers_le(fx):
    y = elliptic_series("E", 120)
    L = minimal_ode(y, 2, 6)
    assert L.equivalent_up_to_scalar(fx("LE"))


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_gform_recovers_fixture(fx, N):
    spec = GuessSpec.gform(N + 1)
    L = guess_ode(_diag(N, spec), spec, extra=20)
    assert L == fx(f"L{N}{N}").canonical()
    lead = L.cleared()[-1]
    t = Poly.x()
    assert lead.monic() == t ** (N + 1) * (t - 1) ** N


def test_guessed_l11_exponents():
    spec = GuessSpec.gform(2)
    L = guess_ode(_diag(1, spec), spec)
    assert indicial_exponents(L, 1).exponents == [0, 1]


def test_insufficient_series():
    spec = GuessSpec.gform(3)
    y = correlation_diag(2, order=8)
    with pytest.raises(InsufficientSeries) as info:
        guess_ode(y, spec)
    assert info.value.required == spec.unknowns + spec.safety_margin


def test_ambiguous_when_overparametrized():
    y = TruncatedSeries([1], valid=60)
    with pytest.raises(AmbiguousGuess):
        guess_ode(y, GuessSpec.free(2, 1))


def test_no_operator_within_bounds():
    y = correlation_diag(3, order=40)
    with pytest.raises(GuessError, match="no operator"):
        minimal_ode(y, 2, 2)


def test_spec_validation():
    with pytest.raises(ValueError):
        GuessSpec(0)
    with pytest.raises(ValueError):
        GuessSpec(1, [(Poly.const(1), 0)])


def test_square_root_route_matches(fx):
    # C(1,1) as a series in x with t = x^2 is an ordinary power series
    y = change_variable(correlation_diag(1, order=40), "power", 2, new_var="x")
    assert y.ram == 1
    L = minimal_ode(y, 2, 5)
    M = op_change_variable(fx("L11"), "power", 2, new_var="x")
    assert L.equivalent_up_to_scalar(M)


@settings(max_examples=120, deadline=None)
@given(st.integers(-4, 4).filter(bool), st.integers(1, 4), st.integers(-3, 3))
def test_binomial_series_is_first_order(p, q, c):
    # (1 - t)^(p/q) * (1 + c t) satisfies a first-order equation
    y = pfq_series([mpq(-p, q)], [], "t", 40) * TruncatedSeries.exact([1, c])
    L = minimal_ode(y, 1, 3)
    assert L.order == 1
    assert op_apply(L, pfq_series([mpq(-p, q)], [], "t", 80)
                    * TruncatedSeries.exact([1, c])).is_zero()
