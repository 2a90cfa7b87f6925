from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import assume, given, settings, strategies as st

from _strategies import nonzero_rationals, rationals, series
from pvfuchs.correlations import ToeplitzSpec, correlation_diag, hyper_solution
from pvfuchs.diffops import DiffOperator, op_apply
from pvfuchs.exactcore import MultiPoly, Poly, RationalFunction, TruncatedSeries
from pvfuchs.painleve import (HIGH, LOW, CurveError, HamiltonianData, Parametrization,
                              PVIParams, algebraic_tau_pairs, curve_residual,
                              degeneration_condition, eliminate_curve,
                              hamiltonian_residual, hyper_operator, instantiate_template,
                              ising_reduction, jimbo_coefficients, jm_polynomial,
                              param_verify, power_series, pvi_residual,
                              riccati_consistency, riccatize, same_up_to_content,
                              sigma_bundle, tau_constraint, tau_power_check, zeta_bundle)

PROP = settings(max_examples=120, deadline=None)


def _bundle(N, order=42, regime=HIGH):
    C = correlation_diag(ToeplitzSpec(N, regime == LOW, order + N // 2 + 6))
    return sigma_bundle(C, regime, N)


# sigma bundles and residuals ---------------------------------------------

@pytest.mark.parametrize("N,value", [(1, mpq(-3, 4)), (2, mpq(-5, 4))])
def test_sigma_at_zero(N, value):
    assert _bundle(N, 10).S0.coefficient(0) == value


def test_low_temperature_sigma_starts_at_t():
    S = _bundle(2, 10, LOW)
    assert S.S0.leading_exponent >= 1


def test_bad_regime():
    with pytest.raises(ValueError):
        sigma_bundle(TruncatedSeries([1], valid=5), "warm")


@pytest.mark.parametrize("N", [1, 2, 3])
def test_ising_residual_both_regimes(N):
    for regime in (HIGH, LOW):
        r = pvi_residual(_bundle(N, 42, regime), N)
        assert r.is_zero() and r.valid_order >= 40


def test_general_route_agrees_with_ising_route():
    S = _bundle(2, 42)
    r = pvi_residual(S, PVIParams.ising(2))
    assert r.is_zero() and r.valid_order >= 40


def test_zeta_bundle_from_tau():
    # tau = t^(1/4) C is the general-route tau at high temperature
    C = correlation_diag(2, order=45)
    tau = C.mul_power(Fraction(1, 4))
    params = PVIParams.ising(2)
    r = pvi_residual(zeta_bundle(tau, params), params)
    assert r.is_zero() and r.valid_order >= 40


def test_general_params_refuse_sigma_bundle():
    with pytest.raises(ValueError):
        pvi_residual(_bundle(2, 10), PVIParams(1, 2, 3, 4))


def test_k_constants():
    p = PVIParams.ising(2)
    assert p.K1 == -mpq(5, 4) and p.K2 == mpq(1, 8)


def test_wrong_n_fails():
    r = pvi_residual(_bundle(2, 20), 3)
    assert not r.is_zero()


@pytest.mark.parametrize("N", [mpq(1, 3), mpq(2, 5)])
@pytest.mark.parametrize("lam", [0, 1, -2])
def test_hypergeometric_tau(N, lam):
    tau = hyper_solution(N, lam, 46).tau
    r = pvi_residual(sigma_bundle(tau, HIGH, N), N)
    assert r.is_zero() and r.valid_order >= 40


def test_hyper_operator_matches_template(fx):
    for N in (mpq(1, 3), 2):
        assert instantiate_template(fx("Lh"), N) == hyper_operator(N)
    hs = hyper_solution(mpq(1, 3), 0, 30)
    assert op_apply(hyper_operator(mpq(1, 3)), hs.f_plus).is_zero()


# algebraic tau ------------------------------------------------------------

def test_listed_pairs():
    for N in (1, 2, 3, mpq(1, 3)):
        for a, b in algebraic_tau_pairs(N):
            rep = tau_power_check(a, b, N, 30)
            assert rep.constraint_value == 0 and rep.verdict.passed


def test_non_solution_pair():
    rep = tau_power_check(1, 1, 1, 30)
    assert rep.constraint_value == 169
    assert not rep.verdict.passed
    assert rep.verdict.witness == (0, mpq(-169, 16))


# Jimbo coefficients -------------------------------------------------------

def test_ising_reduction(fx):
    assert all(ising_reduction(fx("jimbo_ising")).values())


def test_ising_a1_values():
    J = jimbo_coefficients(3)
    a = Poly.x("alpha")
    assert J.a1_0_m1 == RationalFunction(a - 6, a * 16)
    assert J.a1_1_0 == RationalFunction((1 - a * a) * mpq(1, 8))


def test_a1_root():
    p = PVIParams(mpq(1, 3), mpq(2, 7), mpq(-1, 5), mpq(3, 4))
    J = jimbo_coefficients(p)
    v1, v2, v3, v4 = p.v
    assert J.a1_0_m1.num(v1 + v2 + v3 - v4) == 0


def test_degenerate_alpha_reported():
    J = jimbo_coefficients(2)
    out = J.evaluate("a1_0_m1", 1)
    assert isinstance(out, str) and "degenerate" in out
    assert J.evaluate("a1_0_m1", 3) == mpq(-1, 48)   # (alpha - 2N)/(16 alpha)


def test_degeneration_condition():
    assert degeneration_condition(PVIParams(0, 1, 2, 5)).satisfied
    assert degeneration_condition(PVIParams.ising(1)).satisfied
    assert degeneration_condition(PVIParams.ising(2)).v2_minus_v3 == -2
    assert not degeneration_condition(PVIParams.ising(2)).satisfied
    assert not degeneration_condition(PVIParams(mpq(1, 3), 2, 5, 7)).satisfied


# curves -------------------------------------------------------------------

def test_riccatize_l22(fx):
    assert same_up_to_content(riccatize(fx("L22"), 2), fx("C22S"))


def test_riccatize_l11_shape(fx):
    P = riccatize(fx("L11"), 1)
    assert P.degree("S1") == 1 and P.degree("S0") == 2
    assert "S2" not in P.vars or P.degree("S2") == 0


def test_riccatize_first_order():
    t = Poly.x()
    P = riccatize(DiffOperator([RationalFunction(Poly.const(-1), t), 1]))
    assert all(v in ("S0", "t") for v in P.vars if P.degree(v) > 0)


def test_riccatize_order_mismatch(fx):
    with pytest.raises(ValueError):
        riccatize(fx("L22"), 3)


def test_eliminate_n2(fx):
    curve = eliminate_curve(riccatize(fx("L22"), 2), 2)
    assert same_up_to_content(curve, fx("nappe22")) and not curve.flagged
    assert curve_residual(curve, _bundle(2)).is_zero()


def test_eliminate_n3(fx):
    curve = eliminate_curve(riccatize(fx("L33"), 3), 3)
    assert same_up_to_content(curve, fx("ratioN3"))
    r = curve_residual(curve, _bundle(3))
    assert r.is_zero() and r.valid_order >= 40


def test_eliminate_against_itself():
    with pytest.raises(CurveError, match="zero"):
        eliminate_curve(jm_polynomial(2), 2)


def test_curves_are_distinct(fx):
    assert not curve_residual(fx("nappe22"), _bundle(3, 20)).is_zero()


def test_param_on_curve(fx):
    param = Parametrization.from_components(fx("param"))
    assert param_verify(fx("nappe22"), param)
    comp = dict(fx("param"))
    comp["A0"] = comp["A0"] + 1
    assert not param_verify(fx("nappe22"), Parametrization.from_components(comp))


def test_constant_parametrization():
    S0 = MultiPoly.var("S0")
    one = MultiPoly.const(1)
    c = MultiPoly.const(mpq(2, 3))
    assert param_verify(S0 - c, Parametrization(c, one, MultiPoly.const(5), one))


def test_riccati_consistency(fx):
    param = Parametrization.from_components(fx("param"))
    ric = fx("Ricatti")
    assert riccati_consistency(param, ric)
    flipped = dict(ric, beta2=-ric["beta2"])
    assert not riccati_consistency(param, flipped)


def test_riccati_trivial_when_u_free(fx):
    t = MultiPoly.var("t")
    one = MultiPoly.const(1)
    param = Parametrization(t * t, one, t * 2, one)
    assert riccati_consistency(param, fx("Ricatti"))


# Hamiltonian --------------------------------------------------------------

def test_hamiltonian_n2(fx):
    data = HamiltonianData.from_fixture(fx("hamiltonian_N2"))
    assert data.n == HamiltonianData.ising(2, None, None).n
    for r in hamiltonian_residual(data, 30):
        assert r.is_zero() and r.valid_order >= 30
    bad = hamiltonian_residual(data.negated_p(), 30)
    assert not all(r.is_zero() for r in bad)


def test_hamiltonian_constant_term_vanishes():
    H = HamiltonianData((mpq(1, 2), 3, mpq(1, 2), 7), None, None).H()
    assert H.subs({"p": 0}).is_zero()


# properties ---------------------------------------------------------------

@PROP
@given(series(min_len=4, unit=True), st.sampled_from([HIGH, LOW]))
def test_derivative_coherence(C, regime):
    S = sigma_bundle(C, regime)
    for k in range(3):
        assert S[k + 1].agrees_with(S[k].derivative())


@PROP
@given(rationals(), rationals(), rationals(), rationals())
def test_jimbo_symmetry(v1, v2, v3, v4):
    J = jimbo_coefficients(PVIParams(v1, v2, v3, v4))
    for d in J.symmetry_defects().values():
        assert d.num.is_zero()


@PROP
@given(rationals(-6, 6, 8), rationals(-6, 6, 8), nonzero_rationals())
def test_tau_constraint_iff_residual(a, b, N):
    rep = tau_power_check(a, b, N, 12)
    assert rep.residual.is_zero() == (rep.constraint_value == 0)
    if rep.constraint_value:
        assert rep.residual.terms()[0] == (0, -rep.constraint_value / 16)


@PROP
@given(nonzero_rationals())
def test_listed_families_solve(N):
    assume(N not in (1, -1))
    for a, b in algebraic_tau_pairs(N):
        assert tau_constraint(a, b, N) == 0
        assert tau_power_check(a, b, N, 10).verdict.passed


@PROP
@given(st.integers(1, 6), st.integers(1, 4))
def test_power_series_is_exact_product(a, b):
    s = power_series(a, b, 12)
    ref = TruncatedSeries.exact([1, -1]) ** b
    assert s.agrees_with(ref.mul_power(a))
