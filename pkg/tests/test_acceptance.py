"""End-to-end acceptance checks, one test per criterion.

The terminal summary (see conftest.py) prints one PASS/FAIL line per
criterion.
"""
import random
import time
from fractions import Fraction

from gmpy2 import mpq

from pvfuchs.catalog import fixture, order_formula
from pvfuchs.correlations import (ToeplitzSpec, boundary_coefficient, boundary_gap,
                                  correlation_diag, ek_evaluate)
from pvfuchs.diffops import (fuchsian_analysis, indicial_exponents, intertwiner_search,
                             lclm, op_apply, symmetric_power)
from pvfuchs.exactcore import change_variable
from pvfuchs.odeguess import GuessSpec, guess_ode
from pvfuchs.painleve import (HIGH, LOW, HamiltonianData, Parametrization, algebraic_tau_pairs,
                              curve_residual, eliminate_curve, hamiltonian_residual,
                              ising_reduction, jimbo_coefficients, param_verify,
                              pvi_residual, riccati_consistency, riccatize,
                              same_up_to_content, sigma_bundle, tau_power_check)


def fx(name):
    return fixture(name).value


def rho(N, point):
    """Exponent laws of L_NN at t = 0, 1, infinity for n = 1..N+1."""
    out = []
    for n in range(1, N + 2):
        s = (-1) ** n
        if point == 1:
            r = Fraction((n - 1) ** 2)
        elif point == 0:
            r = Fraction(-1, 8) + Fraction(3 * N, 4) + Fraction((n + 1) * (n + 2), 4) \
                - Fraction((N + 3) * n, 2) + Fraction(s * (n + 1), 4) \
                - Fraction(s * (2 * N + 5), 8)
        else:
            r = Fraction(5, 8) + Fraction(3 * N, 4) + Fraction(n * n, 4) \
                - Fraction((2 * N + 3) * n, 4) - Fraction(s * n, 4) \
                + Fraction(s * (2 * N + 3), 8)
        out.append(r)
    return sorted(out)


def bundle(N, order=42, regime=HIGH):
    C = correlation_diag(ToeplitzSpec(N, regime == LOW, order + N // 2 + 6))
    return sigma_bundle(C, regime, N)


def test_criterion_01_operator_recovery():
    t0 = time.perf_counter()
    for N in range(1, 5):
        spec = GuessSpec.gform(N + 1)
        y = correlation_diag(N, order=spec.unknowns + spec.safety_margin + 25 + N)
        L = guess_ode(y, spec, extra=20)
        assert L is not None and L == fx(f"L{N}{N}").canonical()
    assert time.perf_counter() - t0 < 300
    for N in (5, 6):
        r = op_apply(fx(f"L{N}{N}"), correlation_diag(N, order=48))
        assert r.is_zero() and r.valid_order >= 40


def test_criterion_02_exponent_laws():
    for N in range(1, 7):
        L = fx(f"L{N}{N}")
        for point in (0, 1, "infinity"):
            got = sorted(indicial_exponents(L, point).exponents)
            assert got == rho(N, point), (N, point)
        assert sorted(indicial_exponents(L, 1).exponents) == \
            [(n - 1) ** 2 for n in range(1, N + 2)]


def test_criterion_03_no_apparent_singularities():
    for N in range(1, 7):
        rep = fuchsian_analysis(fx(f"L{N}{N}"))
        assert [str(p) for p in rep.singular_points] == ["0", "1", "infinity"]
        assert rep.all_regular and rep.apparent_points == []


def test_criterion_04_symmetric_square():
    L11, L22, A2, R2 = fx("L11"), fx("L22"), fx("A2"), fx("R2")
    S = symmetric_power(L11, 2)
    assert (A2 * L22 - S * R2).is_zero()
    A, R = intertwiner_search(L22, S, 2, 6)
    c = A.leading / A2.leading
    assert c.num.degree == 0 and c.den.degree == 0
    assert A == A2.left_scale(c) and R == R2.left_scale(c)


def test_criterion_05_sigma_residuals():
    t0 = time.perf_counter()
    for N in range(1, 7):
        for regime in (HIGH, LOW):
            r = pvi_residual(bundle(N, 42, regime), N)
            assert r.is_zero() and r.valid_order >= 40, (N, regime)
    assert time.perf_counter() - t0 < 120


def test_criterion_06_elliptic_closed_forms():
    order = 56
    for name, N in (("C22", 2), ("C33", 3)):
        s = ek_evaluate(fx(name), order)
        ref = change_variable(correlation_diag(N, order=order // 4 + 2), "power", 4,
                              new_var="s")
        assert s.agrees_with(ref) and min(s.valid_order, ref.valid_order) >= 50
        assert s.leading_exponent >= 0
    # C(1,3) = P1 + P3, each annihilated by its operator
    p1 = ek_evaluate(fx("C13_P1"), order)
    p3 = ek_evaluate(fx("C13_P3"), order)
    for L, p in ((fx("L1"), p1), (fx("L3"), p3)):
        r = op_apply(L, p)
        assert r.is_zero() and r.valid_order >= 50
    c13 = ek_evaluate(fx("C13"), order)
    assert c13.agrees_with(p1 + p3) and c13.valid_order >= 50
    # lattice-path leading term: 4 shortest paths of weight (s/2)^4
    assert c13.leading_exponent == 4 and c13.coefficient(4) == mpq(1, 4)
    q0 = ek_evaluate(fx("C01_l0"), order)
    q1 = ek_evaluate(fx("C01_l1"), order)
    for L, q in ((fx("l0"), q0), (fx("l1"), q1)):
        r = op_apply(L, q)
        assert r.is_zero() and r.valid_order >= 50
    c01 = ek_evaluate(fx("C01"), order)
    assert c01.agrees_with(q0 + q1) and c01.valid_order >= 50
    # nearest neighbour: one bond, weight s/2
    assert c01.leading_exponent == 1 and c01.coefficient(1) == mpq(1, 2)


def test_criterion_07_riccati_and_curves():
    assert same_up_to_content(riccatize(fx("L22"), 2), fx("C22S"))
    for N, name in ((2, "nappe22"), (3, "ratioN3")):
        curve = eliminate_curve(riccatize(fx(f"L{N}{N}"), N), N)
        assert same_up_to_content(curve, fx(name))
        r = curve_residual(curve, bundle(N))
        assert r.is_zero() and r.valid_order >= 40


def test_criterion_08_parametrization_and_riccati():
    param = Parametrization.from_components(fx("param"))
    assert param_verify(fx("nappe22"), param)
    assert riccati_consistency(param, fx("Ricatti"))


def test_criterion_09_boundary_gap():
    for N in range(1, 5):
        g = boundary_gap(N)
        assert g["leading_exponent"] == Fraction(3 * N, 2) + 2
        assert g["leading_coefficient"] == boundary_coefficient(N)
    assert boundary_gap(1)["leading_coefficient"] == mpq(1, 1024)


def test_criterion_10_jimbo_reduction():
    assert all(ising_reduction(fx("jimbo_ising")).values())
    for N in (1, 2, 3):
        for d in jimbo_coefficients(N).symmetry_defects().values():
            assert d.num.is_zero()


def test_criterion_11_algebraic_tau():
    for N in (1, 2, 3, mpq(1, 3), mpq(5, 2)):
        for a, b in algebraic_tau_pairs(N):
            rep = tau_power_check(a, b, N, 32)
            assert rep.constraint_value == 0
            assert rep.verdict.passed and rep.residual.valid_order >= 30
    rng = random.Random(20261016)
    while True:
        a, b = (mpq(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(2))
        N = mpq(rng.randint(1, 9), rng.randint(1, 4))
        rep = tau_power_check(a, b, N, 32)
        if rep.constraint_value != 0:
            break
    assert not rep.residual.is_zero()


def test_criterion_12_hamiltonian():
    data = HamiltonianData.from_fixture(fx("hamiltonian_N2"))
    for r in hamiltonian_residual(data, 30):
        assert r.is_zero() and r.valid_order >= 30


def test_criterion_13_order_formula():
    for N in range(1, 7):
        assert order_formula(N, N) == N + 1 == fx(f"L{N}{N}").order
    assert order_formula(1, 2) == 5 == fx("L12").order
    assert order_formula(0, 1) == 3 == lclm(fx("l0"), fx("l1")).order


def _count_cases(test):
    inner = test.hypothesis.inner_test
    calls = []

    def counted(*args, **kwargs):
        calls.append(1)
        return inner(*args, **kwargs)

    test.hypothesis.inner_test = counted
    try:
        test()
    finally:
        test.hypothesis.inner_test = inner
    return len(calls)


def test_criterion_14_property_suites():
    import test_diffops
    import test_exactcore
    suites = [test_exactcore.test_leibniz, test_exactcore.test_reciprocal,
              test_exactcore.test_nullspace_exactness,
              test_diffops.test_sym_annihilates_products, test_diffops.test_lclm_divisible,
              test_diffops.test_fuchs_relation_on_conjugated_fixtures]
    for t in suites:
        n = _count_cases(t)
        assert n >= 100, (t.__name__, n)
