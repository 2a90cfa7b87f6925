"""Several tau functions that all solve the Ising sigma form.

The residual is printed with its valid order; "0 + O(t^k)" means the
identity holds exactly through t^(k-1).
"""
from gmpy2 import mpq

from pvfuchs.correlations import ToeplitzSpec, correlation_diag, hyper_solution
from pvfuchs.painleve import (HIGH, LOW, algebraic_tau_pairs, pvi_residual, sigma_bundle,
                              tau_power_check)


def show(label, residual):
    print(f"{label:<36} {residual!r}")


# diagonal correlations, both temperature regimes
for N in range(1, 5):
    for regime in (HIGH, LOW):
        C = correlation_diag(ToeplitzSpec(N, regime == LOW, 46))
        show(f"C({N},{N}) {regime}-T", pvi_residual(sigma_bundle(C, regime, N), N))

# hypergeometric solutions at non-integer N
N = mpq(1, 3)
for lam in (0, 1, -2):
    tau = hyper_solution(N, lam, 44).tau
    show(f"f+ + {lam} f-, N = 1/3", pvi_residual(sigma_bundle(tau, HIGH, N), N))

# algebraic tau = t^a (1-t)^b; the residual is -constraint/16
for a, b in algebraic_tau_pairs(3):
    rep = tau_power_check(a, b, 3, 20)
    show(f"t^({a}) (1-t)^({b})", rep.residual)
rep = tau_power_check(1, 1, 1, 20)
print(f"\nnon-solution (1, 1) at N = 1: constraint {rep.constraint_value}, "
      f"residual {rep.residual!r}")
