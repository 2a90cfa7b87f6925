"""From the linear ODE for C(2,2) to a rational curve in (sigma, sigma')."""
from pvfuchs.catalog import fixture
from pvfuchs.correlations import correlation_diag
from pvfuchs.painleve import (HIGH, Parametrization, curve_residual, eliminate_curve,
                              param_verify, riccati_consistency, riccatize,
                              same_up_to_content, sigma_bundle)

L22 = fixture("L22").value
rel = riccatize(L22, 2)
print("generalized Riccati relation:\n ", rel)
print("matches catalog:", same_up_to_content(rel, fixture("C22S").value))

curve = eliminate_curve(rel, 2)
print(f"\ncurve in S0, S1 ({len(curve.discarded)} spurious factor(s) dropped):")
print(" ", curve.polynomial)
print("matches catalog:", same_up_to_content(curve, fixture("nappe22").value))

S = sigma_bundle(correlation_diag(2, order=47), HIGH, 2)
print("on the C(2,2) series:", repr(curve_residual(curve, S)))

param = Parametrization.from_components(fixture("param").value)
print("\nparametrization lies on the curve:", param_verify(curve, param))
print("Riccati equation for u is consistent:",
      riccati_consistency(param, fixture("Ricatti").value))
