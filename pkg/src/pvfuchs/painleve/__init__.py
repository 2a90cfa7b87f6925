"""Sigma-form Painleve VI checks: residuals, local data, curves, Hamiltonian."""
from .curves import (CurveError, CurveRelation, Parametrization, curve_residual,
                     eliminate_curve, param_verify, riccati_consistency,
                     riccati_residual, riccatize, same_up_to_content,
                     series_substitute, t_primitive, total_derivative)
from .hamiltonian import HamiltonianData, hamiltonian_residual
from .hyper import hyper_operator, instantiate_template
from .jimbo import (DEGENERATE, Degeneration, JimboData, degeneration_condition,
                    ising_reduction, jimbo_coefficients)
from .sigma import (HIGH, LOW, PVIParams, SigmaBundle, TauPowerReport, Verdict,
                    algebraic_tau_pairs, general_residual, jm_polynomial,
                    jm_residual, power_series, pvi_residual, series_verdict,
                    sigma_bundle, tau_constraint, tau_power_check, zeta_bundle)

__all__ = [
    "CurveError", "CurveRelation", "DEGENERATE", "Degeneration", "HIGH",
    "HamiltonianData", "JimboData", "LOW", "PVIParams", "Parametrization",
    "SigmaBundle", "TauPowerReport", "Verdict", "algebraic_tau_pairs",
    "curve_residual", "degeneration_condition", "eliminate_curve",
    "general_residual", "hamiltonian_residual", "hyper_operator",
    "instantiate_template", "ising_reduction", "jimbo_coefficients",
    "jm_polynomial", "jm_residual", "param_verify", "power_series",
    "pvi_residual", "riccati_consistency", "riccati_residual", "riccatize",
    "same_up_to_content", "series_substitute", "series_verdict",
    "sigma_bundle", "t_primitive", "tau_constraint", "tau_power_check",
    "total_derivative", "zeta_bundle",
]
