"""Quadrature against the standard Gaussian measure.

Gauss-Hermite rules, truncated trapezoidal rules on [-T, T], worst-case-error
estimates in Hermite/weighted-Sobolev spaces, bump-function lower-bound
certificates, and a convergence-study engine with CSV output.
"""

from hermquad.hermite import (
    gaussian_abs_moment,
    gaussian_weight,
    hermite_deriv,
    hermite_eval,
    hermite_eval_scaled,
)
from hermquad.rules import QuadratureRule, apply_rule, gh_rule, spacing_stats
from hermquad.spaces import (
    CoeffVector,
    Integrand,
    coeff_identity_residual,
    hermite_coeff,
    hermite_coeffs,
    hermite_space_norm,
    r_alpha,
    sobolev_norm,
)
from hermquad.study import (
    ConvergenceRecord,
    RateFit,
    corpus,
    emit_csv,
    fit_rate,
    run_sweep,
)
from hermquad.trapezoid import (
    AlphaFree,
    FixedAlpha,
    cutoff_T,
    cutoff_T_alpha_free,
    integrate_gaussian,
    trap_rule,
)
from hermquad.wce import (
    BumpCertificate,
    WceEstimate,
    S_alpha_tau,
    bump_certificate,
    explicit_lower_constant,
    gap_certificate,
    trap_theory_constant,
    wce_series,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaFree",
    "BumpCertificate",
    "CoeffVector",
    "ConvergenceRecord",
    "FixedAlpha",
    "Integrand",
    "QuadratureRule",
    "RateFit",
    "S_alpha_tau",
    "WceEstimate",
    "apply_rule",
    "bump_certificate",
    "coeff_identity_residual",
    "corpus",
    "cutoff_T",
    "cutoff_T_alpha_free",
    "emit_csv",
    "explicit_lower_constant",
    "fit_rate",
    "gap_certificate",
    "gaussian_abs_moment",
    "gaussian_weight",
    "gh_rule",
    "hermite_coeff",
    "hermite_coeffs",
    "hermite_deriv",
    "hermite_eval",
    "hermite_eval_scaled",
    "hermite_space_norm",
    "integrate_gaussian",
    "r_alpha",
    "run_sweep",
    "sobolev_norm",
    "spacing_stats",
    "trap_rule",
    "trap_theory_constant",
    "wce_series",
]
