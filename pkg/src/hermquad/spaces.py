"""Weighted Sobolev norms, Hermite coefficients, and the norm machinery.

The weighted Sobolev space of order alpha collects f with
||f||_alpha^2 = sum_{tau<=alpha} ||f^(tau)||^2_{L2_rho} finite; the Hermite
space weighs squared coefficients fhat(k) = (f, H_k)_{L2_rho} by
1/r_alpha(k) = sum_{tau<=alpha} k!/(k-tau)!.  The derivative/coefficient
identity (f', H_k) = sqrt(k+1) (f, H_{k+1}) makes the two norms agree for
functions with enough decay; this module measures rather than assumes that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Literal, Sequence

import numpy as np

from hermquad.hermite import (
    gaussian_weight,
    hermite_eval,
    scaled_series_sums,
)
from hermquad.quadutil import DEFAULT_WINDOW, adaptive_quad
from hermquad.rules import gh_rule

CoeffMethod = Literal["gh", "adaptive"]

_FD_STEP = float(np.finfo(float).eps) ** (1.0 / 3.0)


@dataclass(frozen=True)
class Integrand:
    """Evaluator with declared smoothness and optional exact metadata.

    derivs[t-1] must evaluate the t-th derivative; when absent, finite
    differences are used only with the explicit fd_safe opt-in (derivatives
    of kinked members like |x|^p blow up at the kink, so the corpus supplies
    exact piecewise derivatives instead).
    """

    fn: Callable
    derivs: tuple[Callable, ...] = ()
    alpha: int = 1
    exact_integral: float | None = None
    label: str = ""
    breakpoints: tuple[float, ...] = ()
    fd_safe: bool = False

    def __post_init__(self):
        if self.alpha < 1:
            raise ValueError("declared smoothness alpha must be >= 1")
        if self.derivs and len(self.derivs) < self.alpha:
            raise ValueError("derivs, when provided, must cover tau = 1..alpha")

    def __call__(self, x):
        return self.fn(x)

    def derivative(self, tau: int) -> Callable:
        """Evaluator for the tau-th derivative (tau >= 1)."""
        if tau < 1:
            raise ValueError("tau must be >= 1")
        if len(self.derivs) >= tau:
            return self.derivs[tau - 1]
        if not self.fd_safe:
            raise ValueError(
                f"{self.label or 'integrand'}: derivative {tau} not supplied and "
                "finite differences not opted in (fd_safe=False)"
            )
        lower = self.derivative(tau - 1) if tau > 1 else self.fn

        def fd(x, _g=lower):
            h = _FD_STEP * max(1.0, abs(x))
            return (_g(x + h) - _g(x - h)) / (2.0 * h)

        return fd


@dataclass(frozen=True)
class CoeffVector:
    """Hermite coefficients fhat(0)..fhat(K) with their computation method."""

    coeffs: np.ndarray
    K: int
    method: CoeffMethod

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)
        if arr.size != self.K + 1:
            raise ValueError("coeffs must hold K+1 entries")


def r_alpha(alpha: int, k: int) -> float:
    """r_alpha(k): 1 at k=0, else 1/sum_{tau<=alpha} k!/(k-tau)!.

    The falling factorials are built as products, so no factorial overflow.
    """
    if alpha < 1 or k < 0:
        raise ValueError("need alpha >= 1 and k >= 0")
    if k == 0:
        return 1.0
    return float(1.0 / _r_alpha_inv_array(alpha, np.array([k]))[0])


def _r_alpha_inv_array(alpha: int, ks: np.ndarray) -> np.ndarray:
    """sum_{tau=0}^{alpha} beta_tau(k) elementwise (beta_tau(k)=0 for k<tau)."""
    ks = np.asarray(ks, dtype=float)
    beta = np.ones_like(ks)
    total = np.ones_like(ks)
    for tau in range(1, alpha + 1):
        beta = beta * (ks - (tau - 1))
        total += beta
    return total


def r_alpha_asymptote(alpha: int, k: int) -> float:
    """r_alpha(k) * k^alpha, which tends to 1 as k grows."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return r_alpha(alpha, k) * float(k) ** alpha


def _fold_weights(nodes: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """weights * exp(nodes^2/4) via logs; raises if it leaves double range.

    Weights at the subnormal floor are underflow artifacts of rule
    construction (the true values sit at exp(-x^2/2) scale, far below double
    range); their true folded contribution also underflows, so they are
    dropped rather than amplified by exp(+x^2/4).
    """
    w = np.where(np.abs(weights) <= float(np.finfo(float).smallest_subnormal), 0.0, weights)
    with np.errstate(divide="ignore", over="ignore"):
        log_c = np.log(np.abs(w)) + nodes * nodes / 4.0
        c = np.sign(w) * np.exp(log_c)
    if not np.all(np.isfinite(c)):
        raise OverflowError(
            "weight folding w_j*exp(x_j^2/4) overflowed for extreme nodes; "
            "a log-space series path is required for such rules"
        )
    return c


def hermite_coeffs(f: Callable, K: int, method: CoeffMethod = "gh") -> CoeffVector:
    """All coefficients fhat(k) = int f H_k rho dx for k = 0..K."""
    if K < 0:
        raise ValueError("K must be >= 0")
    if method == "gh":
        rule = gh_rule(max(64, 2 * K))
        fx = np.asarray(f(rule.nodes), dtype=float)
        if not np.all(np.isfinite(fx)):
            raise ValueError("non-finite integrand values in coefficient projection")
        coeffs = scaled_series_sums(rule.nodes, _fold_weights(rule.nodes, rule.weights) * fx, K)
    elif method == "adaptive":
        coeffs = np.array([_coeff_adaptive(f, k) for k in range(K + 1)])
    else:
        raise ValueError(f"unknown coefficient method {method!r}")
    return CoeffVector(coeffs, K, method)


def _coeff_adaptive(f: Callable, k: int) -> float:
    breakpoints = getattr(f, "breakpoints", ())
    return adaptive_quad(
        lambda x: float(f(x)) * hermite_eval(k, x) * gaussian_weight(x),
        -DEFAULT_WINDOW,
        DEFAULT_WINDOW,
        tol=1e-12,
        breakpoints=breakpoints,
    )


def hermite_coeff(f: Callable, k: int, method: CoeffMethod = "gh") -> float:
    """fhat(k) by Gauss-Hermite projection with >= max(64, 2k) points, or by
    adaptive quadrature of f*H_k*rho on [-40, 40] to 1e-12 absolute."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if method == "adaptive":
        return _coeff_adaptive(f, k)
    return float(hermite_coeffs(f, k, method).coeffs[k])


def l2_rho_norm(f: Callable, breakpoints: Sequence[float] = ()) -> float:
    """||f||_{L2_rho} by adaptive quadrature."""
    sq = adaptive_quad(
        lambda x: float(f(x)) ** 2 * gaussian_weight(x),
        -DEFAULT_WINDOW,
        DEFAULT_WINDOW,
        tol=1e-13,
        breakpoints=breakpoints,
    )
    return math.sqrt(max(sq, 0.0))


def sobolev_norm(f: Integrand, alpha: int) -> float:
    """||f||_alpha = sqrt(sum_{tau=0}^{alpha} ||f^(tau)||^2_{L2_rho})."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    total = l2_rho_norm(f.fn, f.breakpoints) ** 2
    for tau in range(1, alpha + 1):
        total += l2_rho_norm(f.derivative(tau), f.breakpoints) ** 2
    return math.sqrt(total)


def hermite_space_norm(f: Callable, alpha: int, K: int = 200) -> float:
    """Truncated Hermite-space norm sqrt(sum_{k<=K} fhat(k)^2 / r_alpha(k));
    non-decreasing in K."""
    if K < 1:
        raise ValueError("K must be >= 1")
    vec = hermite_coeffs(f, K, "gh")
    weights = _r_alpha_inv_array(alpha, np.arange(K + 1))
    return math.sqrt(math.fsum((vec.coeffs**2 * weights).tolist()))


def hermite_norm_tail(f: Integrand, alpha: int, K: int = 200) -> float:
    """Reported tail estimate r_alpha(K)^{-1} * Bessel remainder beyond K."""
    vec = hermite_coeffs(f.fn, K, "gh")
    remainder = l2_rho_norm(f.fn, f.breakpoints) ** 2 - float(np.sum(vec.coeffs**2))
    return max(remainder, 0.0) / r_alpha(alpha, K)


def coeff_identity_residual(f: Integrand, k: int) -> float:
    """| (f', H_k)_{L2_rho} - sqrt(k+1) (f, H_{k+1})_{L2_rho} |."""
    if k < 0:
        raise ValueError("k must be >= 0")
    fprime = f.derivative(1)
    lhs = adaptive_quad(
        lambda x: float(fprime(x)) * hermite_eval(k, x) * gaussian_weight(x),
        -DEFAULT_WINDOW,
        DEFAULT_WINDOW,
        tol=1e-12,
        breakpoints=f.breakpoints,
    )
    rhs = math.sqrt(k + 1) * adaptive_quad(
        lambda x: float(f.fn(x)) * hermite_eval(k + 1, x) * gaussian_weight(x),
        -DEFAULT_WINDOW,
        DEFAULT_WINDOW,
        tol=1e-12,
        breakpoints=f.breakpoints,
    )
    return abs(lhs - rhs)
