"""Truncated trapezoidal rule on [-T, T) with cut-off policies.

The rule is Q*_{n,T}(g) = (2T/n) sum_{j=0}^{n-1} g(xi_j*), xi_j* = 2Tj/n - T;
note +T itself is not a node.  The cut-off half-width balancing truncation
against discretisation error is T = sqrt(2/(1-eps) * alpha * ln n), or its
alpha-free variant with a slowly growing gamma(n) in place of alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from hermquad.hermite import gaussian_weight
from hermquad.rules import TRAP, QuadratureRule, RuleParams, apply_rule

#: reproduces the reference experiment's choice
DEFAULT_EPSILON = 0.51


def _check_epsilon(epsilon: float) -> None:
    if not 0.0 < epsilon < 1.0:
        raise ValueError("epsilon must lie in (0, 1)")


@dataclass(frozen=True)
class FixedAlpha:
    """Cut-off policy T = sqrt(2/(1-eps) * alpha * ln n) for known smoothness."""

    alpha: int
    epsilon: float = DEFAULT_EPSILON

    def __post_init__(self):
        if self.alpha < 1:
            raise ValueError("alpha must be a positive integer")
        _check_epsilon(self.epsilon)

    def cutoff(self, n) -> float:
        return cutoff_T(n, self.alpha, self.epsilon)


@dataclass(frozen=True)
class AlphaFree:
    """Smoothness-free policy with a non-decreasing unbounded gamma(n)."""

    gamma: Callable[[float], float]
    epsilon: float = DEFAULT_EPSILON
    label: str = ""

    def __post_init__(self):
        _check_epsilon(self.epsilon)

    def cutoff(self, n) -> float:
        return cutoff_T_alpha_free(n, self.gamma, self.epsilon)


CutoffPolicy = FixedAlpha | AlphaFree


def cutoff_T(n, alpha: int, epsilon: float) -> float:
    """T = sqrt(2/(1-eps) * alpha * ln n); positive, increasing in n and alpha."""
    if n < 2:
        raise ValueError("cut-off requires n >= 2")
    if alpha < 1:
        raise ValueError("alpha must be a positive integer")
    _check_epsilon(epsilon)
    return math.sqrt(2.0 / (1.0 - epsilon) * alpha * math.log(n))


def cutoff_T_alpha_free(
    n, gamma: Callable[[float], float], epsilon: float, target_alpha: int | None = None
) -> float:
    """T~ = sqrt(2/(1-eps) * gamma(n) * ln n).

    With target_alpha given, rejects n for which gamma(n) has not yet reached
    the smoothness the error bound is wanted for.
    """
    if n < 2:
        raise ValueError("cut-off requires n >= 2")
    _check_epsilon(epsilon)
    g = gamma(n)
    if g <= 0:
        raise ValueError(f"gamma(n) must be positive, got {g!r} at n={n}")
    if target_alpha is not None and g < target_alpha:
        raise ValueError(
            f"n={n} too small for target alpha={target_alpha}: gamma(n)={g!r}"
        )
    return math.sqrt(2.0 / (1.0 - epsilon) * g * math.log(n))


def trap_rule(n: int, T: float) -> QuadratureRule:
    """Equispaced rule with nodes 2Tj/n - T, j=0..n-1, all weights 2T/n."""
    if n < 1:
        raise ValueError("trap_rule requires n >= 1")
    if not T > 0:
        raise ValueError("trap_rule requires T > 0")
    h = 2.0 * T / n
    nodes = -T + h * np.arange(n)
    weights = np.full(n, h)
    return QuadratureRule(TRAP, nodes, weights, RuleParams(T=float(T)))


def integrate_gaussian(n: int, policy: CutoffPolicy, f: Callable) -> float:
    """Q*_{n,T}(f*rho) with T drawn from the cut-off policy.

    rho is multiplied in directly: at desk scales T <= ~10, so rho(T) stays
    far above underflow.
    """
    if n < 2:
        raise ValueError("integrate_gaussian requires n >= 2")
    T = policy.cutoff(n)
    rule = trap_rule(n, T)
    return apply_rule(rule, lambda x: np.asarray(f(x), dtype=float) * gaussian_weight(x))
