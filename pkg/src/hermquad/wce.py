"""Worst-case-error estimates, bump-function certificates, and error constants.

wce_series realises the Hermite-space worst-case error of a rule through its
coefficient series: wce^2 = (1 - sum_j w_j)^2 + sum_k r_alpha(k) (Q(H_k))^2,
using I(H_k) = delta_{k0}.  bump_certificate builds the piecewise-polynomial
fooling function vanishing at every node, whose ratio I(h)/||h||_alpha lower
bounds the worst-case error of ANY weight choice on those nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from hermquad.hermite import gaussian_weight, scaled_series_sums
from hermquad.quadutil import comp_sum, leggauss_01
from hermquad.spaces import _fold_weights, _r_alpha_inv_array, r_alpha
from hermquad.specfun import erf_diff, zeta_int
from hermquad.rules import QuadratureRule

#: Cramer bound: |H_k(x) exp(-x^2/4)| <= this for every k, x
_CRAMER = 1.086435


@dataclass(frozen=True)
class WceEstimate:
    """Truncated worst-case-error value; non-decreasing in K, >= 0.

    tail_bound caps each omitted series term (k > K), reported, never added.
    """

    value: float
    K: int
    tail_bound: float
    alpha: int


@dataclass(frozen=True)
class BumpCertificate:
    """Certified lower bound I(h)/||h||_alpha for any rule on these nodes."""

    I_h: float
    norm_h: float
    ratio: float
    alpha: int
    n: int


def wce_series(rule: QuadratureRule, alpha: int, K: int) -> WceEstimate:
    """Hermite-space worst-case error of `rule`, truncated at degree K.

    Node sums use the folding w_j H_k(x_j) = (w_j e^{x_j^2/4}) (H_k e^{-x_j^2/4})
    so degrees up to 10^4 and beyond stay in double range.
    """
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    if K < 1:
        raise ValueError("K must be >= 1")
    folded = _fold_weights(rule.nodes, rule.weights)
    sums = scaled_series_sums(rule.nodes, folded, K)
    inv_r = _r_alpha_inv_array(alpha, np.arange(K + 1))
    terms = sums**2 / inv_r
    terms[0] = (1.0 - sums[0]) ** 2
    value = math.sqrt(comp_sum(terms))
    sup_term = (_CRAMER * comp_sum(np.abs(folded))) ** 2
    tail = r_alpha(alpha, K + 1) * sup_term
    return WceEstimate(value=value, K=K, tail_bound=tail, alpha=alpha)


def _deriv_coeffs(alpha: int, tau: int) -> list[tuple[float, int]]:
    """(coefficient, power) pairs of d^tau/du^tau [u^alpha (1-u)^alpha]."""
    out = []
    for ell in range(alpha + 1):
        power = alpha + ell - tau
        if power < 0:
            continue
        coef = (-1) ** ell * math.comb(alpha, ell) * math.perm(alpha + ell, tau)
        out.append((float(coef), power))
    return out


def bump_eval(nodes: np.ndarray, alpha: int, x: float) -> float:
    """The fooling bump: (u(1-u))^alpha on each node gap, 0 outside and at nodes."""
    nodes = np.asarray(nodes, dtype=float)
    j = int(np.searchsorted(nodes, x, side="right")) - 1
    if j < 0 or j >= nodes.size - 1:
        return 0.0
    u = (x - nodes[j]) / (nodes[j + 1] - nodes[j])
    return float((u * (1.0 - u)) ** alpha)


def bump_certificate(nodes, alpha: int) -> BumpCertificate:
    """Certificate I(h)/||h||_alpha from the bump vanishing at every node.

    Per-interval 32-point Gauss-Legendre panels (one per unit of gap length)
    integrate the smooth polynomial-times-Gaussian pieces; the derivative
    expansion h^(tau) = gap^{-tau} sum_l (-1)^l C(alpha,l) perm(alpha+l,tau)
    u^{alpha+l-tau} supplies the Sobolev norm.
    """
    nodes = np.asarray(nodes, dtype=float)
    if nodes.ndim != 1 or nodes.size < 2:
        raise ValueError("need at least two nodes")
    gaps = np.diff(nodes)
    if np.any(gaps <= 0):
        raise ValueError("nodes must be strictly increasing (no duplicates)")
    if alpha < 1:
        raise ValueError("alpha must be >= 1")

    u0, w0 = leggauss_01(32)
    coeffs = [_deriv_coeffs(alpha, tau) for tau in range(alpha + 1)]

    i_parts = []
    norm_parts = [[] for _ in range(alpha + 1)]
    for a, gap in zip(nodes[:-1], gaps):
        panels = max(1, math.ceil(gap))
        u = (np.arange(panels)[:, None] + u0[None, :]).ravel() / panels
        w = np.tile(w0 / panels, panels)
        rho = gaussian_weight(a + gap * u)
        i_parts.append(gap * comp_sum(w * (u * (1.0 - u)) ** alpha * rho))
        for tau in range(alpha + 1):
            d = np.zeros_like(u)
            for coef, power in coeffs[tau]:
                d += coef * u**power
            norm_parts[tau].append(
                gap ** (1 - 2 * tau) * comp_sum(w * d * d * rho)
            )
    I_h = math.fsum(i_parts)
    norm_sq = math.fsum(math.fsum(parts) for parts in norm_parts)
    norm_h = math.sqrt(norm_sq)
    return BumpCertificate(
        I_h=I_h, norm_h=norm_h, ratio=I_h / norm_h, alpha=alpha, n=int(nodes.size)
    )


def gap_certificate(delta: float, alpha: int) -> float:
    """Lower-bound certificate from a node-free gap (0, delta); the defining
    bump is exactly the two-node certificate on {0, delta}.  Scales like
    delta^{alpha + 1/2}."""
    if not 0.0 < delta <= 1.0:
        raise ValueError("delta must lie in (0, 1]")
    return bump_certificate(np.array([0.0, delta]), alpha).ratio


def _S_fraction(alpha: int, tau: int) -> Fraction:
    total = Fraction(0)
    for l1 in range(alpha + 1):
        for l2 in range(alpha + 1):
            num = (
                (-1) ** (l1 + l2)
                * math.comb(alpha, l1)
                * math.comb(alpha, l2)
                * math.perm(alpha + l1, tau)
                * math.perm(alpha + l2, tau)
            )
            total += Fraction(num, 2 * (alpha - tau) + l1 + l2 + 1)
    return total


def S_alpha_tau(alpha: int, tau: int) -> float:
    """S_{alpha,tau} = int_0^1 |d^tau/du^tau (u^alpha (1-u)^alpha)|^2 du,
    as the exact alternating double sum (integer arithmetic, then float)."""
    if not 0 <= tau <= alpha:
        raise ValueError("need 0 <= tau <= alpha")
    return float(_S_fraction(alpha, tau))


def lower_bound_prefactor(alpha: int) -> float:
    """c_alpha = (alpha!)^2 / ((2 alpha + 1)! (2 pi)^{1/4} sqrt(sum_tau S_{alpha,tau}))."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    s_total = sum((_S_fraction(alpha, tau) for tau in range(alpha + 1)), Fraction(0))
    ratio = Fraction(math.factorial(alpha) ** 2, math.factorial(2 * alpha + 1))
    return float(ratio) / ((2.0 * math.pi) ** 0.25 * math.sqrt(float(s_total)))


def explicit_lower_constant(alpha: int) -> float:
    """C_alpha in the certified bound wce(GH_n) >= C_alpha n^{-alpha/2}, n >= 2:
    C_alpha = c_alpha pi^{1/4} (erf(13/3) - erf(3)) / 2^{(alpha+6)/2}.

    The near-1 erf difference is taken on the erfc side for full precision.
    """
    return (
        lower_bound_prefactor(alpha)
        * math.pi**0.25
        * erf_diff(3.0, 13.0 / 3.0)
        / 2.0 ** ((alpha + 6) / 2.0)
    )


def trap_theory_constant(alpha: int) -> float:
    """2 sqrt(zeta(2 alpha)) / pi^alpha from the in-window trapezoid bound."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    return 2.0 * math.sqrt(zeta_int(2 * alpha)) / math.pi**alpha
