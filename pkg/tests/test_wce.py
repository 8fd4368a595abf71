import math
from fractions import Fraction

import numpy as np
import pytest

from hermquad.hermite import scaled_series_sums
from hermquad.quadutil import adaptive_quad
from hermquad.rules import QuadratureRule, gh_rule
from hermquad.spaces import _fold_weights
from hermquad.trapezoid import trap_rule
from hermquad.wce import (
    S_alpha_tau,
    bump_certificate,
    bump_eval,
    explicit_lower_constant,
    gap_certificate,
    lower_bound_prefactor,
    trap_theory_constant,
    wce_series,
)


# --- independent brute-force oracle for S: exact integer polynomial algebra ---

def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _bump_deriv_poly(alpha, tau):
    poly = [1]
    for _ in range(alpha):
        poly = _poly_mul(poly, [0, 1])
    for _ in range(alpha):
        poly = _poly_mul(poly, [1, -1])
    for _ in range(tau):
        poly = [i * c for i, c in enumerate(poly)][1:]
    return poly


def _S_oracle(alpha, tau):
    coeffs = _bump_deriv_poly(alpha, tau)

    def value(x):
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    return adaptive_quad(lambda x: value(x) ** 2, 0.0, 1.0, tol=1e-13)


def test_S_examples():
    assert S_alpha_tau(1, 0) == pytest.approx(1.0 / 30.0, rel=1e-15)
    assert S_alpha_tau(1, 1) == pytest.approx(1.0 / 3.0, rel=1e-15)
    assert S_alpha_tau(2, 0) == pytest.approx(1.0 / 630.0, rel=1e-15)
    with pytest.raises(ValueError):
        S_alpha_tau(2, 3)


def test_S_against_brute_force_oracle():
    for alpha in range(1, 5):
        for tau in range(alpha + 1):
            oracle = _S_oracle(alpha, tau)
            assert S_alpha_tau(alpha, tau) == pytest.approx(oracle, rel=1e-10)


def test_S_exact_square_integral():
    # exact rational cross-check: integrate the squared derivative polynomial
    for alpha in range(1, 6):
        for tau in range(alpha + 1):
            sq = _poly_mul(_bump_deriv_poly(alpha, tau), _bump_deriv_poly(alpha, tau))
            exact = float(sum(Fraction(c, i + 1) for i, c in enumerate(sq)))
            assert S_alpha_tau(alpha, tau) == pytest.approx(exact, rel=1e-15)


def test_wce_zero_mode_drops_for_unit_mass():
    # sum w = 1 forces the k=0 term to vanish: the value must equal the
    # k >= 1 part of the series exactly
    from hermquad.spaces import r_alpha

    r = gh_rule(6)
    est = wce_series(r, 1, 50)
    sums = scaled_series_sums(r.nodes, _fold_weights(r.nodes, r.weights), 50)
    k_pos = math.sqrt(math.fsum(r_alpha(1, k) * sums[k] ** 2 for k in range(1, 51)))
    assert est.value == pytest.approx(k_pos, rel=1e-12)
    # while a mass defect shows up through the k=0 term
    shifted = QuadratureRule(r.kind, r.nodes, r.weights * 1.01)
    assert wce_series(shifted, 1, 50).value ** 2 >= 0.01**2 * 0.99


def test_gh_series_terms_vanish_up_to_exactness_degree():
    for n in range(2, 21):
        r = gh_rule(n)
        sums = scaled_series_sums(r.nodes, _fold_weights(r.nodes, r.weights), 2 * n)
        assert np.max(np.abs(sums[1 : 2 * n])) <= 1e-10
        assert abs(sums[0] - 1.0) <= 1e-13


def test_wce_monotone_in_K():
    r = gh_rule(8)
    values = [wce_series(r, 1, K).value for K in (16, 32, 64, 1000, 10_000)]
    assert all(b >= a - 1e-15 for a, b in zip(values, values[1:]))


def test_wce_estimate_fields():
    est = wce_series(gh_rule(8), 2, 4 * 8)
    assert est.K == 32 and est.alpha == 2
    assert est.value >= 0.0
    assert est.tail_bound >= 0.0


def test_wce_input_validation():
    with pytest.raises(ValueError):
        wce_series(gh_rule(4), 0, 10)
    with pytest.raises(ValueError):
        wce_series(gh_rule(4), 1, 0)


def test_wce_fold_overflow_raises():
    crazy = QuadratureRule("trap", np.array([-60.0, 60.0]), np.array([1.0, 1.0]))
    with pytest.raises(OverflowError, match="log-space"):
        wce_series(crazy, 1, 10)


def test_wce_rate_matches_halved_smoothness():
    ns = [8, 16, 32, 64, 128, 256]
    for alpha in (1, 2, 3):
        vals = [wce_series(gh_rule(n), alpha, max(10_000, 8 * n)).value for n in ns]
        slope = np.polyfit(np.log10(ns), np.log10(vals), 1)[0]
        assert slope == pytest.approx(-alpha / 2.0, abs=0.15)


def test_bump_eval_geometry():
    nodes = np.array([0.0, 1.0])
    assert bump_eval(nodes, 1, 0.5) == pytest.approx(0.25, rel=1e-15)
    assert bump_eval(nodes, 1, 0.0) == 0.0
    assert bump_eval(nodes, 1, 1.0) == 0.0
    assert bump_eval(nodes, 1, -0.3) == 0.0
    assert bump_eval(nodes, 1, 1.3) == 0.0


def test_bump_vanishes_at_nodes_for_any_weights():
    nodes = gh_rule(9).nodes
    rng = np.random.default_rng(7)
    h_at_nodes = np.array([bump_eval(nodes, 2, x) for x in nodes])
    assert np.all(h_at_nodes == 0.0)
    for _ in range(5):
        w = rng.normal(size=nodes.size)
        assert float(w @ h_at_nodes) == 0.0


def test_bump_certificate_frozen_values():
    # oracle (mpmath, 30 digits): I_h and ||h||_1 for nodes [0, 1], alpha=1
    cert = bump_certificate(np.array([0.0, 1.0]), 1)
    assert cert.I_h == pytest.approx(0.057597534332889729, rel=1e-12)
    assert cert.norm_h == pytest.approx(0.3500502762812343, rel=1e-12)
    assert cert.ratio == pytest.approx(0.16454074810275318, rel=1e-12)
    assert cert.n == 2 and cert.alpha == 1


def test_bump_certificate_validation():
    with pytest.raises(ValueError):
        bump_certificate(np.array([1.0]), 1)
    with pytest.raises(ValueError):
        bump_certificate(np.array([0.0, 0.0, 1.0]), 1)
    with pytest.raises(ValueError):
        bump_certificate(np.array([0.0, 1.0]), 0)


def test_bump_certificate_scales_like_root_n():
    ns = [8, 16, 32, 64, 128, 256, 512]
    ratios = [bump_certificate(gh_rule(n).nodes, 1).ratio for n in ns]
    slope = np.polyfit(np.log10(ns), np.log10(ratios), 1)[0]
    assert -0.7 <= slope <= -0.3


def test_gap_certificate_examples():
    assert gap_certificate(1.0, 1) == pytest.approx(
        bump_certificate(np.array([0.0, 1.0]), 1).ratio, rel=1e-15
    )
    # regression value frozen from the adaptive-quadrature oracle
    assert gap_certificate(0.5, 2) == pytest.approx(0.0040983633817656538, rel=1e-11)
    with pytest.raises(ValueError):
        gap_certificate(0.0, 1)
    with pytest.raises(ValueError):
        gap_certificate(1.5, 1)


def test_gap_certificate_scaling():
    for alpha in (1, 2):
        for delta in (1 / 8, 1 / 16):
            ratio = gap_certificate(delta, alpha) / gap_certificate(delta / 2, alpha)
            assert ratio == pytest.approx(2.0 ** (alpha + 0.5), rel=0.05)


def test_lower_constant_assembly():
    # c_1 = (1/6) (2 pi)^(-1/4) (11/30)^(-1/2)
    c1 = (1.0 / 6.0) / (2.0 * math.pi) ** 0.25 / math.sqrt(11.0 / 30.0)
    assert lower_bound_prefactor(1) == pytest.approx(c1, rel=1e-14)
    # erf(13/3) - erf(3), via erfc difference (frozen oracle value)
    erf_gap = 2.2089608538543703e-05
    expected = c1 * math.pi**0.25 * erf_gap / 2.0 ** (7.0 / 2.0)
    assert explicit_lower_constant(1) == pytest.approx(expected, rel=1e-12)
    assert explicit_lower_constant(1) == pytest.approx(4.5189607605059314e-07, rel=1e-12)


def test_lower_constant_monotone():
    values = [explicit_lower_constant(a) for a in range(1, 7)]
    assert all(v > 0 for v in values)
    assert all(b < a for a, b in zip(values, values[1:]))


def test_lower_constant_consistent_with_certificates():
    for alpha in (1, 2):
        C = explicit_lower_constant(alpha)
        cert = bump_certificate(gh_rule(64).nodes, alpha)
        assert cert.ratio >= C * 64.0 ** (-alpha / 2.0)
        est = wce_series(gh_rule(64), alpha, 10_000)
        assert est.value + est.tail_bound >= C * 64.0 ** (-alpha / 2.0)


def test_trap_theory_constant():
    assert trap_theory_constant(1) == pytest.approx(2.0 / math.sqrt(6.0), abs=1e-12)
    assert trap_theory_constant(2) == pytest.approx(2.0 / math.sqrt(90.0), abs=1e-12)
    for alpha in range(6, 10):
        r = trap_theory_constant(alpha + 1) / trap_theory_constant(alpha)
        assert r == pytest.approx(1.0 / math.pi, rel=0.01)


def test_weight_tuning_futility():
    """Random weight vectors on the GH nodes cannot beat the node-only bound."""
    nodes = gh_rule(32).nodes
    floor = bump_certificate(nodes, 1).ratio
    rng = np.random.default_rng(20240817)
    for _ in range(10):
        w = rng.uniform(0.0, 2.0 / 32.0, size=32)
        est = wce_series(QuadratureRule("gh", nodes, w), 1, 10_000)
        assert est.value >= 0.9 * floor


def test_wce_accepts_trapezoid_rules():
    est = wce_series(trap_rule(64, 5.0), 1, 2000)
    assert est.value > 0.0 and math.isfinite(est.value)
