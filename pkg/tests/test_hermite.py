import math

import numpy as np
import pytest
from numpy.polynomial.hermite_e import hermegauss

from hermquad.hermite import (
    gaussian_abs_moment,
    gaussian_weight,
    hermite_deriv,
    hermite_eval,
    hermite_eval_scaled,
    hermite_scaled_pair,
)
from hermquad.quadutil import adaptive_quad


def test_eval_low_degrees():
    assert hermite_eval(0, 3.7) == 1.0
    # H_2(x) = (x^2 - 1)/sqrt(2): root at 1
    assert hermite_eval(2, 1.0) == pytest.approx(0.0, abs=1e-15)
    # odd symmetry at the origin
    assert hermite_eval(3, 0.0) == 0.0
    # H_3(x) = (x^3 - 3x)/sqrt(6): root at sqrt(3)
    assert hermite_eval(3, math.sqrt(3.0)) == pytest.approx(0.0, abs=5e-15)
    assert hermite_eval(1, -2.5) == -2.5


def test_eval_rejects_negative_degree():
    with pytest.raises(ValueError):
        hermite_eval(-1, 0.0)


def test_symmetry():
    xs = np.linspace(0.0, 10.0, 37)
    for k in (1, 2, 5, 17, 50, 100):
        left = hermite_eval(k, -xs)
        right = hermite_eval(k, xs)
        np.testing.assert_allclose(left, (-1.0) ** k * right, rtol=1e-13, atol=1e-300)


def test_orthonormality_against_independent_rule():
    # 64-point rule from numpy's hermegauss: degree j+k <= 40 < 2*64-1
    x, w = hermegauss(64)
    w = w / math.sqrt(2.0 * math.pi)
    vals = np.array([hermite_eval(k, x) for k in range(21)])
    gram = (vals * w) @ vals.T
    np.testing.assert_allclose(gram, np.eye(21), atol=1e-10)


def test_scaled_examples():
    assert hermite_eval_scaled(0, 2.0) == pytest.approx(math.exp(-1.0), rel=1e-15)
    assert hermite_eval_scaled(1, 1.0) == pytest.approx(math.exp(-0.25), rel=1e-15)
    assert hermite_eval_scaled(501, 0.0) == 0.0


def test_scaled_agrees_with_unscaled():
    for k, x in [(3, 0.7), (50, 8.0), (500, 20.0), (2000, 40.0), (7, -3.3)]:
        a = hermite_eval(k, x) * math.exp(-x * x / 4.0)
        b = hermite_eval_scaled(k, x)
        assert b == pytest.approx(a, rel=1e-12)


def test_scaled_pair_finite_envelope():
    for x in (-40.0, -17.3, 0.0, 5.0, 40.0):
        v, vp = hermite_scaled_pair(2000, x)
        assert math.isfinite(v) and math.isfinite(vp)
    v, vp = hermite_scaled_pair(3, 2.0)
    assert v == pytest.approx(hermite_eval_scaled(3, 2.0), rel=1e-12)
    assert vp == pytest.approx(hermite_eval_scaled(2, 2.0), rel=1e-12)


def test_unscaled_overflow_signals_scaled_path():
    with pytest.raises(OverflowError):
        hermite_eval(150, 1000.0)
    assert np.isfinite(hermite_eval_scaled(150, 1000.0))


def test_deriv_examples():
    assert hermite_deriv(1, 5.0) == 1.0
    assert hermite_deriv(2, 1.0) == pytest.approx(math.sqrt(2.0), rel=1e-15)
    # H_3'(sqrt3) = sqrt(3) H_2(sqrt3) = sqrt(3)*(3-1)/sqrt(2) = sqrt(6)
    assert hermite_deriv(3, math.sqrt(3.0)) == pytest.approx(math.sqrt(6.0), rel=1e-14)
    with pytest.raises(ValueError):
        hermite_deriv(0, 1.0)


def test_deriv_matches_finite_differences():
    h = 1e-5
    for k in range(1, 16):
        for x in np.linspace(-5.0, 5.0, 11):
            fd = (hermite_eval(k, x + h) - hermite_eval(k, x - h)) / (2.0 * h)
            assert hermite_deriv(k, x) == pytest.approx(fd, abs=1e-6 * max(1.0, abs(fd)))


def test_weighted_derivative_identity():
    # d/dx [H_k rho] = -sqrt(k+1) H_{k+1} rho, checked by central differences
    h = 1e-5
    for k in range(11):
        for x in np.linspace(-3.0, 3.0, 13):
            g = lambda t: hermite_eval(k, t) * gaussian_weight(t)
            fd = (g(x + h) - g(x - h)) / (2.0 * h)
            rhs = -math.sqrt(k + 1.0) * hermite_eval(k + 1, x) * gaussian_weight(x)
            assert fd == pytest.approx(rhs, abs=1e-6)


def test_gaussian_weight_values():
    assert gaussian_weight(0.0) == pytest.approx(0.3989422804014327, rel=1e-15)
    assert gaussian_weight(1.0) == gaussian_weight(-1.0)
    assert gaussian_weight(2.0) == pytest.approx(0.05399096651318806, rel=1e-14)
    assert 0.0 < gaussian_weight(6.0) <= 1.0 / math.sqrt(2.0 * math.pi)


def test_abs_moment_closed_forms():
    assert gaussian_abs_moment(1.0) == pytest.approx(0.7978845608028654, rel=1e-14)
    assert gaussian_abs_moment(2.0) == pytest.approx(1.0, rel=1e-14)
    assert gaussian_abs_moment(3.0) == pytest.approx(1.5957691216057307, rel=1e-14)
    assert gaussian_abs_moment(5.0) == pytest.approx(6.383076486422923, rel=1e-14)


def test_abs_moment_against_quadrature_oracle():
    for p in (1.0, 2.5, 3.0, 5.0):
        oracle = adaptive_quad(
            lambda x: abs(x) ** p * gaussian_weight(x),
            -40.0,
            40.0,
            tol=1e-12,
            breakpoints=(0.0,),
        )
        assert gaussian_abs_moment(p) == pytest.approx(oracle, abs=2e-12)


def test_abs_moment_domain():
    with pytest.raises(ValueError):
        gaussian_abs_moment(0.0)
    with pytest.raises(ValueError):
        gaussian_abs_moment(300.0)
    assert math.isfinite(gaussian_abs_moment(299.0))
