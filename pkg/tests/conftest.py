import math

import numpy as np
import pytest

from hermquad.hermite import hermite_deriv, hermite_eval
from hermquad.spaces import Integrand


def hermite_integrand(j: int, max_tau: int = 4) -> Integrand:
    """H_j as a corpus member with analytic derivatives via H' = sqrt(k) H_{k-1}."""

    def deriv(tau):
        if tau > j:
            return lambda x: np.zeros_like(np.asarray(x, dtype=float))
        c = math.prod(math.sqrt(j - i) for i in range(tau))
        return lambda x, c=c, d=j - tau: c * hermite_eval(d, x)

    return Integrand(
        fn=lambda x: hermite_eval(j, x),
        derivs=tuple(deriv(t) for t in range(1, max_tau + 1)),
        alpha=min(max_tau, 4),
        label=f"H{j}",
    )


def sin_integrand(max_tau: int = 4) -> Integrand:
    cycle = (np.cos, lambda x: -np.sin(x), lambda x: -np.cos(x), np.sin)
    return Integrand(
        fn=np.sin, derivs=cycle[:max_tau], alpha=min(max_tau, 4), label="sin"
    )


def exp_integrand(t: float, max_tau: int = 4) -> Integrand:
    return Integrand(
        fn=lambda x: np.exp(t * x),
        derivs=tuple(
            (lambda x, tau=tau: t**tau * np.exp(t * x)) for tau in range(1, max_tau + 1)
        ),
        alpha=min(max_tau, 4),
        exact_integral=math.exp(t * t / 2.0),
        label=f"exp({t}x)",
    )


@pytest.fixture(scope="session")
def smooth_corpus():
    return [hermite_integrand(j) for j in (0, 1, 2, 3, 5)] + [
        exp_integrand(0.5),
        exp_integrand(1.0),
        sin_integrand(),
    ]
