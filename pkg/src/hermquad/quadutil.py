"""Shared integration helpers: adaptive reference quadrature and fixed panels."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from scipy import integrate

#: window outside which rho(x) < 1e-300, irrelevant for any corpus growth rate
DEFAULT_WINDOW = 40.0


def adaptive_quad(
    f: Callable[[float], float],
    a: float,
    b: float,
    *,
    tol: float = 1e-12,
    breakpoints: Sequence[float] = (),
) -> float:
    """Adaptive integral of f over [a, b] to ~tol absolute.

    Backed by QUADPACK; interior kinks are passed through as subdivision
    points so non-smooth corpus members converge at full order.
    """
    pts = [p for p in breakpoints if a < p < b] or None
    val, err = integrate.quad(
        f, a, b, epsabs=tol, epsrel=max(tol, 1e-13), limit=500, points=pts
    )
    if not math.isfinite(val):
        raise ValueError("adaptive quadrature produced a non-finite value")
    return val


@lru_cache(maxsize=8)
def leggauss_01(m: int) -> tuple[np.ndarray, np.ndarray]:
    """m-point Gauss-Legendre nodes/weights mapped to [0, 1]."""
    u, w = np.polynomial.legendre.leggauss(m)
    return 0.5 * (u + 1.0), 0.5 * w


def comp_sum(values: np.ndarray) -> float:
    """Exactly rounded sum (math.fsum) of a 1-D array."""
    return math.fsum(values.tolist())
