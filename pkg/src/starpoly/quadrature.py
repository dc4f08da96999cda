"""Numerical integration on [0, 1] and [0, inf) for the weight moments."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import ConvergenceError


@lru_cache(maxsize=8)
def _legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(n)


def gauss_legendre(f: Callable[[np.ndarray], np.ndarray], a: float, b: float, n: int = 30) -> float:
    """Fixed n-point Gauss-Legendre rule on [a, b]; ``f`` is vectorized."""
    t, w = _legendre(n)
    half = 0.5 * (b - a)
    return float(half * np.dot(w, f(a + half * (t + 1.0))))


def tanh_sinh(f: Callable[[np.ndarray, np.ndarray], np.ndarray], tol: float = 1e-13,
              max_level: int = 9) -> float:
    """Double-exponential rule on [0, 1].

    ``f(x, u)`` receives the abscissa and its complement u = 1 - x, both
    computed without cancellation so that endpoint singularities in either
    variable can be evaluated accurately.
    """
    prev = None
    for level in range(3, max_level + 1):
        h = 2.0 ** -level
        t = np.arange(-4.0, 4.0 + h / 2, h)
        s = 0.5 * math.pi * np.sinh(t)
        # x = 1 / (1 + e^{-2s}), u = 1 / (1 + e^{2s})
        x = 1.0 / (1.0 + np.exp(-2.0 * s))
        u = 1.0 / (1.0 + np.exp(2.0 * s))
        dx = 0.5 * math.pi * np.cosh(t) / (2.0 * np.cosh(s) ** 2)
        keep = (x > 0) & (u > 0) & (dx > 1e-300)
        val = float(h * np.sum(f(x[keep], u[keep]) * dx[keep]))
        if prev is not None and abs(val - prev) <= tol * max(abs(val), 1e-300):
            return val
        prev = val
    raise ConvergenceError("tanh-sinh rule did not converge", estimate=prev)


def integrate_half_line(f: Callable[[np.ndarray], np.ndarray], tol: float = 1e-13,
                        panel: float = 0.5, x_max: float = 200.0) -> float:
    """Integral of a decaying ``f`` over [0, inf).

    [0, 1] is done by tanh-sinh (tolerates algebraic behaviour at 0); beyond 1
    Gauss-Legendre panels are added until a panel contributes less than
    ``tol`` relative to the running total, and each panel is checked against a
    higher-order rule.
    """
    total = tanh_sinh(lambda x, u: f(x), tol=tol)
    a = 1.0
    quiet = 0
    while a < x_max:
        b = a + panel
        lo = gauss_legendre(f, a, b, 20)
        hi = gauss_legendre(f, a, b, 30)
        if abs(hi - lo) > tol * max(abs(hi), abs(total), 1e-300):
            raise ConvergenceError(f"Gauss-Legendre panel [{a}, {b}] unresolved", estimate=total + hi)
        total += hi
        quiet = quiet + 1 if abs(hi) < 1e-3 * tol * max(abs(total), 1e-300) else 0
        if quiet >= 4:
            return total
        a = b
    raise ConvergenceError("integrand has not decayed by x_max", estimate=total)
