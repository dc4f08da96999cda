"""Double-precision special functions used by the weight formulas.

Only real arguments on the support side are handled: Airy Ai on x >= 0,
modified Bessel K_nu on z > 0, Kummer U on x > 0, Gauss 2F1 on [0, 1] and the
upper incomplete Gamma function.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DomainError

_EPS = 1e-17
_MAXTERMS = 2000


def rgamma(x: float) -> float:
    """1/Gamma(x), zero at the poles."""
    if x <= 0 and x == math.floor(x):
        return 0.0
    return 1.0 / math.gamma(x)


def _is_nonpos_int(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


# ---------------------------------------------------------------- Airy

_AI0 = 1.0 / (3 ** (2 / 3) * math.gamma(2 / 3))
_AIP0 = -1.0 / (3 ** (1 / 3) * math.gamma(1 / 3))
_AIRY_SERIES_MAX = 1.5
_AIRY_ASYMP_MIN = 10.0


def _airy_maclaurin(x: float) -> tuple[float, float]:
    # Ai = c1 f - c2 g with f, g the two power series solutions of y'' = x y
    x3 = x ** 3
    f, fp, g, gp = 1.0, 0.0, x, 1.0
    cf, cg = 1.0, 1.0  # coefficients of x^{3k} in f and x^{3k+1} in g
    for k in range(1, _MAXTERMS):
        cf /= (3 * k - 1) * (3 * k)
        cg /= (3 * k) * (3 * k + 1)
        p = x3 ** k
        tf, tg = cf * p, cg * p * x
        f += tf
        g += tg
        fp += 3 * k * cf * p / x if x else 0.0
        gp += (3 * k + 1) * cg * p
        if tf < _EPS * f and tg <= _EPS * max(g, 1e-300):
            return _AI0 * f + _AIP0 * g, _AI0 * fp + _AIP0 * gp
    raise ConvergenceError("Airy series did not converge")


def _airy_asymptotic(x: float) -> tuple[float, float]:
    zeta = 2.0 / 3.0 * x ** 1.5
    s = sp = 0.0
    u = v = 1.0
    k = 0
    while True:
        s += u
        sp += v
        # u_k, v_k coefficients of the standard large-argument expansion
        nu = (6 * k + 5) * (6 * k + 3) * (6 * k + 1) / (216 * (2 * k + 1) * (k + 1))
        new_u = u * nu / zeta * -1
        new_v = new_u * -(6 * k + 7) / (6 * k + 5)
        k += 1
        if abs(new_u) < _EPS or abs(new_u) > abs(u) or k > 60:
            break
        u, v = new_u, new_v
    pref = math.exp(-zeta) / (2 * math.sqrt(math.pi))
    return pref * s / x ** 0.25, -pref * sp * x ** 0.25


def airy_ai(x: float) -> float:
    return _airy(x)[0]


def airy_ai_prime(x: float) -> float:
    return _airy(x)[1]


def _airy(x: float) -> tuple[float, float]:
    x = float(x)
    if x < 0:
        raise DomainError("Airy functions are only provided for x >= 0")
    if x <= _AIRY_SERIES_MAX:
        return _airy_maclaurin(x)
    if x <= _AIRY_ASYMP_MIN:
        zeta = 2.0 / 3.0 * x ** 1.5
        ai = math.sqrt(x / 3) * bessel_k(1 / 3, zeta) / math.pi
        aip = -x / (math.pi * math.sqrt(3)) * bessel_k(2 / 3, zeta)
        return ai, aip
    return _airy_asymptotic(x)


# ---------------------------------------------------------------- Bessel K

def bessel_k(nu: float, z: float) -> float:
    """K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt by the trapezoid rule.

    The integrand decays doubly exponentially, so the rule converges
    geometrically in the step size.
    """
    if z <= 0:
        raise DomainError("bessel_k needs z > 0")
    # e^{-z (cosh t - 1)} < 1e-18 once z e^t / 2 > z + 42
    tmax = math.log(2 * (z + 42.0) / z) + 1.0
    h = 0.05
    t = np.arange(0.0, tmax + h, h)
    vals = np.exp(-z * (np.cosh(t) - 1.0)) * np.cosh(nu * t)
    return float(h * (vals.sum() - 0.5 * vals[0])) * math.exp(-z)


# ---------------------------------------------------------------- Kummer

def hyp1f1(a: float, b: float, x: float) -> float:
    """Kummer M(a, b, x) by its power series (x >= 0 moderate)."""
    if _is_nonpos_int(b):
        raise DomainError(f"1F1 undefined for b = {b}")
    total, term = 1.0, 1.0
    for k in range(_MAXTERMS):
        term *= (a + k) * x / ((b + k) * (k + 1))
        total += term
        if term == 0.0 or abs(term) < _EPS * abs(total):
            return total
    raise ConvergenceError("1F1 series did not converge", estimate=total)


@lru_cache(maxsize=64)
def _laguerre_rule(alpha: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    # Golub-Welsch for the weight s^alpha e^{-s}
    k = np.arange(n)
    diag = 2 * k + alpha + 1
    off = np.sqrt((k[1:]) * (k[1:] + alpha))
    J = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    nodes, vecs = np.linalg.eigh(J)
    weights = math.gamma(alpha + 1) * vecs[0] ** 2
    return nodes, weights


def _kummer_u_laguerre(a: float, b: float, x: float) -> float:
    # U = x^{-a}/Gamma(a) int_0^inf s^{a-1} (1 + s/x)^{b-a-1} e^{-s} ds, a > 0
    vals = []
    for n in (120, 160):
        nodes, weights = _laguerre_rule(a - 1.0, n)
        vals.append(float(np.dot(weights, (1.0 + nodes / x) ** (b - a - 1.0))))
    if abs(vals[1] - vals[0]) > 1e-13 * abs(vals[1]):
        raise ConvergenceError("Gauss-Laguerre rule for U did not settle", estimate=vals[1])
    return vals[1] * x ** (-a) / math.gamma(a)


def _kummer_u_asymptotic(a: float, b: float, x: float) -> float:
    total, term = 1.0, 1.0
    for s in range(_MAXTERMS):
        new = term * (a + s) * (a - b + 1 + s) / ((s + 1) * -x)
        if abs(new) > abs(term):
            # smallest term reached: accept if it is already negligible
            if abs(term) < 1e-14 * abs(total):
                return total * x ** (-a)
            break
        term = new
        total += term
        if term == 0.0 or abs(term) < _EPS * abs(total):
            return total * x ** (-a)
    raise ConvergenceError("asymptotic series for U stalled", estimate=total * x ** (-a))


_U_SERIES_MAX = 1.0
_U_ASYMP_MIN = 40.0


def kummer_u(a: float, b: float, x: float) -> float:
    """Confluent hypergeometric function of the second kind U(a, b, x), x > 0."""
    a, b, x = float(a), float(b), float(x)
    if x <= 0:
        raise DomainError("kummer_u needs x > 0")
    if b == math.floor(b):
        raise DomainError(f"kummer_u connection formula has a pole at integer b = {b}")
    if a == 0:
        return 1.0
    if _is_nonpos_int(a):
        n = int(-a)
        # U(-n, b, x) = (-1)^n (b)_n M(-n, b, x), a polynomial
        return (-1) ** n * math.prod(b + i for i in range(n)) * hyp1f1(a, b, x)
    if x <= _U_SERIES_MAX:
        t1 = math.gamma(1 - b) * rgamma(a - b + 1) * hyp1f1(a, b, x)
        t2 = math.gamma(b - 1) * rgamma(a) * x ** (1 - b) * hyp1f1(a - b + 1, 2 - b, x)
        return t1 + t2
    if x > _U_ASYMP_MIN:
        try:
            return _kummer_u_asymptotic(a, b, x)
        except ConvergenceError:
            pass  # fall through to the integral representation
    if a > 0:
        return _kummer_u_laguerre(a, b, x)
    a2 = a - b + 1
    if a2 > 0:
        return x ** (1 - b) * _kummer_u_laguerre(a2, 2 - b, x)
    raise DomainError(f"kummer_u(a={a}, b={b}) unsupported for x > 1")


# ---------------------------------------------------------------- Gauss 2F1

def _2f1_series(a: float, b: float, c: float, z: float, maxterms: int = _MAXTERMS) -> float:
    total, term = 1.0, 1.0
    for k in range(maxterms):
        term *= (a + k) * (b + k) * z / ((c + k) * (k + 1))
        total += term
        if term == 0.0 or abs(term) < _EPS * abs(total):
            return total
    raise ConvergenceError("2F1 series did not converge", estimate=total)


def _near_int(s: float) -> bool:
    return abs(s - round(s)) < 1e-9


def gauss_2f1_near_one(a: float, b: float, c: float, w: float) -> tuple[float, float]:
    """Return (A, B) with 2F1(a, b; c; 1 - w) = A + w^{c-a-b} B.

    Uses the z -> 1 - z connection formula; c - a - b must not be an integer.
    Splitting off the power lets callers cancel it analytically.
    """
    s = c - a - b
    if _near_int(s):
        raise DomainError("z -> 1-z transformation needs non-integer c-a-b")
    g1 = math.gamma(c) * math.gamma(s) * rgamma(c - a) * rgamma(c - b)
    g2 = math.gamma(c) * math.gamma(-s) * rgamma(a) * rgamma(b)
    A = g1 * _2f1_series(a, b, 1 - s, w) if g1 else 0.0
    B = g2 * _2f1_series(c - a, c - b, 1 + s, w) if g2 else 0.0
    return A, B


def gauss_2f1(a: float, b: float, c: float, z: float) -> float:
    """2F1(a, b; c; z) for real 0 <= z <= 1."""
    a, b, c, z = float(a), float(b), float(c), float(z)
    if _is_nonpos_int(c):
        raise DomainError(f"2F1 undefined for c = {c}")
    if not 0 <= z <= 1:
        raise DomainError("gauss_2f1 is provided for 0 <= z <= 1")
    if z == 1:
        if c - a - b <= 0:
            raise ConvergenceError("2F1 diverges at z = 1 when c-a-b <= 0", estimate=math.inf)
        return math.gamma(c) * math.gamma(c - a - b) * rgamma(c - a) * rgamma(c - b)
    if z <= 0.5:
        return _2f1_series(a, b, c, z)
    if _near_int(c - a - b):
        # logarithmic case: the connection formula degenerates, sum directly
        return _2f1_series(a, b, c, z, maxterms=200_000)
    w = 1.0 - z
    A, B = gauss_2f1_near_one(a, b, c, w)
    return A + w ** (c - a - b) * B


# ---------------------------------------------------------------- incomplete Gamma

def gamma_upper(s: float, x: float) -> float:
    """Upper incomplete Gamma function Gamma(s, x) for s > 0, x >= 0."""
    if s <= 0:
        raise DomainError("gamma_upper needs s > 0")
    if x < 0:
        raise DomainError("gamma_upper needs x >= 0")
    if x == 0:
        return math.gamma(s)
    if x < s + 1:
        # lower gamma by its series, then complement
        term = total = 1.0 / s
        for k in range(1, _MAXTERMS):
            term *= x / (s + k)
            total += term
            if abs(term) < _EPS * total:
                break
        return math.gamma(s) - total * math.exp(-x + s * math.log(x))
    # modified Lentz on the continued fraction
    tiny = 1e-300
    bcf = x + 1 - s
    C, D = 1 / tiny, 1 / bcf
    h = D
    for i in range(1, _MAXTERMS):
        an = -i * (i - s)
        bcf += 2
        D = an * D + bcf
        D = tiny if abs(D) < tiny else D
        C = bcf + an / C
        C = tiny if abs(C) < tiny else C
        D = 1 / D
        delta = C * D
        h *= delta
        if abs(delta - 1) < 1e-16:
            return math.exp(-x + s * math.log(x)) * h
    raise ConvergenceError("incomplete Gamma continued fraction stalled", estimate=h)
