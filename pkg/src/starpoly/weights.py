"""Orthogonality weights U0, U1 on [0, b), the 3-star weights and their moments.

All weights are normalized so that int_0^b U0 = 1 and int_0^b x U1 = 1, which
for Case A means U0 = 3 Ai and U1 = -3 Ai'. A non-canonical gamma1 = r times
the canonical one dilates the support by s = r^{1/3}:
U0(x) -> U0(x/s)/s and U1(x) -> U1(x/s)/s^2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import special as sf
from .errors import DomainError
from .quadrature import integrate_half_line, tanh_sinh
from .recurrence import Case, FamilyParams, validate_params

OMEGA = cmath.exp(2j * math.pi / 3)
_G13, _G23 = math.gamma(1 / 3), math.gamma(2 / 3)


@dataclass(frozen=True)
class WeightSpec:
    params: FamilyParams
    k: int
    b: float = field(init=False)

    def __post_init__(self):
        if self.k not in (0, 1):
            raise ValueError("k must be 0 or 1")
        p = self.params
        # the weight formulas stay valid on the rho = 0 boundary of Case C (Faber)
        bad = [v for v in validate_params(p).violations
               if not (p.case is Case.C and p.rho == 0 and v.startswith("rho > 0"))]
        if bad:
            raise DomainError("; ".join(bad))
        object.__setattr__(self, "b", dilation(self.params) if self.params.case is Case.C else math.inf)


def dilation(params: FamilyParams) -> float:
    return float(params.scale) ** (1 / 3)


# ---------------------------------------------------------------- per-case kernels

def _case_a(k: int, x: float) -> float:
    return 3 * sf.airy_ai(x) if k == 0 else -3 * sf.airy_ai_prime(x)


def _kummer_b(mu: float, k: int, x: float) -> float:
    """B1 kernel with parameter mu (B2 reuses it through shifted parameters)."""
    t = x ** 3
    if k == 0:
        const = 3 * math.gamma((mu + 2) / 3) / (_G13 * _G23)
        if t == 0:
            # U(a, 2/3, 0) = Gamma(1/3) / Gamma(a + 1/3)
            return const * _G13 * sf.rgamma(mu / 3 + 1 / 3)
        return const * math.exp(-t) * sf.kummer_u(mu / 3, 2 / 3, t)
    const = 9 * math.gamma((mu + 5) / 3) / (_G13 * _G23)
    if t == 0:
        # x^2 U(a, 5/3, x^3) -> Gamma(2/3) / Gamma(a)
        return const * _G23 * sf.rgamma(mu / 3 + 1)
    return const * x * x * math.exp(-t) * sf.kummer_u(mu / 3 + 1, 5 / 3, t)


def _case_c(mu: float, rho: float, k: int, x: float, u: float) -> float:
    """Case C kernel; ``u`` = 1 - x is passed separately for accuracy near 1."""
    w = u * (3 - 3 * u + u * u)  # 1 - x^3
    t = x ** 3
    p = (mu + rho - 1) / 3
    a = mu / 3 + k
    b, c = (rho + 1) / 3, (mu + rho + 2) / 3
    g = math.gamma(rho / 3 + 1) / math.gamma(c)
    if k == 0:
        const = 3 * math.gamma((mu + 2) / 3) * g / (_G13 * _G23)
    else:
        const = 3 * math.gamma((mu + 5) / 3) * g / (_G23 * math.gamma(4 / 3))
    xk = x * x if k else 1.0
    if w <= 0.5:
        F = xk * sf.gauss_2f1(a, b, c, w)
    else:
        # split off t^{c-a-b} so that x^2 t^{-2/3} is formed exactly for k = 1
        A, B = sf.gauss_2f1_near_one(a, b, c, t)
        # for k = 1, c - a - b = -2/3 and x^2 t^{c-a-b} = 1 exactly
        F = xk * A + (B if k else t ** (c - a - b) * B)
    return const * w ** p * F


def _canonical(params: FamilyParams, k: int, x: float, u: float | None = None) -> float:
    case = params.case
    if case is Case.A:
        return _case_a(k, x)
    if case is Case.B1:
        return _kummer_b(float(params.mu), k, x)
    if case is Case.B2:
        rho = float(params.rho)
        return _kummer_b(rho + 1 if k == 0 else rho - 2, k, x)
    if u is None:
        u = 1.0 - x
    return _case_c(float(params.mu), float(params.rho), k, x, u)


def weight(spec: WeightSpec, x: float) -> float:
    """U_k(x) for x in [0, b)."""
    x = float(x)
    if not 0 <= x < spec.b:
        raise DomainError(f"x = {x} outside the support [0, {spec.b})")
    s = dilation(spec.params)
    return _canonical(spec.params, spec.k, x / s) / s ** (1 + spec.k)


def weight_pair(params: FamilyParams, x: float) -> tuple[float, float]:
    return weight(WeightSpec(params, 0), x), weight(WeightSpec(params, 1), x)


# ---------------------------------------------------------------- star weight

def _ray_index(z: complex, b: float) -> tuple[int, float]:
    r = abs(z)
    if r >= b:
        raise DomainError(f"|z| = {r} beyond the support radius {b}")
    if r == 0:
        return 0, 0.0
    for j in range(3):
        if abs(z * OMEGA ** (-j) - r) <= 1e-12 * r:
            return j, r
    raise DomainError(f"z = {z} is not on the 3-star")


def _ray_phase(spec: WeightSpec, j: int) -> complex:
    return OMEGA ** (-j * (spec.k + 1)) / 3


def star_weight(spec: WeightSpec, z: complex) -> complex:
    """W_k on the star with every ray oriented outward from the origin.

    On the ray omega^j [0, b), W_k(omega^j x) = omega^{-j(k+1)} U_k(x) / 3, so
    that omega^{j(k+1)} W_k(omega^j z) = W_k(z).
    """
    j, x = _ray_index(complex(z), spec.b)
    return _ray_phase(spec, j) * weight(spec, x)


def star_moment(spec: WeightSpec, m: int, tol: float = 1e-12) -> complex:
    """<u_k, z^m> as the sum of the three ray integrals of z^m W_k(z) dz.

    With z = omega^j x the j-th integral is omega^{j(m+1)} times the phase of
    W_k on that ray times int_0^b x^m U_k(x) dx.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    radial = _radial_moment(spec, m, tol)
    return sum(OMEGA ** (j * (m + 1)) * _ray_phase(spec, j) for j in range(3)) * radial


# ---------------------------------------------------------------- quadrature

def _radial_moment(spec: WeightSpec, power: int, tol: float) -> float:
    # int_0^b x^power U_k(x) dx, done in the canonical variable
    params, k = spec.params, spec.k
    if params.case is Case.C:
        kern = np.vectorize(lambda x, u: x ** power * _canonical(params, k, x, u))
        val = tanh_sinh(kern, tol=tol)
    else:
        kern = np.vectorize(lambda x: x ** power * _canonical(params, k, x))
        val = integrate_half_line(kern, tol=tol)
    return val * dilation(params) ** (power - spec.k)


def quadrature_moment(spec: WeightSpec, n: int, tol: float = 1e-12) -> float:
    """int_0^b x^{3n+k} U_k(x) dx by quadrature in the canonical scale."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _radial_moment(spec, 3 * n + spec.k, tol)


def mellin_kummer(a: float, c: float, b: float, tol: float = 1e-12) -> tuple[float, float]:
    """(quadrature, closed form) for int_0^inf t^{b-1} U(a, c; t) e^{-t} dt.

    The quadrature runs in x with t = x^3. The closed form is
    Gamma(b) Gamma(b-c+1) / Gamma(a+b-c+1).
    """
    kern = np.vectorize(lambda x: 3 * x ** (3 * b - 1) * sf.kummer_u(a, c, x ** 3) * math.exp(-x ** 3))
    quad = integrate_half_line(kern, tol=tol)
    exact = math.gamma(b) * math.gamma(b - c + 1) * sf.rgamma(a + b - c + 1)
    return quad, exact


# ---------------------------------------------------------------- particular cases

def b1_particular(mu: float, k: int, x: float) -> float:
    """Closed forms of the Case B1 weights at mu in {-1/2, 0, 1, 2} (canonical scale).

    For mu = 2, k = 1 the expression used is
    (3 sqrt3 Gamma(1/3) / pi) (e^{-x^3} - x^2 Gamma(1/3, x^3)); the compact
    Gamma(2/3, x^3) form does not match the generic weight.
    """
    t = x ** 3
    r3 = math.sqrt(3)
    if mu == -0.5:
        if k == 0:
            return 1.5 * math.sqrt(3 / math.pi) * math.exp(-t) * sf.kummer_u(-1 / 6, 2 / 3, t)
        return 9 * r3 * math.exp(-t / 2) * x * sf.bessel_k(1 / 3, t / 2) / (4 * math.pi)
    if mu == 0:
        if k == 0:
            return 3 / _G13 * math.exp(-t)
        return 9 * math.gamma(5 / 3) / (_G13 * _G23) * sf.gamma_upper(2 / 3, t)
    if mu == 1:
        if k == 0:
            return 3 * r3 * math.exp(-t / 2) * math.sqrt(x) * sf.bessel_k(1 / 6, t / 2) / (2 * math.pi ** 1.5)
        return 9 * r3 * math.exp(-t) * sf.kummer_u(2 / 3, 1 / 3, t) / (2 * math.pi)
    if mu == 2:
        if k == 0:
            return r3 * _G13 / (2 * math.pi) * sf.gamma_upper(1 / 3, t)
        return 3 * r3 * _G13 / math.pi * (math.exp(-t) - x * x * sf.gamma_upper(1 / 3, t))
    raise DomainError(f"no particular-case formula for mu = {mu}")


def b1_mu2_u1_printed(x: float) -> float:
    """The compact incomplete-Gamma expression of U1 at mu = 2 as printed."""
    return 2 * math.sqrt(3) * _G13 / math.pi * sf.gamma_upper(2 / 3, x ** 3)


def chebyshev_type(k: int, x: float) -> float:
    """Case C weights at (mu, rho) = (1, 3/2)."""
    q = math.sqrt(1 - x ** 3)
    if k == 0:
        return 9 * math.sqrt(3) / (4 * math.pi) * ((1 + q) ** (1 / 3) - (1 - q) ** (1 / 3))
    return 27 * math.sqrt(3) / (8 * math.pi) * ((1 + q) ** (2 / 3) - (1 - q) ** (2 / 3))


def faber(k: int, x: float) -> float:
    """Case C weights at (mu, rho) = (-1/2, 0)."""
    q = math.sqrt(1 - x ** 3)
    if k == 0:
        return 3 * math.sqrt(3) * ((1 - q) ** (1 / 3) + (1 + q) ** (1 / 3)) / (4 * math.pi * q)
    return 9 * math.sqrt(3) * ((1 - q) ** (2 / 3) + (1 + q) ** (2 / 3)) / (8 * math.pi * q)


def sample(params: FamilyParams, xs) -> list[tuple[float, float, float]]:
    """Rows (x, U0(x), U1(x)) on a user grid."""
    s0, s1 = WeightSpec(params, 0), WeightSpec(params, 1)
    return [(float(x), weight(s0, x), weight(s1, x)) for x in xs]
