"""Third-order differential equation satisfied by each P_n, in exact arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateParameterError, RecurrenceMismatchError
from .polynomials import SymmetricPolynomial, generate
from .recurrence import Case, FamilyParams, gamma, theta


@dataclass(frozen=True)
class OdeCoefficients:
    """(a x^3 - b) y''' + c x^2 y'' + d x y' = e y."""

    n: int
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    def as_tuple(self) -> tuple[Fraction, ...]:
        return (self.a, self.b, self.c, self.d, self.e)


def _check_initial_values(params: FamilyParams) -> None:
    g1, g2, g3 = (gamma(params, k) for k in (1, 2, 3))
    if theta(params, 1) != 3 * (g1 + g2) / (4 * g2):
        raise RecurrenceMismatchError("theta_1 disagrees with 3(g1+g2)/(4 g2)")
    if theta(params, 2) != 3 * (g1 + g2) / (10 * g3) + Fraction(4, 5):
        raise RecurrenceMismatchError("theta_2 disagrees with 3(g1+g2)/(10 g3) + 4/5")


def ode_coefficients(params: FamilyParams, n: int) -> OdeCoefficients:
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_initial_values(params)
    tn, tn1 = theta(params, n), theta(params, n + 1)
    # (n-1) theta_{n-1} vanishes at n = 1 whatever theta_0 would be
    prev = (n - 1) * theta(params, n - 1) if n > 1 else Fraction(0)
    a = (tn - 1) * (tn1 - 1)
    b = gamma(params, n) * (prev - n + 2) * (n * tn - n + 1) * ((n + 1) * tn1 - n) / (n * (n + 1))
    c = tn * tn1 - 1 - (n - 3) * (tn - 1) * (tn1 - 1)
    d = n * tn1 - (n - 1) * tn * (2 * tn1 - 1)
    e = n * tn1
    return OdeCoefficients(n, a, b, c, d, e)


def _apply(coef: tuple[Fraction, ...], y: SymmetricPolynomial) -> SymmetricPolynomial:
    """Return (A x^3 - B) y3 + C x^2 y2 + D x y1 - E y for the tuple (A, B, C, D, E)."""
    A, B, C, D, E = coef
    out = SymmetricPolynomial.zero(y.degree) - E * y
    d = y
    for order, (lead, shift) in enumerate(((D, 1), (C, 2), (A, 3)), start=1):
        if y.degree < order:
            break
        d = d.derivative()
        out = out + lead * d.shift(shift)
        if order == 3:
            out = out - B * d
    return out


def ode_residual(params: FamilyParams, n: int, P: SymmetricPolynomial | None = None) -> SymmetricPolynomial:
    """Residual of the equation for P_n; the zero polynomial when it holds."""
    if n == 0:
        return SymmetricPolynomial.zero(0)
    if P is None:
        P = generate(params, n)[n]
    co = ode_coefficients(params, n)
    return _apply(co.as_tuple(), P)


def q_ode_coefficients(params: FamilyParams, n: int) -> tuple[Fraction, ...]:
    co = ode_coefficients(params, n)
    return (co.a, co.b, co.c + 3 * co.a, co.d + 2 * co.c, co.e - co.d)


def q_ode_residual(params: FamilyParams, n: int, P: SymmetricPolynomial | None = None) -> SymmetricPolynomial:
    """Residual of the once-differentiated equation at index n.

    Differentiating the equation of P_n gives an equation whose polynomial
    solution is P_n' = n Q_{n-1}; the residual is evaluated on Q_{n-1}.
    """
    if n == 0:
        return SymmetricPolynomial.zero(0)
    if P is None:
        P = generate(params, n)[n]
    Q = P.derivative() * Fraction(1, n)
    return _apply(q_ode_coefficients(params, n), Q)


def printed_case_ode(params: FamilyParams, n: int) -> tuple[Fraction, ...]:
    """Case-specific printed equations as (a, b, c, d, e) in the canonical scale.

    Case A: -y''' + x y' = n y. Case B1 and Case C forms are the expanded
    versions with their own global factor.
    """
    s = 1 if n % 2 == 0 else -1
    if params.case is Case.A:
        return (Fraction(0), Fraction(1), Fraction(0), Fraction(1), Fraction(n))
    if params.case is Case.B1:
        mu = params.mu
        return (Fraction(0), Fraction(2, 3), Fraction(2),
                2 * (mu + Fraction(3, 4) * (s + 3) - Fraction(n, 2)),
                2 * n * (mu + Fraction(n, 2) + Fraction(3 * s, 4) + Fraction(5, 4)))
    if params.case is Case.C:
        mu, rho = params.mu, params.rho
        d = Fraction(1, 8) * (8 * mu * rho + 14 * mu - 6 * n * n - 4 * n * (mu + rho + 2)
                              - 3 * s * (2 * mu - 2 * rho + 1) + 18 * rho + 27)
        e = Fraction(1, 16) * n * (4 * mu + 2 * n + 3 * s + 5) * (2 * n - 3 * s + 4 * rho + 3)
        return (Fraction(1), Fraction(1), mu + rho + 5, d, e)
    raise DegenerateParameterError("no case-specific printed equation for case B2")


def proportional(u: tuple[Fraction, ...], v: tuple[Fraction, ...]) -> bool:
    """True when u = lambda v for some nonzero lambda."""
    pivot = next((i for i, x in enumerate(v) if x != 0), None)
    if pivot is None or u[pivot] == 0:
        return False
    lam = u[pivot] / v[pivot]
    return all(x == lam * y for x, y in zip(u, v))
