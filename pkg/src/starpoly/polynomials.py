"""Exact threefold-symmetric polynomials, derivative families, cubic components
and terminating hypergeometric closed forms."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    DegenerateParameterError,
    PochhammerZeroError,
    RecurrenceMismatchError,
    SymmetryViolationError,
)
from .rational import format_rational, pochhammer
from .recurrence import Case, FamilyParams, gamma, gamma_tilde

_ZERO = Fraction(0)


@dataclass(frozen=True, eq=False)
class SymmetricPolynomial:
    """Polynomial supported on the powers ``x**(r + 3i)`` with ``r = degree % 3``.

    ``coeffs[i]`` is the coefficient of ``x**(r + 3i)``, so the list has
    ``degree // 3 + 1`` entries. ``degree`` is the nominal degree: the leading
    entry may be zero for intermediate results such as ODE residuals.
    """

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        cs = tuple(Fraction(c) for c in self.coeffs)
        if len(cs) != self.degree // 3 + 1:
            raise ValueError("coefficient count does not match degree")
        object.__setattr__(self, "coeffs", cs)

    @property
    def residue(self) -> int:
        return self.degree % 3

    @classmethod
    def zero(cls, degree: int) -> "SymmetricPolynomial":
        return cls(degree, (_ZERO,) * (degree // 3 + 1))

    @classmethod
    def monomial(cls, degree: int, c: Fraction = Fraction(1)) -> "SymmetricPolynomial":
        return cls(degree, (_ZERO,) * (degree // 3) + (Fraction(c),))

    @classmethod
    def from_dense(cls, dense: Sequence[Fraction] | Mapping[int, Fraction], degree: int | None = None):
        """Build from ``dense[k]`` = coefficient of ``x**k``; raises if the
        support is not on one residue class mod 3."""
        items = dense.items() if isinstance(dense, Mapping) else enumerate(dense)
        support = {int(k): Fraction(v) for k, v in items if v != 0}
        if degree is None:
            degree = max(support, default=0)
        r = degree % 3
        off = sorted(k for k in support if k % 3 != r or k > degree)
        if off:
            raise SymmetryViolationError(f"powers {off} lie off the residue class {r} mod 3")
        return cls(degree, tuple(support.get(r + 3 * i, _ZERO) for i in range(degree // 3 + 1)))

    def _support(self) -> frozenset:
        return frozenset((k, c) for k, c in self.coeff_map().items() if c)

    def __eq__(self, other) -> bool:
        # value equality: the nominal degree and padding zeros do not matter
        if not isinstance(other, SymmetricPolynomial):
            return NotImplemented
        return self._support() == other._support()

    def __hash__(self) -> int:
        return hash(self._support())

    def coeff_map(self) -> dict[int, Fraction]:
        r = self.residue
        return {r + 3 * i: c for i, c in enumerate(self.coeffs)}

    def dense(self) -> list[Fraction]:
        out = [_ZERO] * (self.degree + 1)
        for k, c in self.coeff_map().items():
            out[k] = c
        return out

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_monic(self) -> bool:
        return self.leading == 1

    def shift(self, k: int = 1) -> "SymmetricPolynomial":
        """Multiply by x**k."""
        d = self.degree + k
        lead_pad = (self.residue + k) // 3
        return SymmetricPolynomial(d, (_ZERO,) * lead_pad + self.coeffs)

    def derivative(self) -> "SymmetricPolynomial":
        if self.degree == 0:
            return SymmetricPolynomial.zero(0)
        r = self.residue
        cs = [(r + 3 * i) * c for i, c in enumerate(self.coeffs)]
        if r == 0:
            cs = cs[1:]
        return SymmetricPolynomial(self.degree - 1, tuple(cs))

    def _aligned(self, other: "SymmetricPolynomial"):
        if self.residue != other.residue:
            raise SymmetryViolationError("cannot add polynomials from different residue classes")
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (_ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (_ZERO,) * (n - len(other.coeffs))
        return max(self.degree, other.degree), a, b

    def __add__(self, other: "SymmetricPolynomial") -> "SymmetricPolynomial":
        d, a, b = self._aligned(other)
        return SymmetricPolynomial(d, tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "SymmetricPolynomial") -> "SymmetricPolynomial":
        d, a, b = self._aligned(other)
        return SymmetricPolynomial(d, tuple(x - y for x, y in zip(a, b)))

    def __mul__(self, c) -> "SymmetricPolynomial":
        c = Fraction(c)
        return SymmetricPolynomial(self.degree, tuple(c * x for x in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluate by Horner in x**3; works for Fraction, float or complex."""
        y = x * x * x
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * y + (c if isinstance(x, Fraction) else float(c))
        return acc * x ** self.residue

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "coeffs": [[str(k), format_rational(c)] for k, c in sorted(self.coeff_map().items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymmetricPolynomial":
        return cls.from_dense({int(k): Fraction(v) for k, v in data["coeffs"]}, int(data["degree"]))

    def __str__(self) -> str:
        terms = []
        for k, c in sorted(self.coeff_map().items(), reverse=True):
            if c:
                terms.append(f"({c})*x^{k}")
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class ComponentPolynomial:
    """Component P_n^{[j]} in the variable y = x**3; ``coeffs[i]`` multiplies y**i."""

    j: int
    n: int
    coeffs: tuple[Fraction, ...]

    def __call__(self, y):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * y + (c if isinstance(y, Fraction) else float(c))
        return acc

    def recompose(self) -> SymmetricPolynomial:
        return SymmetricPolynomial(3 * self.n + self.j, self.coeffs)


def generate(params: FamilyParams, N: int) -> list[SymmetricPolynomial]:
    """P_0..P_N from the three-term symmetric recurrence."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    P = [SymmetricPolynomial.monomial(d) for d in range(min(N, 2) + 1)]
    for n in range(2, N):
        P.append(P[n].shift() - gamma(params, n - 1) * P[n - 2])
    return P


def derivative_sequence(P: Sequence[SymmetricPolynomial], params: FamilyParams | None = None):
    """Q_n = P'_{n+1} / (n+1) for n = 0..len(P)-2.

    With ``params`` the third-order recurrence of the Q_n with the
    gamma-tilde coefficients is checked exactly.
    """
    Q = [P[n + 1].derivative() * Fraction(1, n + 1) for n in range(len(P) - 1)]
    if params is not None:
        for n in range(2, len(Q) - 1):
            rhs = Q[n].shift() - gamma_tilde(params, n - 1) * Q[n - 2]
            if rhs != Q[n + 1]:
                raise RecurrenceMismatchError(f"Q_{n + 1} breaks the gamma-tilde recurrence")
    return Q


def structure_coefficient(params: FamilyParams, n: int) -> Fraction:
    return (n + 1) * gamma(params, n + 2) - (n + 3) * gamma_tilde(params, n + 1)


def check_structure_relation(P, Q, params: FamilyParams, n: int) -> bool:
    """P_{n+3} == Q_{n+3} + ((n+1) gamma_{n+2} - (n+3) gamma~_{n+1}) Q_n."""
    return P[n + 3] == Q[n + 3] + structure_coefficient(params, n) * Q[n]


def cubic_components(P) -> ComponentPolynomial:
    """Return P_n^{[j]} with P(x) = x**j P_n^{[j]}(x**3).

    Accepts a :class:`SymmetricPolynomial` or a dense coefficient list/map.
    """
    if not isinstance(P, SymmetricPolynomial):
        P = SymmetricPolynomial.from_dense(P)
    return ComponentPolynomial(P.residue, P.degree // 3, P.coeffs)


def _g(params: FamilyParams, k: int) -> Fraction:
    return gamma(params, k) if k >= 1 else _ZERO


def component_recurrence(params: FamilyParams, j: int, n: int) -> tuple[Fraction, Fraction, Fraction]:
    """(beta_n, alpha_n, gamma_n) of the j-th component, as gamma products.

    alpha is defined for n >= 1 and gamma for n >= 1; entries outside that
    range are returned as 0 (they never enter the recurrence).
    """
    if j not in (0, 1, 2):
        raise IndexError("j must be 0, 1 or 2")
    if n < 0:
        raise IndexError("n must be nonnegative")
    g = lambda k: _g(params, k)  # noqa: E731
    m = 3 * n + j
    beta = g(m - 1) + g(m) + g(m + 1)
    alpha = g(m - 2) * g(m) + g(m - 1) * g(m - 3) + g(m - 2) * g(m - 1) if n >= 1 else _ZERO
    gam = g(m - 2) * g(m) * g(m + 2) if n >= 1 else _ZERO
    return beta, alpha, gam


def component_sequence(params: FamilyParams, j: int, N: int) -> list[ComponentPolynomial]:
    """P_0^{[j]}..P_N^{[j]} from the component four-term recurrence."""
    seq: list[list[Fraction]] = [[Fraction(1)]]
    for n in range(N):
        b, a, _ = component_recurrence(params, j, n)
        nxt = [_ZERO] + seq[n]
        for i, c in enumerate(seq[n]):
            nxt[i] -= b * c
        if n >= 1:
            for i, c in enumerate(seq[n - 1]):
                nxt[i] -= a * c
        if n >= 2:
            gm = component_recurrence(params, j, n - 1)[2]
            for i, c in enumerate(seq[n - 2]):
                nxt[i] -= gm * c
        seq.append(nxt)
    return [ComponentPolynomial(j, n, tuple(c)) for n, c in enumerate(seq)]


def pfq_terminating(numerator_params: Iterable, denominator_params: Iterable, scale) -> list[Fraction]:
    """Coefficients (ascending in y) of sum_k prod (a_i)_k / prod (b_j)_k (scale y)^k / k!.

    Exactly one numerator parameter must be a nonpositive integer -n.
    """
    num = [Fraction(a) for a in numerator_params]
    den = [Fraction(b) for b in denominator_params]
    scale = Fraction(scale)
    stops = [i for i, a in enumerate(num) if a <= 0 and a.denominator == 1]
    if len(stops) != 1:
        raise ValueError("need exactly one nonpositive integer numerator parameter")
    n = int(-num[stops[0]])
    out = [Fraction(1)]
    term = Fraction(1)
    for k in range(n):
        for b in den:
            if b + k == 0:
                raise PochhammerZeroError(f"denominator parameter {b} hits zero at k={k}")
        ratio = Fraction(1)
        for a in num:
            ratio *= a + k
        for b in den:
            ratio /= b + k
        term = term * ratio * scale / (k + 1)
        out.append(term)
    return out


_DENOMS = {0: (Fraction(1, 3), Fraction(2, 3)), 1: (Fraction(2, 3), Fraction(4, 3)), 2: (Fraction(4, 3), Fraction(5, 3))}


def _closed_form_parameters(params: FamilyParams, n: int, j: int):
    """Upper parameters (besides -n), lower parameters, argument scale and the
    printed normalizing prefactor, for the canonical scale."""
    s = 1 if n % 2 == 0 else -1
    b1, b2 = _DENOMS[j]
    mu, rho = params.mu, params.rho
    if params.case is Case.A:
        return [], [b1, b2], Fraction(1, 9), (-9) ** n * pochhammer(b1, n) * pochhammer(b2, n)
    mu_part = {0: Fraction(s, 4) + Fraction(5, 12), 1: Fraction(-s, 4) + Fraction(11, 12),
               2: Fraction(s, 4) + Fraction(17, 12)}[j]
    rho_part = {0: Fraction(-s, 4) + Fraction(1, 4), 1: Fraction(s, 4) + Fraction(3, 4),
                2: Fraction(-s, 4) + Fraction(5, 4)}[j]
    half = Fraction(n, 2)
    uppers = []
    if params.case in (Case.B1, Case.C):
        uppers.append(half + mu_part + mu / 3)
    if params.case in (Case.B2, Case.C):
        uppers.append(half + rho_part + rho / 3)
    pref = Fraction((-1) ** n) * pochhammer(b1, n) * pochhammer(b2, n)
    for a in uppers:
        pa = pochhammer(a, n)
        if pa == 0:
            raise DegenerateParameterError(f"prefactor Pochhammer ({a})_{n} vanishes")
        pref /= pa
    return uppers, [b1, b2], Fraction(1), pref


def hypergeometric_closed_form(params: FamilyParams, degree: int) -> SymmetricPolynomial:
    """P_degree from its terminating hypergeometric representation.

    A uses a 1F2, B1 and B2 a 2F2 and C a 3F2 in y = x**3. The B2 upper
    parameter is the rho-part of the C formula, which is also the derivative
    family of B1 at mu = rho - 2. The leading coefficient of the series is
    checked against the printed prefactor. A non-canonical gamma1 is applied
    by dilation afterwards.
    """
    n, j = divmod(degree, 3)
    try:
        uppers, lowers, scale, pref = _closed_form_parameters(params, n, j)
    except DegenerateParameterError as exc:
        warnings.warn(f"{exc}; falling back to the recurrence", RuntimeWarning, stacklevel=2)
        return generate(params, degree)[degree]
    series = pfq_terminating([-n] + uppers, lowers, scale)
    lead = series[-1]
    if pref * lead != 1:
        raise RecurrenceMismatchError(
            f"printed prefactor {pref} does not normalize the leading coefficient {lead}")
    cs = [c / lead for c in series]
    r = params.scale
    cs = [c * r ** (n - i) for i, c in enumerate(cs)]
    return SymmetricPolynomial(degree, tuple(cs))


# Closed forms for the component recurrence coefficients (canonical scale).
# Index m of the component is split as m = 2n or m = 2n + 1.

def _tabulated_case_a(j: int, m: int):
    b = 3 * (j * j + 6 * j * m + j + 9 * m * m) + 9 * m + 2
    a = 3 * (j + 3 * m - 2) * (j + 3 * m - 1) ** 2 * (j + 3 * m)
    g = 1
    for i in range(-2, 4):
        g *= j + 3 * m + i
    return b, a, g


def _tabulated_case_b1(mu, j: int, m: int):
    n, odd = divmod(m, 2)
    F = Fraction
    if j == 0:
        if not odd:
            b = 2 * (mu + 3 * n * (3 * mu + 9 * n * (2 * mu + 14 * n + 3) - 2) - 1) / F(3) / ((mu + 9 * n - 1) * (mu + 9 * n + 2))
            a = 4 * n * (3 * n - 1) * (6 * n - 1) * (-3 * mu ** 2 - 5 * mu + 702 * n ** 3 + 27 * (8 * mu - 9) * n ** 2
                                                      + 3 * (6 * (mu - 3) * mu - 17) * n + 8) / F(3) / (
                (mu + 9 * n - 4) * (mu + 9 * n - 1) ** 2 * (mu + 9 * n + 2))
            g = 8 * n * (2 * n + 1) * (3 * n - 1) * (3 * n + 1) * (6 * n - 1) * (6 * n + 1) * (mu + 3 * n - 1) * (mu + 3 * n) * (
                mu + 3 * n + 1) / F(3) / ((mu + 9 * n - 4) * (mu + 9 * n - 1) ** 2 * (mu + 9 * n + 2) ** 2 * (mu + 9 * n + 5))
        else:
            b = 2 * (19 * mu + 3 * n * (21 * mu + 9 * n * (2 * mu + 10 * n + 17) + 77) + 32) / F(3) / ((mu + 9 * n + 2) * (mu + 9 * n + 8))
            a = 4 * (2 * n + 1) * (3 * n + 1) * (6 * n + 1) * (2 * mu + 3 * (mu ** 2 + 117 * n ** 3 + 9 * (4 * mu + 9) * n ** 2
                                                                          + (3 * mu * (mu + 6) + 5) * n) - 5) / F(3) / (
                (mu + 9 * n - 1) * (mu + 9 * n + 2) ** 2 * (mu + 9 * n + 5))
            g = F(8 * (n + 1) * (2 * n + 1) * (3 * n + 1) * (3 * n + 2) * (6 * n + 1) * (6 * n + 5)) / 3 / (
                (mu + 9 * n + 2) * (mu + 9 * n + 5) * (mu + 9 * n + 8))
    elif j == 1:
        if not odd:
            b = (8 * (mu - 1) + 6 * n * (9 * mu + 9 * n * (2 * mu + 10 * n + 7) + 5)) / F(3) / ((mu + 9 * n - 1) * (mu + 9 * n + 5))
            a = 4 * n * (36 * n ** 2 - 1) * (-4 * mu + 3 * n * (3 * (mu - 2) * mu + 117 * n ** 2 + 36 * (mu - 1) * n - 10) + 4) / F(3) / (
                (mu + 9 * n - 4) * (mu + 9 * n - 1) ** 2 * (mu + 9 * n + 2))
            g = F(8 * n * (2 * n + 1) * (3 * n + 1) * (3 * n + 2) * (6 * n - 1) * (6 * n + 1)) / 3 / (
                (mu + 9 * n - 1) * (mu + 9 * n + 2) * (mu + 9 * n + 5))
        else:
            b = 2 * (31 * mu + 3 * n * (27 * mu + 9 * n * (2 * mu + 14 * n + 31) + 202) + 143) / F(3) / ((mu + 9 * n + 5) * (mu + 9 * n + 8))
            a = 4 * (2 * n + 1) * (3 * n + 1) * (3 * n + 2) * ((mu + 2) * (9 * mu + 37) + 702 * n ** 3 + 27 * (8 * mu + 43) * n ** 2
                                                               + 3 * (6 * mu * (mu + 13) + 187) * n) / F(3) / (
                (mu + 9 * n + 2) * (mu + 9 * n + 5) ** 2 * (mu + 9 * n + 8))
            g = 8 * (n + 1) * (2 * n + 1) * (3 * n + 1) * (3 * n + 2) * (6 * n + 5) * (6 * n + 7) * (mu + 3 * n + 1) * (mu + 3 * n + 2) * (
                mu + 3 * n + 3) / F(3) / ((mu + 9 * n + 2) * (mu + 9 * n + 5) ** 2 * (mu + 9 * n + 8) ** 2 * (mu + 9 * n + 11))
    else:
        if not odd:
            b = (20 * (mu + 2) + 6 * n * (15 * mu + 9 * n * (2 * mu + 14 * n + 17) + 58)) / F(3) / ((mu + 9 * n + 2) * (mu + 9 * n + 5))
            a = 4 * n * (3 * n + 1) * (6 * n + 1) * (mu + 3 * (mu ** 2 + 234 * n ** 3 + 9 * (8 * mu + 17) * n ** 2
                                                              + (6 * mu * (mu + 5) + 7) * n) - 10) / F(3) / (
                (mu + 9 * n - 1) * (mu + 9 * n + 2) ** 2 * (mu + 9 * n + 5))
            g = 8 * n * (2 * n + 1) * (3 * n + 1) * (3 * n + 2) * (6 * n + 1) * (6 * n + 5) * (mu + 3 * n) * (mu + 3 * n + 1) * (
                mu + 3 * n + 2) / F(3) / ((mu + 9 * n - 1) * (mu + 9 * n + 2) ** 2 * (mu + 9 * n + 5) ** 2 * (mu + 9 * n + 8))
        else:
            b = 2 * (46 * mu + 3 * n * (33 * mu + 9 * n * (2 * mu + 10 * n + 27) + 209) + 170) / F(3) / ((mu + 9 * n + 5) * (mu + 9 * n + 11))
            a = 4 * (2 * n + 1) * (3 * n + 2) * (6 * n + 5) * (2 * (mu + 2) * (3 * mu + 10) + 351 * n ** 3 + 54 * (2 * mu + 11) * n ** 2
                                                               + 3 * (3 * mu * (mu + 14) + 98) * n) / F(3) / (
                (mu + 9 * n + 2) * (mu + 9 * n + 5) ** 2 * (mu + 9 * n + 8))
            g = F(8 * (n + 1) * (2 * n + 1) * (3 * n + 2) * (3 * n + 4) * (6 * n + 5) * (6 * n + 7)) / 3 / (
                (mu + 9 * n + 5) * (mu + 9 * n + 8) * (mu + 9 * n + 11))
    return b, a, g


def _tabulated_case_c(mu, rho, j: int, m: int, printed: bool = False):
    n, odd = divmod(m, 2)
    if j == 0:
        if not odd:
            b = (2 * (2 * n + 1) * (3 * n + 1) * (6 * n + 1) / ((9 * n + mu + 2) * (9 * n + rho + 3))
                 - 4 * n * (3 * n - 1) * (6 * n - 1) / ((9 * n + mu - 1) * (9 * n + rho - 3)))
            a = 6 * n * (6 * n - 2) * (6 * n - 1) / ((9 * n + mu - 4) * (9 * n + mu - 1) ** 2 * (9 * n + rho - 3) ** 2 * (9 * n + rho)) * (
                (6 * n - 1) * (3 * n + mu - 1) * (3 * n + rho - 1)
                + (6 * n - 3) * (9 * n + mu - 1) * (3 * n + rho - 2) * (3 * n + rho - 1) / (9 * n + rho - 6)
                + (6 * n + 1) * (3 * n + mu - 1) * (3 * n + mu) * (9 * n + rho - 3) / (9 * n + mu + 2))
            g = 6 * n * (6 * n - 2) * (6 * n - 1) * (6 * n + 1) * (6 * n + 2) * (6 * n + 3) * (mu + 3 * n - 1) * (mu + 3 * n) * (mu + 3 * n + 1) / (
                (mu + 9 * n - 4) * (mu + 9 * n - 1) ** 2 * (mu + 9 * n + 2) ** 2 * (mu + 9 * n + 5) * (9 * n + rho - 3) * (9 * n + rho) * (9 * n + rho + 3))
        else:
            b = (4 * (n + 1) * (3 * n + 2) * (6 * n + 5) / ((9 * n + mu + 8) * (9 * n + rho + 6))
                 - 2 * (2 * n + 1) * (3 * n + 1) * (6 * n + 1) / ((9 * n + mu + 2) * (9 * n + rho + 3)))
            a = 6 * (2 * n + 1) * (6 * n + 1) / ((9 * n + mu + 2) ** 2 * (9 * n + mu + 5) * (9 * n + rho) * (9 * n + rho + 3) ** 2) * (
                2 * (3 * n + mu + 1) * (3 * n + rho) * (3 * n + 1) ** 2
                + 6 * n * (3 * n + mu) * (3 * n + mu + 1) * (9 * n + rho + 3) * (3 * n + 1) / (9 * n + mu - 1)
                + (3 * n + 2) * (6 * n + 2) * (9 * n + mu + 2) * (3 * n + rho) * (3 * n + rho + 1) / (9 * n + rho + 6))
            if printed:
                g = 6 * n * (6 * n - 2) * (6 * n - 1) * (6 * n + 1) * (6 * n + 2) * (6 * n + 3) * (mu + 3 * n - 1) * (mu + 3 * n) * (mu + 3 * n + 1) / (
                    (mu + 9 * n - 4) * (mu + 9 * n - 1) ** 2 * (mu + 9 * n + 2) ** 2 * (mu + 9 * n + 5) * (9 * n + rho - 3) * (9 * n + rho) * (9 * n + rho + 3))
            else:
                g = 72 * (n + 1) * (2 * n + 1) * (3 * n + 1) * (3 * n + 2) * (6 * n + 1) * (6 * n + 5) * (3 * n + rho) * (3 * n + rho + 1) * (3 * n + rho + 2) / (
                    (9 * n + rho) * (mu + 9 * n + 2) * (mu + 9 * n + 5) * (mu + 9 * n + 8) * (9 * n + rho + 3) ** 2 * (9 * n + rho + 6) ** 2 * (9 * n + rho + 9))
    elif j == 1:
        if not odd:
            b = (4 * (2 * n + 1) * (3 * n + 1) * (3 * n + 2) / ((9 * n + mu + 5) * (9 * n + rho + 3))
                 + (2 * n - 72 * n ** 3) / ((9 * n + mu - 1) * (9 * n + rho)))
            a = 6 * n * (6 * n - 1) * (6 * n + 1) / ((9 * n + mu - 1) ** 2 * (9 * n + mu + 2) * (9 * n + rho - 3) * (9 * n + rho) ** 2) * (
                6 * n * (3 * n + mu) * (3 * n + rho - 1)
                + (6 * n + 2) * (9 * n + mu - 1) * (3 * n + rho) * (3 * n + rho - 1) / (9 * n + rho + 3)
                + (6 * n - 2) * (3 * n + mu - 1) * (3 * n + mu) * (9 * n + rho) / (9 * n + mu - 4))
            g = 6 * n * (6 * n - 1) * (6 * n + 1) * (6 * n + 2) * (6 * n + 3) * (6 * n + 4) * (3 * n + rho - 1) * (3 * n + rho) * (3 * n + rho + 1) / (
                (mu + 9 * n - 1) * (mu + 9 * n + 2) * (mu + 9 * n + 5) * (9 * n + rho - 3) * (9 * n + rho) ** 2 * (9 * n + rho + 3) ** 2 * (9 * n + rho + 6))
        else:
            b = (2 * (n + 1) * (6 * n + 5) * (6 * n + 7) / ((9 * n + mu + 8) * (9 * n + rho + 9))
                 - 4 * (2 * n + 1) * (3 * n + 1) * (3 * n + 2) / ((9 * n + mu + 5) * (9 * n + rho + 3)))
            a = 6 * (2 * n + 1) / ((9 * n + mu + 2) * (9 * n + mu + 5) ** 2 * (9 * n + rho + 3) ** 2 * (9 * n + rho + 6)) * (
                6 * (2 * n + 1) * (3 * n + 1) * (3 * n + 2) * (3 * n + mu + 1) * (3 * n + rho + 1)
                + (3 * n + 2) * (6 * n + 1) * (6 * n + 2) * (9 * n + mu + 5) * (3 * n + rho) * (3 * n + rho + 1) / (9 * n + rho)
                + (3 * n + 1) * (6 * n + 4) * (6 * n + 5) * (3 * n + mu + 1) * (3 * n + mu + 2) * (9 * n + rho + 3) / (9 * n + mu + 8))
            if printed:
                g = 6 * n * (6 * n - 1) * (6 * n + 1) * (6 * n + 2) * (6 * n + 3) * (6 * n + 4) * (3 * n + rho - 1) * (3 * n + rho) * (3 * n + rho + 1) / (
                    (mu + 9 * n - 1) * (mu + 9 * n + 2) * (mu + 9 * n + 5) * (9 * n + rho - 3) * (9 * n + rho) ** 2 * (9 * n + rho + 3) ** 2 * (9 * n + rho + 6))
            else:
                g = 72 * (n + 1) * (2 * n + 1) * (3 * n + 1) * (3 * n + 2) * (6 * n + 5) * (6 * n + 7) * (mu + 3 * n + 1) * (mu + 3 * n + 2) * (mu + 3 * n + 3) / (
                    (mu + 9 * n + 2) * (mu + 9 * n + 5) ** 2 * (mu + 9 * n + 8) ** 2 * (mu + 9 * n + 11) * (9 * n + rho + 3) * (9 * n + rho + 6) * (9 * n + rho + 9))
    else:
        if not odd:
            b = (2 * (2 * n + 1) * (3 * n + 2) * (6 * n + 5) / ((9 * n + mu + 5) * (9 * n + rho + 6))
                 - 4 * n * (3 * n + 1) * (6 * n + 1) / ((9 * n + mu + 2) * (9 * n + rho)))
            a = 6 * n * (6 * n + 1) * (6 * n + 2) / ((9 * n + mu - 1) * (9 * n + mu + 2) ** 2 * (9 * n + rho) ** 2 * (9 * n + rho + 3)) * (
                (6 * n + 1) * (3 * n + mu) * (3 * n + rho)
                + (6 * n - 1) * (9 * n + mu + 2) * (3 * n + rho - 1) * (3 * n + rho) / (9 * n + rho - 3)
                + (6 * n + 3) * (3 * n + mu) * (3 * n + mu + 1) * (9 * n + rho) / (9 * n + mu + 5))
            g = 6 * n * (6 * n + 1) * (6 * n + 2) * (6 * n + 3) * (6 * n + 4) * (6 * n + 5) * (mu + 3 * n) * (mu + 3 * n + 1) * (mu + 3 * n + 2) / (
                (mu + 9 * n - 1) * (mu + 9 * n + 2) ** 2 * (mu + 9 * n + 5) ** 2 * (mu + 9 * n + 8) * (9 * n + rho) * (9 * n + rho + 3) * (9 * n + rho + 6))
        else:
            b = (4 * (n + 1) * (3 * n + 4) * (6 * n + 7) / ((9 * n + mu + 11) * (9 * n + rho + 9))
                 - 2 * (2 * n + 1) * (3 * n + 2) * (6 * n + 5) / ((9 * n + mu + 5) * (9 * n + rho + 6)))
            a = 6 * (2 * n + 1) * (6 * n + 5) / ((9 * n + mu + 5) ** 2 * (9 * n + mu + 8) * (9 * n + rho + 3) * (9 * n + rho + 6) ** 2) * (
                2 * (3 * n + mu + 2) * (3 * n + rho + 1) * (3 * n + 2) ** 2
                + 6 * (n + 1) * (9 * n + mu + 5) * (3 * n + rho + 1) * (3 * n + rho + 2) * (3 * n + 2) / (9 * n + rho + 9)
                + (3 * n + 1) * (6 * n + 4) * (3 * n + mu + 1) * (3 * n + mu + 2) * (9 * n + rho + 6) / (9 * n + mu + 2))
            if printed:
                g = 6 * n * (6 * n + 1) * (6 * n + 2) * (6 * n + 3) * (6 * n + 4) * (6 * n + 5) * (mu + 3 * n) * (mu + 3 * n + 1) * (mu + 3 * n + 2) / (
                    (mu + 9 * n - 1) * (mu + 9 * n + 2) ** 2 * (mu + 9 * n + 5) ** 2 * (mu + 9 * n + 8) * (9 * n + rho) * (9 * n + rho + 3) * (9 * n + rho + 6))
            else:
                g = 72 * (n + 1) * (2 * n + 1) * (3 * n + 2) * (3 * n + 4) * (6 * n + 5) * (6 * n + 7) * (3 * n + rho + 1) * (3 * n + rho + 2) * (3 * n + rho + 3) / (
                    (mu + 9 * n + 5) * (mu + 9 * n + 8) * (mu + 9 * n + 11) * (9 * n + rho + 3) * (9 * n + rho + 6) ** 2 * (9 * n + rho + 9) ** 2 * (9 * n + rho + 12))
    return b, a, g


class _Laurent:
    """Truncated Laurent series in a formal variable t with exact coefficients.

    Used to take the exact limit of a tabulated rational formula at a
    removable singularity: evaluate at ``mu + t`` and read the t**0 term.
    """

    ORDER = 6

    def __init__(self, val: int, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[0] == 0:
            cs.pop(0)
            val += 1
        self.val = val
        self.coeffs = cs[: self.ORDER]

    @classmethod
    def lift(cls, x):
        return x if isinstance(x, _Laurent) else cls(0, [x])

    def _terms(self, lo, hi):
        return [self.coeffs[k - self.val] if 0 <= k - self.val < len(self.coeffs) else _ZERO
                for k in range(lo, hi)]

    def __add__(self, other):
        other = _Laurent.lift(other)
        lo = min(self.val, other.val)
        return _Laurent(lo, [a + b for a, b in zip(self._terms(lo, lo + self.ORDER),
                                                   other._terms(lo, lo + self.ORDER))])

    __radd__ = __add__

    def __neg__(self):
        return _Laurent(self.val, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_Laurent.lift(other))

    def __rsub__(self, other):
        return _Laurent.lift(other) - self

    def __mul__(self, other):
        other = _Laurent.lift(other)
        out = [_ZERO] * self.ORDER
        for i, a in enumerate(self.coeffs):
            for k, b in enumerate(other.coeffs):
                if i + k < self.ORDER:
                    out[i + k] += a * b
        return _Laurent(self.val + other.val, out)

    __rmul__ = __mul__

    def _inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("division by the zero series")
        c0 = self.coeffs[0]
        inv = [1 / c0]
        for k in range(1, self.ORDER):
            acc = sum(self.coeffs[i] * inv[k - i] for i in range(1, min(k, len(self.coeffs) - 1) + 1))
            inv.append(-acc / c0)
        return _Laurent(-self.val, inv)

    def __truediv__(self, other):
        return self * _Laurent.lift(other)._inverse()

    def __rtruediv__(self, other):
        return _Laurent.lift(other) * self._inverse()

    def __pow__(self, k: int):
        out = _Laurent(0, [1])
        for _ in range(k):
            out = out * self
        return out

    def constant_term(self) -> Fraction:
        if self.val < 0:
            raise ZeroDivisionError("pole, not a removable singularity")
        return self._terms(0, 1)[0]


def _tabulated(params: FamilyParams, j: int, n: int, printed: bool, mu, rho):
    if params.case is Case.A:
        return _tabulated_case_a(j, n)
    if params.case is Case.B1:
        return _tabulated_case_b1(mu, j, n)
    if params.case is Case.C:
        return _tabulated_case_c(mu, rho, j, n, printed=printed)
    raise ValueError("no tabulated component coefficients for case B2")


def tabulated_component_coefficients(params: FamilyParams, j: int, n: int, printed: bool = False):
    """Tabulated closed forms of (beta_n, alpha_n, gamma_n) for component j.

    Available for cases A, B1 and C; values are rescaled to ``params.gamma1``.
    Where a tabulated expression is 0/0 at the given parameters, its exact
    limit is returned. For case C the odd-index gamma entries are a corrected
    factorization; ``printed=True`` returns the tabulated text verbatim, which
    repeats the even-index entry.
    """
    if j not in (0, 1, 2) or n < 0:
        raise IndexError("need j in {0,1,2} and n >= 0")
    try:
        vals = _tabulated(params, j, n, printed, params.mu, params.rho)
    except ZeroDivisionError:
        t = _Laurent(1, [1])
        mu = None if params.mu is None else params.mu + t
        rho = None if params.rho is None else params.rho + 2 * t
        try:
            vals = [_Laurent.lift(v).constant_term() for v in _tabulated(params, j, n, printed, mu, rho)]
        except ZeroDivisionError:
            raise DegenerateParameterError(f"tabulated formula singular at j={j}, n={n}") from None
    b, a, g = (Fraction(v) for v in vals)
    r = params.scale
    return b * r, a * r ** 2, g * r ** 3
