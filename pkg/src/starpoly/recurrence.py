"""Recurrence coefficients of the threefold-symmetric Hahn-classical families.

Every family is indexed by a case label and up to two rational parameters.
All values are exact :class:`~fractions.Fraction` objects. Closed forms are
evaluated in each family's canonical scale and multiplied by
``gamma1 / canonical_gamma1`` when a different scale is requested, which is the
coefficient side of the dilation ``B_n(x) = a**-n P_n(a x)``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import DegenerateParameterError
from .rational import to_fraction


class Case(str, Enum):
    A = "A"
    B1 = "B1"
    B2 = "B2"
    C = "C"


@dataclass(frozen=True)
class FamilyParams:
    """Family selector with exact parameters.

    ``mu`` is used by B1 and C, ``rho`` by B2 and C. ``gamma1`` defaults to the
    canonical scale of the case.
    """

    case: Case
    mu: Fraction | None = None
    rho: Fraction | None = None
    gamma1: Fraction | None = None

    def __post_init__(self):
        case = Case(self.case)
        object.__setattr__(self, "case", case)
        mu, rho = to_fraction(self.mu), to_fraction(self.rho)
        needs_mu = case in (Case.B1, Case.C)
        needs_rho = case in (Case.B2, Case.C)
        if needs_mu and mu is None:
            raise ValueError(f"case {case.value} requires mu")
        if needs_rho and rho is None:
            raise ValueError(f"case {case.value} requires rho")
        if not needs_mu and mu is not None:
            raise ValueError(f"case {case.value} takes no mu")
        if not needs_rho and rho is not None:
            raise ValueError(f"case {case.value} takes no rho")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "rho", rho)
        g1 = to_fraction(self.gamma1)
        object.__setattr__(self, "gamma1", canonical_gamma1(case, mu, rho) if g1 is None else g1)

    @property
    def canonical_gamma1(self) -> Fraction:
        return canonical_gamma1(self.case, self.mu, self.rho)

    @property
    def scale(self) -> Fraction:
        """Ratio r = gamma1 / canonical gamma1; every gamma_n scales by r."""
        return self.gamma1 / self.canonical_gamma1

    def with_params(self, mu=None, rho=None) -> "FamilyParams":
        """Same case in canonical scale with new parameters."""
        return FamilyParams(self.case, mu=mu, rho=rho)

    def label(self) -> str:
        parts = [self.case.value]
        if self.mu is not None:
            parts.append(f"mu={self.mu}")
        if self.rho is not None:
            parts.append(f"rho={self.rho}")
        if self.gamma1 != self.canonical_gamma1:
            parts.append(f"gamma1={self.gamma1}")
        return " ".join(parts)


def canonical_gamma1(case: Case, mu: Fraction | None, rho: Fraction | None) -> Fraction:
    case = Case(case)
    try:
        if case is Case.A:
            return Fraction(2)
        if case is Case.B1:
            return Fraction(2, 3) / (mu + 2)
        if case is Case.B2:
            return Fraction(2, 3) / (rho + 3)
        return Fraction(2) / ((mu + 2) * (rho + 3))
    except ZeroDivisionError:
        raise DegenerateParameterError(f"canonical gamma1 undefined for mu={mu}, rho={rho}") from None


def _div(num: Fraction, den: Fraction, what: str) -> Fraction:
    if den == 0:
        raise DegenerateParameterError(f"vanishing denominator in {what}")
    return Fraction(num) / den


def _check_index(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"index must be a positive integer, got {n!r}")


def theta(params: FamilyParams, n: int) -> Fraction:
    """Return theta_n; the branch without its parameter is identically 1."""
    _check_index(n)
    if n % 2:
        m, p = (n + 1) // 2, params.mu
    else:
        m, p = n // 2, params.rho
    if p is None:
        return Fraction(1)
    return _div(m + p + 1, m + p, f"theta_{n}")


def _gamma_canonical(params: FamilyParams, n: int) -> Fraction:
    case, mu, rho = params.case, params.mu, params.rho
    if case is Case.A:
        return Fraction(n * (n + 1))
    if n == 1:
        return params.canonical_gamma1
    if case is Case.B1:
        if n % 2:
            k = (n - 1) // 2
            return _div(Fraction(2, 3) * (k + 1) * (2 * k + 1), 3 * k + mu + 2, f"gamma_{n}")
        k = (n - 2) // 2
        return _div(Fraction(2, 3) * (k + 1) * (2 * k + 3) * (k + mu + 1),
                    (3 * k + mu + 2) * (3 * k + mu + 5), f"gamma_{n}")
    if case is Case.B2:
        if n % 2 == 0:
            k = n // 2
            return _div(2 * k * (2 * k + 1), 3 * (3 * k + rho), f"gamma_{n}")
        k = (n - 1) // 2
        return _div(2 * (k + 1) * (2 * k + 1) * (k + rho),
                    3 * (3 * k + rho) * (3 * k + rho + 3), f"gamma_{n}")
    if n % 2 == 0:
        k = n // 2
        return _div(2 * k * (2 * k + 1) * (k + mu),
                    (3 * k + mu - 1) * (3 * k + mu + 2) * (3 * k + rho), f"gamma_{n}")
    k = (n - 1) // 2
    return _div(2 * (k + 1) * (2 * k + 1) * (k + rho),
                (3 * k + mu + 2) * (3 * k + rho) * (3 * k + rho + 3), f"gamma_{n}")


def gamma(params: FamilyParams, n: int) -> Fraction:
    """Return gamma_n from the per-case closed form, in the requested scale."""
    _check_index(n)
    return _gamma_canonical(params, n) * params.scale


def gamma_tilde(params: FamilyParams, n: int) -> Fraction:
    """Return the coefficient of the derivative family, n/(n+2) theta_n gamma_{n+1}."""
    _check_index(n)
    return Fraction(n, n + 2) * theta(params, n) * gamma(params, n + 1)


def gamma_tilde_closed(params: FamilyParams, n: int) -> Fraction:
    """Per-case printed closed forms for the derivative-family coefficients."""
    _check_index(n)
    case, mu, rho = params.case, params.mu, params.rho
    if case is Case.A:
        val = Fraction(n * (n + 1))
    elif case is Case.B1:
        if n % 2 == 0:
            k = n // 2
            val = _div(Fraction(2, 3) * k * (2 * k + 1), 3 * k + 2 + mu, f"gamma~_{n}")
        else:
            k = (n - 1) // 2
            val = _div(Fraction(2, 3) * (k + 1) * (2 * k + 1) * (k + 2 + mu),
                       (3 * k + 2 + mu) * (3 * k + 5 + mu), f"gamma~_{n}")
    elif case is Case.B2:
        if n % 2 == 0:
            k = n // 2
            val = _div(2 * k * (2 * k + 1) * (k + rho + 1),
                       3 * (3 * k + rho) * (3 * k + rho + 3), f"gamma~_{n}")
        else:
            k = (n - 1) // 2
            val = _div(2 * (k + 1) * (2 * k + 1), 3 * (3 * k + rho + 3), f"gamma~_{n}")
    else:
        if n % 2 == 0:
            k = n // 2
            val = _div(2 * k * (2 * k + 1) * (k + rho + 1),
                       (mu + 3 * k + 2) * (3 * k + rho) * (3 * k + rho + 3), f"gamma~_{n}")
        else:
            k = (n - 1) // 2
            val = _div(2 * (k + 1) * (2 * k + 1) * (mu + k + 2),
                       (mu + 3 * k + 2) * (mu + 3 * k + 5) * (3 * k + rho + 3), f"gamma~_{n}")
    return val * params.scale


def derivative_family(params: FamilyParams) -> FamilyParams:
    """Family whose polynomials are the monic derivatives Q_n of ``params``.

    A is fixed, B1(mu) goes to B2(mu+2), B2(rho) to B1(rho+1) and C(mu, rho)
    to C(rho+1, mu+2). The scale ratio is carried over unchanged.
    """
    case, mu, rho = params.case, params.mu, params.rho
    if case is Case.A:
        target = FamilyParams(Case.A)
    elif case is Case.B1:
        target = FamilyParams(Case.B2, rho=mu + 2)
    elif case is Case.B2:
        target = FamilyParams(Case.B1, mu=rho + 1)
    else:
        target = FamilyParams(Case.C, mu=rho + 1, rho=mu + 2)
    return FamilyParams(target.case, target.mu, target.rho, target.gamma1 * params.scale)


def gamma_generic(params: FamilyParams, N: int) -> list[Fraction]:
    """gamma_1..gamma_N from gamma_1 and theta only (the case-free recursion)."""
    out = [params.gamma1]
    for n in range(0, N - 1):
        prev = Fraction(0) if n == 0 else n * (theta(params, n) - 1)
        den = (n + 4) * (theta(params, n + 1) - 1) + 1
        out.append(_div(Fraction(n + 3, n + 1) * (prev + 1), den, f"generic gamma_{n + 2}") * out[-1])
    return out[:N]


class CoeffSequence:
    """Memoized theta, gamma, gamma_tilde for one parameter set.

    Reads and writes go through a lock so the cache can be shared between
    threads.
    """

    def __init__(self, params: FamilyParams):
        self.params = params
        self._lock = threading.Lock()
        self._cache: dict[tuple[str, int], Fraction] = {}

    def _get(self, name: str, fn, n: int) -> Fraction:
        key = (name, n)
        with self._lock:
            hit = self._cache.get(key)
        if hit is not None:
            return hit
        val = fn(self.params, n)
        with self._lock:
            self._cache.setdefault(key, val)
        return val

    def theta(self, n: int) -> Fraction:
        return self._get("theta", theta, n)

    def gamma(self, n: int) -> Fraction:
        return self._get("gamma", gamma, n)

    def gamma_tilde(self, n: int) -> Fraction:
        return self._get("gamma_tilde", gamma_tilde, n)

    def gammas(self, N: int) -> list[Fraction]:
        """[gamma_1, ..., gamma_N]."""
        return [self.gamma(n) for n in range(1, N + 1)]


def check_riccati(params: FamilyParams, N: int) -> bool:
    """theta_{n+3} + 1/theta_{n+1} == 2 for all 0 <= n <= N."""
    for n in range(N + 1):
        t = theta(params, n + 1)
        if t == 0:
            raise DegenerateParameterError(f"theta_{n + 1} vanishes")
        if theta(params, n + 3) + 1 / t != 2:
            return False
    return True


@dataclass
class ValidationReport:
    params: FamilyParams
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def as_dict(self) -> dict:
        return {"case": self.params.case.value, "ok": self.ok, "violations": list(self.violations)}


def _hits_forbidden(t: Fraction) -> int | None:
    """Return n >= 1 with t == (n-1)/n, if any."""
    if t >= 1:
        return None
    n = 1 / (1 - t)
    if n.denominator == 1 and n >= 1:
        return int(n)
    return None


def validate_params(params: FamilyParams) -> ValidationReport:
    report = ValidationReport(params)
    v = report.violations
    try:
        g1 = params.gamma1
    except DegenerateParameterError as exc:  # pragma: no cover - raised in __post_init__
        v.append(str(exc))
        return report
    if g1 <= 0:
        v.append(f"gamma1 > 0 violated (gamma1={g1})")
    if params.mu is not None and params.mu <= -1:
        v.append(f"mu > -1 violated (mu={params.mu})")
    if params.rho is not None and params.rho <= 0:
        v.append(f"rho > 0 violated (rho={params.rho})")
    for n in (1, 2):
        try:
            t = theta(params, n)
        except DegenerateParameterError:
            v.append(f"theta_{n} undefined")
            continue
        bad = _hits_forbidden(t)
        if bad is not None:
            v.append(f"theta_{n} = {t} equals (n-1)/n for n={bad}")
    return report
