"""Exact moments of the two orthogonality functionals and 2-orthogonality checks.

The moments come from the recursions implied by the Pearson-type system
satisfied by (u0, u1). Only (u0)_{3n} and (u1)_{3n+1} can be nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import InsufficientTableError, RecurrenceMismatchError
from .polynomials import SymmetricPolynomial, generate
from .rational import format_rational, pochhammer
from .recurrence import Case, FamilyParams, gamma, theta


@dataclass(frozen=True)
class MomentTable:
    """``m0[n]`` = (u0)_{3n}, ``m1[n]`` = (u1)_{3n+1}."""

    params: FamilyParams
    m0: tuple[Fraction, ...]
    m1: tuple[Fraction, ...]

    def moment(self, k: int, index: int) -> Fraction:
        """(u_k)_index, zero off the residue class k mod 3."""
        if index < 0:
            raise ValueError("moment index must be nonnegative")
        if index % 3 != k:
            return Fraction(0)
        seq = self.m0 if k == 0 else self.m1
        i = index // 3
        if i >= len(seq):
            raise InsufficientTableError(f"(u{k})_{index} lies beyond the table")
        return seq[i]

    def to_json(self) -> dict:
        return {
            "u0": [[str(3 * n), format_rational(v)] for n, v in enumerate(self.m0)],
            "u1": [[str(3 * n + 1), format_rational(v)] for n, v in enumerate(self.m1)],
        }


def _theta12(params: FamilyParams):
    return theta(params, 1), theta(params, 2)


def moments_u0(params: FamilyParams, N: int) -> list[Fraction]:
    """(u0)_{3n} for 0 <= n <= N from the first-order moment recursion.

    With a = theta_1 - 1 and b = theta_2 - 1 the recursion reads
    (2/gamma_1) [(3n+2)((3n+1) a b + a + b) - (theta_1 - 2)] (u0)_{3n+3}
        = (3n+2)(3n+1) theta_1 (2 theta_2 - 1) (u0)_{3n}.
    """
    t1, t2 = _theta12(params)
    a, b = t1 - 1, t2 - 1
    c = 2 / params.gamma1
    out = [Fraction(1)]
    for n in range(N):
        lead = c * ((3 * n + 2) * ((3 * n + 1) * a * b + a + b) - (t1 - 2))
        if lead == 0:
            raise RecurrenceMismatchError(f"moment recursion singular at n={n}")
        out.append((3 * n + 2) * (3 * n + 1) * t1 * (2 * t2 - 1) * out[-1] / lead)
    return out


def moments_u1(params: FamilyParams, N: int) -> list[Fraction]:
    """(u1)_{3n+1} for 0 <= n <= N.

    For theta_1 != 2 the value follows from (u0)_{3n} and (u0)_{3n+3};
    for theta_1 == 2 the relation x u1' = 2 u0' is used instead.
    """
    t1, t2 = _theta12(params)
    u0 = moments_u0(params, N + 1)
    if t1 == 2:
        return [Fraction(2 * (3 * n + 1), 3 * n + 2) * u0[n] for n in range(N + 1)]
    c = 2 / params.gamma1
    den = (t1 - 2) * (2 * t2 - 1)
    out = []
    for n in range(N + 1):
        num = c * (t1 - 1) * ((3 * n + 2) * t2 - (3 * n + 1)) * u0[n + 1] - (3 * n + 1) * t1 * (2 * t2 - 1) * u0[n]
        out.append(num / den)
    return out


def moment_table(params: FamilyParams, N: int, check: bool = False) -> MomentTable:
    """Moments for 0 <= n <= N; ``check`` compares with the closed forms."""
    table = MomentTable(params, tuple(moments_u0(params, N)), tuple(moments_u1(params, N)))
    if check:
        for k, seq in ((0, table.m0), (1, table.m1)):
            for n, v in enumerate(seq):
                if v != closed_form_moment(params, k, n):
                    raise RecurrenceMismatchError(f"(u{k}) recursion disagrees with closed form at n={n}")
    return table


def closed_form_moment(params: FamilyParams, k: int, n: int) -> Fraction:
    """Pochhammer closed forms: (u0)_{3n} for k=0, (u1)_{3n+1} for k=1.

    The B2 forms are obtained from the B1 ones through the weight
    identifications U0(rho) = U0^{B1}(rho+1) and U1(rho) = U1^{B1}(rho-2).
    """
    r = params.scale
    third = Fraction(1, 3)
    if params.case is Case.A:
        val = Fraction(factorial(3 * n + k), 3 ** n * factorial(n))
        return val * r ** n
    top = pochhammer(third, n) * pochhammer(2 * third, n) if k == 0 else \
        pochhammer(2 * third, n) * pochhammer(4 * third, n)
    if params.case is Case.B1:
        den = pochhammer((params.mu + 2 + 3 * k) / 3, n)
    elif params.case is Case.B2:
        den = pochhammer((params.rho + 3) / 3, n)
    else:
        den = pochhammer((params.mu + 2 + 3 * k) / 3, n) * pochhammer((params.rho + 3) / 3, n)
    return top / den * r ** n


def pair(u_index: int, m: int, P: SymmetricPolynomial, table: MomentTable) -> Fraction:
    """<u_k, x**m P> using only the residue class of x**m P."""
    if u_index not in (0, 1):
        raise ValueError("u_index must be 0 or 1")
    shifted = P.shift(m) if m else P
    if shifted.residue != u_index:
        return Fraction(0)
    total = Fraction(0)
    for power, c in shifted.coeff_map().items():
        if c:
            total += c * table.moment(u_index, power)
    return total


@dataclass
class OrthogonalityReport:
    params: FamilyParams
    N: int
    checks: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"N": self.N, "checks": self.checks, "ok": self.ok, "violations": self.violations}


def verify_orthogonality(params: FamilyParams, N: int, P: Sequence[SymmetricPolynomial] | None = None) -> OrthogonalityReport:
    """Check <u0, x^m P_n> = 0 (n >= 2m+1), <u1, x^m P_n> = 0 (n >= 2m+2)
    and nonvanishing of <u0, x^m P_{2m}>, <u1, x^m P_{2m+1}>, for n <= N."""
    if N < 1:
        raise ValueError("N must be at least 1")
    P = list(P) if P is not None else generate(params, N)
    table = moment_table(params, (N + N // 2 + 2) // 3 + 1)
    rep = OrthogonalityReport(params, N)
    for n in range(N + 1):
        for m in range(n // 2 + 1):
            for k in (0, 1):
                val = pair(k, m, P[n], table)
                rep.checks += 1
                if n >= 2 * m + 1 + k:
                    if val != 0:
                        rep.violations.append(f"<u{k}, x^{m} P_{n}> = {val}, expected 0")
                elif n == 2 * m + k and val == 0:
                    rep.violations.append(f"<u{k}, x^{m} P_{n}> vanishes on the diagonal")
    return rep


def product_identity(params: FamilyParams, n: int) -> bool:
    """<u0, x^{n+1} P_{2n+2}> = prod gamma_{2k+1} and
    <u1, x^{n+1} P_{2n+3}> = prod gamma_{2k+2}, k = 0..n."""
    P = generate(params, 2 * n + 3)
    table = moment_table(params, n + 2)
    g_odd = g_even = Fraction(1)
    for k in range(n + 1):
        g_odd *= gamma(params, 2 * k + 1)
        g_even *= gamma(params, 2 * k + 2)
    return pair(0, n + 1, P[2 * n + 2], table) == g_odd and pair(1, n + 1, P[2 * n + 3], table) == g_even
