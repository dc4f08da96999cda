"""Zeros on the 3-star, interlacing, and the largest-zero bound.

Roots are located on the positive axis, where P_{3n+j}(x) = x^j P_n^{[j]}(x^3)
has exactly n simple zeros, and then rotated by the cube roots of unity.
Evaluation uses the three-term recurrence in floating point, which stays
stable at degrees where the monomial coefficients of the component would
cancel catastrophically.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError
from .recurrence import Case, FamilyParams, gamma

OMEGA = complex(-0.5, math.sqrt(3) / 2)
INTERLACING_TOL = 1e-10
BOUND_SLACK = 0.05


@dataclass(frozen=True)
class ZeroSet:
    degree: int
    positive_roots: tuple[float, ...]

    @property
    def n(self) -> int:
        return self.degree // 3

    @property
    def origin_multiplicity(self) -> int:
        return self.degree % 3

    @property
    def star_points(self) -> list[complex]:
        return [r * w for w in (1, OMEGA, OMEGA.conjugate()) for r in self.positive_roots]

    def csv_rows(self) -> list[tuple[int, float]]:
        return [(k, r) for k, r in enumerate(self.positive_roots, start=1)]

    def to_json(self, star: bool = False) -> dict:
        out = {
            "degree": self.degree,
            "origin_multiplicity": self.origin_multiplicity,
            "positive_roots": list(self.positive_roots),
        }
        if star:
            out["star_points"] = [[z.real, z.imag] for z in self.star_points]
        return out


@lru_cache(maxsize=512)
def _gamma_floats(params: FamilyParams, count: int) -> tuple[float, ...]:
    return (0.0,) + tuple(float(gamma(params, k)) for k in range(1, count + 1))


def _gammas(params: FamilyParams, count: int) -> np.ndarray:
    # index 0 unused so that g[k] = gamma_k
    return np.array(_gamma_floats(params, count))


def hessenberg(params: FamilyParams, n: int) -> np.ndarray:
    """n x n matrix with ones above the diagonal and H[k+2, k] = gamma_k (1-based)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    g = _gammas(params, max(n - 2, 0))
    H = np.diag(np.ones(n - 1), 1) if n > 1 else np.zeros((1, 1))
    for k in range(1, n - 1):
        H[k + 1, k - 1] = g[k]
    return H


def hessenberg_zeros(params: FamilyParams, n: int) -> np.ndarray:
    """Eigenvalues of H_n, used as an independent cross-check of positive_zeros.

    H_n is far from normal, so it is first balanced by the similarity
    D^{-1} H D with D = diag(d^k (k!)^{alpha/3}). The zero at the origin has
    multiplicity n mod 3, which a dense eigensolver splits into a cluster of
    size about eps^{1/2}; those eigenvalues are set to 0 exactly.
    """
    H = hessenberg(params, n)
    if n > 1:
        c, alpha = asymptotic_pair(params)
        d = (2 * c) ** (1 / 3)
        logd = np.array([k * math.log(d) + alpha / 3 * math.lgamma(k + 1) for k in range(1, n + 1)])
        H = H * np.exp(logd[None, :] - logd[:, None])
    ev = np.linalg.eigvals(H)
    ev = ev[np.argsort(np.abs(ev), kind="stable")]
    ev[: n % 3] = 0
    return ev


def evaluate(g: np.ndarray, degree: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """P_degree(x) and P'_degree(x) by the recurrence, up to a common positive factor.

    The triple of consecutive values is rescaled whenever it grows large, so
    the sign and the ratio P/P' are exact to rounding.
    """
    x = np.asarray(x, dtype=float)
    p = [np.ones_like(x), x.copy(), x * x]
    d = [np.zeros_like(x), np.ones_like(x), 2 * x]
    if degree <= 2:
        return p[degree], d[degree]
    # each step grows the triple by at most (|x| + max gamma + 1), so the
    # overflow check only needs to run every `every` steps
    growth = float(np.max(np.abs(x), initial=0.0)) + float(np.max(g[1:degree], initial=0.0)) + 2.0
    every = max(1, int(100 / math.log10(growth)))
    for m in range(2, degree):
        pn = x * p[2] - g[m - 1] * p[0]
        dn = p[2] + x * d[2] - g[m - 1] * d[0]
        p = [p[1], p[2], pn]
        d = [d[1], d[2], dn]
        if m % every == 0:
            big = np.maximum(np.abs(pn), np.abs(dn))
            if np.any(big > 1e150):
                scale = np.where(big > 1e150, 1e-150, 1.0)
                p = [v * scale for v in p]
                d = [v * scale for v in d]
    return p[2], d[2]


def _count_sign_changes(v: np.ndarray) -> int:
    s = np.sign(v)
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))


def positive_zeros(params: FamilyParams, degree: int) -> ZeroSet:
    """The n positive zeros of P_{3n+j}, sorted, polished by Newton steps."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    n = degree // 3
    if n == 0:
        return ZeroSet(degree, ())
    g = _gammas(params, degree)
    R = search_radius(params, degree) * 1.001
    # P/x^j has the same sign as P on (0, R]; start the grid just off 0
    m = 16 * n
    for _ in range(12):
        xs = np.linspace(R / (8 * m), R, m)
        vals, _ = evaluate(g, degree, xs)
        if _count_sign_changes(vals) == n:
            break
        m *= 2
    else:
        raise ConvergenceError(f"could not isolate {n} sign changes of P_{degree}")
    nz = vals != 0
    xs, vals = xs[nz], vals[nz]
    idx = np.nonzero(np.sign(vals[1:]) != np.sign(vals[:-1]))[0]
    lo, hi = xs[idx].copy(), xs[idx + 1].copy()
    flo = np.sign(vals[idx])
    # a few bisections, then Newton safeguarded by the bracket
    for _ in range(8):
        mid = 0.5 * (lo + hi)
        fm, _ = evaluate(g, degree, mid)
        same = np.sign(fm) == flo
        lo = np.where(same, mid, lo)
        hi = np.where(same, hi, mid)
    roots = 0.5 * (lo + hi)
    for _ in range(60):
        f, df = evaluate(g, degree, roots)
        same = np.sign(f) == flo
        lo = np.where(same & (f != 0), roots, lo)
        hi = np.where(~same & (f != 0), roots, hi)
        step = np.where(df != 0, f / np.where(df != 0, df, 1.0), 0.0)
        new = roots - step
        new = np.where((new >= lo) & (new <= hi), new, 0.5 * (lo + hi))
        done = (np.abs(new - roots) < 1e-13 * roots) | (f == 0)
        roots = np.where(f == 0, roots, new)
        if np.all(done):
            break
    else:
        raise ConvergenceError(f"Newton polishing of P_{degree} zeros did not settle")
    roots = np.sort(roots)
    if np.any(np.diff(roots) <= 0):
        raise ConvergenceError(f"zeros of P_{degree} are not simple in double precision")
    return ZeroSet(degree, tuple(float(r) for r in roots))


# ---------------------------------------------------------------- bounds

_GROWTH = {Case.A: (Fraction(4), 2), Case.B1: (Fraction(4, 9), 1), Case.B2: (Fraction(4, 9), 1),
           Case.C: (Fraction(4, 27), 0)}


def asymptotic_pair(params: FamilyParams) -> tuple[float, int]:
    """(c, alpha) in the requested scale.

    c n^alpha is the growth of the larger of gamma_{2n}, gamma_{2n+1}; in the
    B cases the two parities grow with slopes 4/9 and 4/27.
    """
    c, alpha = _GROWTH[params.case]
    return float(c * params.scale), alpha


def _cbrt(q: Fraction) -> float:
    # exact when numerator and denominator are perfect cubes
    roots = [round(abs(v) ** (1 / 3)) for v in (q.numerator, q.denominator)]
    if roots[0] ** 3 == q.numerator and roots[1] ** 3 == q.denominator:
        return roots[0] / roots[1]
    return float(q) ** (1 / 3)


def largest_zero_bound(params: FamilyParams, n: int) -> float:
    """(3 / 2^{2/3}) c^{1/3} n^{alpha/3} with n the degree.

    Written as 3 (c/4)^{1/3} n^{alpha/3} so that Case C gives exactly 1.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    c, alpha = _GROWTH[params.case]
    lead = 3 * _cbrt(c * params.scale / 4)
    return lead * n ** (alpha / 3) if alpha else lead


def norm_bound(params: FamilyParams, n: int, d: float) -> float:
    """Max row sum of D^{-1} H_n D with D = diag(d^k (k!)^{alpha/3}).

    Similarity leaves the spectrum unchanged, so the result bounds every zero
    of P_n for any d > 0.
    """
    if n < 4:
        raise ValueError("n must be at least 4")
    if d <= 0:
        raise ValueError("d must be positive")
    _, alpha = asymptotic_pair(params)
    e = alpha / 3
    g = _gammas(params, n)
    rows = []
    for i in range(1, n + 1):
        val = d * (i + 1) ** e if i < n else 0.0
        if i >= 3:
            val += g[i - 2] / (d * d * (i * (i - 1)) ** e)
        rows.append(val)
    return max(rows)


def search_radius(params: FamilyParams, degree: int) -> float:
    """A rigorous upper bound for the zero moduli of P_degree."""
    if degree < 4:
        return float(np.max(np.abs(hessenberg_zeros(params, degree)))) * 1.01 + 1e-12
    c, _ = asymptotic_pair(params)
    d0 = (2 * c) ** (1 / 3)
    return min(norm_bound(params, degree, d0 * f) for f in (0.5, 0.8, 1.0, 1.25, 2.0))


# ---------------------------------------------------------------- interlacing

@dataclass
class InterlacingReport:
    degrees: tuple[int, int, int]
    violations: list[str] = field(default_factory=list)
    min_relative_gap: float = math.inf

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"degrees": list(self.degrees), "ok": self.ok,
                "min_relative_gap": self.min_relative_gap, "violations": self.violations}


def check_interlacing(params: FamilyParams, n: int, j: int = 0, tol: float = INTERLACING_TOL) -> InterlacingReport:
    """Check the cyclic ordering of the positive zeros of degrees 3n+j, 3n+j+1, 3n+j+2.

    Taking the roots of residue class r in turn, r = 0, 1, 2, 0, 1, ..., must
    give an increasing chain; this is the chain
    x^{[j+2]}_k < x^{[j]}_{k+1} < x^{[j+1]}_{k+1} < x^{[j+2]}_{k+1}.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    degrees = tuple(3 * n + j + i for i in range(3))
    by_res = {d % 3: positive_zeros(params, d).positive_roots for d in degrees}
    rep = InterlacingReport(degrees)
    total = sum(len(v) for v in by_res.values())
    chain = []
    for i in range(total):
        roots = by_res[i % 3]
        if i // 3 >= len(roots):
            rep.violations.append(f"residue {i % 3} runs out of roots at position {i}")
            return rep
        chain.append(roots[i // 3])
    for a, b in zip(chain, chain[1:]):
        gap = (b - a) / abs(b)
        rep.min_relative_gap = min(rep.min_relative_gap, gap)
        if gap < -tol:
            rep.violations.append(f"{a!r} !< {b!r}")
    return rep


def zero_sets(params: FamilyParams, degrees, threads: int | None = None) -> list[ZeroSet]:
    """Zero sets for several degrees, computed in a thread pool, returned in input order."""
    degrees = list(degrees)
    if threads is None or threads <= 1:
        return [positive_zeros(params, d) for d in degrees]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda d: positive_zeros(params, d), degrees))
