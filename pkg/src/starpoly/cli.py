"""Command-line interface: tables, verification suites and plot-ready data."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import moments as mom
from . import ode as ode_mod
from . import polynomials as poly
from . import recurrence as rec
from . import weights as wts
from . import zeros as zer
from .errors import StarpolyError
from .rational import format_rational

MAX_DEGREE = 500
DEFAULT_TOL = {"quadrature": 1e-8, "interlacing": zer.INTERLACING_TOL, "bound": zer.BOUND_SLACK}
SUITES = ("orthogonality", "hahn", "ode", "riccati", "derivative", "tables",
          "interlacing", "bound", "quadrature")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    params: rec.FamilyParams
    n: int | None
    degree: int | None
    fmt: str
    out: str | None
    tol: float | None
    star: bool
    suites: tuple[str, ...]
    grid: list[float]
    threads: int


# ---------------------------------------------------------------- output

def _num(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        return json.dumps(str(x))
    s = format(x, ".17g")
    return s if any(c in s for c in ".en") else s + ".0"


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, floats at 17 significant digits."""
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{dumps(obj[k])}" for k in sorted(obj)) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _num(obj)
    if isinstance(obj, Fraction):
        return json.dumps(format_rational(obj))
    return json.dumps(str(obj))


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_num(v) if isinstance(v, float) else format_rational(v) if isinstance(v, Fraction) else v
                    for v in row])
    return buf.getvalue()


def _emit(cfg: RunConfig, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _q(x: Fraction) -> dict:
    return {"exact": format_rational(x), "approx": float(x)}


# ---------------------------------------------------------------- commands

def _need(value, flag: str) -> int:
    if value is None:
        raise UsageError(f"{flag} is required")
    if value < 0 or value > MAX_DEGREE:
        raise UsageError(f"{flag} must lie in [0, {MAX_DEGREE}]")
    return value


def cmd_gamma(cfg: RunConfig) -> int:
    N = _need(cfg.n, "--n")
    p = cfg.params
    rows = [(n, rec.gamma(p, n), rec.gamma_tilde(p, n), rec.theta(p, n)) for n in range(1, N + 1)]
    if cfg.fmt == "csv":
        _emit(cfg, _csv(["n", "gamma", "gamma_tilde", "theta", "gamma_float", "gamma_tilde_float", "theta_float"],
                        [(n, g, gt, t, float(g), float(gt), float(t)) for n, g, gt, t in rows]))
    else:
        _emit(cfg, dumps({"family": p.label(), "rows": [
            {"n": n, "gamma": _q(g), "gamma_tilde": _q(gt), "theta": _q(t)} for n, g, gt, t in rows]}))
    return 0


def cmd_poly(cfg: RunConfig) -> int:
    d = _need(cfg.degree, "--degree")
    P = poly.generate(cfg.params, d)[d]
    if cfg.fmt == "csv":
        _emit(cfg, _csv(["power", "coefficient"], [(k, c) for k, c in sorted(P.coeff_map().items())]))
    else:
        _emit(cfg, dumps(P.to_json()))
    return 0


def cmd_moments(cfg: RunConfig) -> int:
    N = _need(cfg.n, "--n")
    table = mom.moment_table(cfg.params, N)
    if cfg.fmt == "csv":
        rows = [(0, 3 * n, v, float(v)) for n, v in enumerate(table.m0)]
        rows += [(1, 3 * n + 1, v, float(v)) for n, v in enumerate(table.m1)]
        _emit(cfg, _csv(["k", "index", "moment", "moment_float"], rows))
    else:
        _emit(cfg, dumps(table.to_json()))
    return 0


def cmd_zeros(cfg: RunConfig) -> int:
    d = _need(cfg.degree, "--degree")
    if d < 1:
        raise UsageError("--degree must be at least 1")
    zs = zer.positive_zeros(cfg.params, d)
    if cfg.fmt == "csv":
        _emit(cfg, _csv(["k", "positive_root"], zs.csv_rows()))
    else:
        _emit(cfg, dumps(zs.to_json(star=cfg.star)))
    return 0


def cmd_weights(cfg: RunConfig) -> int:
    rows = wts.sample(cfg.params, cfg.grid)
    if cfg.fmt == "json":
        _emit(cfg, dumps({"rows": [{"x": x, "U0": u0, "U1": u1} for x, u0, u1 in rows]}))
    else:
        _emit(cfg, _csv(["x", "U0", "U1"], rows))
    return 0


def cmd_ode(cfg: RunConfig) -> int:
    N = _need(cfg.n, "--n")
    p = cfg.params
    P = poly.generate(p, N)
    out = []
    for n in range(1, N + 1):
        co = ode_mod.ode_coefficients(p, n)
        out.append({"n": n, **{k: format_rational(v) for k, v in zip("abcde", co.as_tuple())},
                    "residual_zero": ode_mod.ode_residual(p, n, P[n]).is_zero()})
    if cfg.fmt == "csv":
        _emit(cfg, _csv(["n", "a", "b", "c", "d", "e", "residual_zero"],
                        [[r[k] for k in ("n", "a", "b", "c", "d", "e", "residual_zero")] for r in out]))
    else:
        _emit(cfg, dumps({"family": p.label(), "rows": out}))
    return 0 if all(r["residual_zero"] for r in out) else 1


# ---------------------------------------------------------------- verification suites

def _suite_orthogonality(p, N, tol):
    r = mom.verify_orthogonality(p, N or 60)
    return {"checks": r.checks, "ok": r.ok, "violations": r.violations[:20]}


def _suite_hahn(p, N, tol):
    N = N or 40
    P = poly.generate(p, N + 4)
    bad = []
    try:
        Q = poly.derivative_sequence(P, p)
    except StarpolyError as exc:
        return {"checks": 1, "ok": False, "violations": [str(exc)]}
    for n in range(N + 1):
        if not poly.check_structure_relation(P, Q, p, n):
            bad.append(f"structure relation fails at n={n}")
    return {"checks": N + 2, "ok": not bad, "violations": bad}


def _suite_ode(p, N, tol):
    N = N or 40
    P = poly.generate(p, N)
    bad = [f"P_{n}" for n in range(1, N + 1) if not ode_mod.ode_residual(p, n, P[n]).is_zero()]
    bad += [f"Q_{n - 1}" for n in range(1, N + 1) if not ode_mod.q_ode_residual(p, n, P[n]).is_zero()]
    return {"checks": 2 * N, "ok": not bad, "violations": bad}


def _suite_riccati(p, N, tol):
    N = N or 200
    return {"checks": N + 1, "ok": rec.check_riccati(p, N), "violations": []}


def _suite_derivative(p, N, tol):
    N = N or 30
    Q = poly.derivative_sequence(poly.generate(p, N + 1))
    R = poly.generate(rec.derivative_family(p), N)
    bad = [f"Q_{n}" for n in range(N + 1) if Q[n] != R[n]]
    return {"checks": N + 1, "ok": not bad, "partner": rec.derivative_family(p).label(), "violations": bad}


def _suite_tables(p, N, tol):
    if p.case is rec.Case.B2:
        return {"checks": 0, "ok": True, "skipped": "no tabulated component coefficients", "violations": []}
    N = N or 30
    bad = []
    for j in range(3):
        for n in range(1, N + 1):
            if poly.tabulated_component_coefficients(p, j, n) != poly.component_recurrence(p, j, n):
                bad.append(f"j={j} n={n}")
    return {"checks": 3 * N, "ok": not bad, "violations": bad}


def _suite_interlacing(p, N, tol):
    N = N or 10
    tol = DEFAULT_TOL["interlacing"] if tol is None else tol
    reps = [zer.check_interlacing(p, n, j, tol) for n in range(1, N + 1) for j in range(3)]
    bad = [v for r in reps for v in r.violations]
    return {"checks": len(reps), "ok": not bad, "min_relative_gap": min(r.min_relative_gap for r in reps),
            "violations": bad[:20]}


def _suite_bound(p, N, tol):
    N = N or 120
    slack = DEFAULT_TOL["bound"] if tol is None else tol
    worst, bad = 0.0, []
    for d in range(3, N + 1):
        roots = zer.positive_zeros(p, d).positive_roots
        ratio = roots[-1] / zer.largest_zero_bound(p, d)
        worst = max(worst, ratio)
        if ratio > 1 + slack:
            bad.append(f"degree {d}: max zero / bound = {ratio:.6g}")
    return {"checks": max(N - 2, 0), "ok": not bad, "max_ratio": worst, "violations": bad}


def _suite_quadrature(p, N, tol):
    N = min(N if N is not None else 5, 12)
    tol = DEFAULT_TOL["quadrature"] if tol is None else tol
    table = mom.moment_table(p, N)
    worst, bad = 0.0, []
    for k in (0, 1):
        spec = wts.WeightSpec(p, k)
        for n in range(N + 1):
            exact = float(table.moment(k, 3 * n + k))
            rel = abs(wts.quadrature_moment(spec, n) / exact - 1)
            worst = max(worst, rel)
            if rel > tol:
                bad.append(f"k={k} n={n}: relative error {rel:.3g}")
    return {"checks": 2 * (N + 1), "ok": not bad, "max_relative_error": worst, "violations": bad}


_SUITE_FN: dict[str, Callable] = {name: globals()[f"_suite_{name}"] for name in SUITES}


def cmd_verify(cfg: RunConfig) -> int:
    names = SUITES if "all" in cfg.suites else cfg.suites

    def run(name):
        t0 = time.perf_counter()
        try:
            res = _SUITE_FN[name](cfg.params, cfg.n, cfg.tol)
        except StarpolyError as exc:
            res = {"checks": 0, "ok": False, "violations": [f"{type(exc).__name__}: {exc}"]}
        res["suite"] = name
        res["seconds"] = round(time.perf_counter() - t0, 3)
        return res

    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            results = list(pool.map(run, names))
    else:
        results = [run(n) for n in names]
    ok = all(r["ok"] for r in results)
    report = {"family": cfg.params.label(), "ok": ok, "suites": results}
    if cfg.fmt == "csv":
        _emit(cfg, _csv(["suite", "ok", "checks"], [(r["suite"], r["ok"], r["checks"]) for r in results]))
    else:
        # timings vary between runs and are left out of the deterministic report
        _emit(cfg, dumps({**report, "suites": [{k: v for k, v in r.items() if k != "seconds"} for r in results]}))
    return 0 if ok else 1


COMMANDS = {"gamma": cmd_gamma, "poly": cmd_poly, "moments": cmd_moments, "zeros": cmd_zeros,
            "weights": cmd_weights, "verify": cmd_verify, "ode": cmd_ode}


# ---------------------------------------------------------------- parsing

def _grid(text: str) -> list[float]:
    """"a:b:count" for a uniform grid, or a comma separated list."""
    if ":" in text:
        a, b, m = text.split(":")
        m = int(m)
        if m < 1:
            raise argparse.ArgumentTypeError("grid count must be positive")
        a, b = float(a), float(b)
        return [a + (b - a) * i / (m - 1) for i in range(m)] if m > 1 else [a]
    return [float(v) for v in text.split(",") if v.strip()]


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--case", required=True, choices=[c.value for c in rec.Case])
    common.add_argument("--mu", type=_rational)
    common.add_argument("--rho", type=_rational)
    common.add_argument("--gamma1", type=_rational)
    common.add_argument("--n", type=int)
    common.add_argument("--degree", type=int)
    common.add_argument("--format", dest="fmt", choices=["json", "csv"], default=None,
                        help="default: csv for weights, json otherwise")
    common.add_argument("--out")
    common.add_argument("--tol", type=float)
    common.add_argument("--star", action="store_true")
    common.add_argument("--suite", action="append", choices=SUITES + ("all",))
    common.add_argument("--grid", type=_grid, default=None,
                        help="weights abscissae: a:b:count or x1,x2,...")
    parser = argparse.ArgumentParser(prog="starpoly", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def _threads() -> int:
    raw = os.environ.get("STARPOLY_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        params = rec.FamilyParams(args.case, mu=args.mu, rho=args.rho, gamma1=args.gamma1)
    except (ValueError, StarpolyError) as exc:
        sys.stderr.write(dumps({"ok": False, "violations": [str(exc)]}) + "\n")
        return 2
    report = rec.validate_params(params)
    if not report.ok:
        sys.stderr.write(dumps(report.as_dict()) + "\n")
        return 2
    grid = args.grid
    if grid is None:
        # stay inside the (dilated) support
        top = (0.99 if params.case is rec.Case.C else 3.0) * wts.dilation(params)
        grid = [top * i / 20 for i in range(21)]
    fmt = args.fmt or ("csv" if args.command == "weights" else "json")
    cfg = RunConfig(params, args.n, args.degree, fmt, args.out, args.tol, args.star,
                    tuple(args.suite or ("all",)), grid, _threads())
    try:
        return COMMANDS[args.command](cfg)
    except UsageError as exc:
        sys.stderr.write(f"starpoly: {exc}\n")
        return 2
    except StarpolyError as exc:
        sys.stderr.write(dumps({"ok": False, "error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
