"""Command line: run verification suites and emit datasets.

    sp2branch run --suite sl2-matrix --n 1..8
    sp2branch run --suite all --json --out report.json
    sp2branch emit recurrence --weight 0 --mmax 10 --format json
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import branching as br
from . import hahn
from .fock import FockPolynomial, NormFormulaInput, inner_product, monomial_expand_invariant, norm_closed_form
from .metaplectic import principal_sl2, verify_sl2_matrix, verify_sl2_weyl
from .report import Check, VerificationReport

SCHEMA = "1"
SUITES = (
    "sl2-matrix",
    "sl2-weyl",
    "norms",
    "recurrence",
    "hahn-orthogonality",
    "spectrum",
    "hwv",
    "discrete-catalog",
)
DATASETS = ("density", "spectrum", "recurrence", "hwv-partials", "eigenfunction")

DEFAULTS = {
    "sl2-matrix": {"n": [1, 2, 3, 4, 5, 6, 7, 8]},
    "sl2-weyl": {"n": [2]},
    "norms": {"mmax": 20, "k": list(range(11))},
    "recurrence": {"weight": [-1, 0], "mmax": 100},
    "hahn-orthogonality": {"weight": [-1, 0], "mmax": 10, "tol": 1e-8},
    "spectrum": {"weight": [-1, 0], "size": [250, 500, 1000, 2000], "tol": 0.05},
    "hwv": {"k": [0, 1, 2, 3, 4, 5], "terms": 30, "tol": 1e-10},
    "discrete-catalog": {"mmax": 12, "k": [10]},
}

_PARAMS = {-1: hahn.ODD_PARAMS, 0: hahn.EVEN_PARAMS}


class UsageError(ValueError):
    pass


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    wall_time: float = 0.0
    options: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "wall_time": round(self.wall_time, 3),
            "options": self.options,
            "checks": [c.to_dict() for c in self.checks],
        }

    def text(self, verbose: bool = False) -> str:
        n_fail = sum(not c.passed for c in self.checks)
        head = f"{self.suite}: {'PASS' if self.passed else 'FAIL'}  {len(self.checks) - n_fail}/{len(self.checks)} checks  ({self.wall_time:.2f} s)"
        lines = [head]
        for c in self.checks:
            if verbose or not c.passed:
                lines.append(f"  [{c.status}] {c.id}: {c.description}")
                if not c.passed:
                    lines.append(f"      expected {c.expected}")
                    lines.append(f"      actual   {c.actual}")
        return "\n".join(lines)


# -- number formatting --------------------------------------------------------------
def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def fmt_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


# -- suites -------------------------------------------------------------------------
def _suite_sl2_matrix(o):
    rep = VerificationReport("sl2-matrix")
    for n in o["n"]:
        rep.extend(verify_sl2_matrix(principal_sl2(n)))
    return rep


def _suite_sl2_weyl(o):
    rep = VerificationReport("sl2-weyl")
    for n in o["n"]:
        rep.extend(verify_sl2_weyl(n), prefix=f"n{n}:")
    return rep


def _suite_norms(o):
    rep = VerificationReport("norms")
    for var, j in (("z1", 0), ("z2", 1)):
        for m in range(o["mmax"] + 1):
            for k in o["k"]:
                extra = (k, 0) if j == 0 else (0, k)
                v = monomial_expand_invariant(m, extra)
                brute = inner_product(v, v)
                closed = norm_closed_form(NormFormulaInput(m, k, var))
                rep.add(f"{var}:m{m}:k{k}", f"||I^{m} {var}^{k}||^2 closed form", brute == closed, closed, brute)
    return rep


def _lemma_triple(mu: int, m: int):
    m = Fraction(m)
    if mu == -1:
        return (m + Fraction(1, 3)) * (m + Fraction(2, 3)), -(2 * m * m + m + Fraction(1, 3)), m * m
    return (m + Fraction(2, 3)) * (m + Fraction(4, 3)), -(2 * m * m + 2 * m + Fraction(2, 3)), m * m


def _suite_recurrence(o):
    rep = VerificationReport("recurrence")
    for mu in o["weight"]:
        try:
            data = br.casimir_tridiagonal(mu, o["mmax"])
        except br.NonTridiagonalError as exc:
            rep.add(f"w{mu}:tridiagonal", "exact three-term action", False, "tridiagonal", str(exc))
            continue
        rep.add(f"w{mu}:tridiagonal", "exact three-term action", True, "tridiagonal", "tridiagonal")
        if mu not in _PARAMS:
            continue
        for m, trip in enumerate(data.triples):
            want = _lemma_triple(mu, m)
            rep.add(
                f"w{mu}:m{m}:triple",
                "(alpha, beta, gamma) closed form",
                tuple(trip) == want,
                ", ".join(map(fmt_rational, want)),
                ", ".join(map(fmt_rational, trip)),
            )
        rep.extend(br.match_hahn_params(data, _PARAMS[mu]), prefix=f"w{mu}:hahn:")
    return rep


def _suite_orthogonality(o):
    rep = VerificationReport("hahn-orthogonality")
    tol = o["tol"]
    for mu in o["weight"]:
        p = _PARAMS[mu]
        G, _, panels, X = hahn.gram_matrix(o["mmax"], p)
        norms = np.array([float(p.norm_sq(m)) for m in range(o["mmax"] + 1)])
        scale = np.sqrt(np.outer(norms, norms))
        expected = np.diag(norms)
        rel = np.abs(G - expected) / scale
        for m in range(o["mmax"] + 1):
            for l in range(m, o["mmax"] + 1):
                rep.add(
                    f"w{mu}:<{m},{l}>",
                    f"quadrature inner product, rel err <= {tol:g}",
                    rel[m, l] <= tol,
                    fmt_rational(p.norm_sq(m)) if m == l else "0",
                    f"{fmt_float(G[m, l])} (rel err {rel[m, l]:.2e})",
                )
        mass = hahn.total_mass(p)
        rep.add(f"w{mu}:mass", "total mass 1 to 1e-10", abs(mass - 1) <= 1e-10, "1", fmt_float(mass))
    return rep


def _suite_spectrum(o):
    rep = VerificationReport("spectrum")
    sizes = sorted(o["size"])
    for mu in o["weight"]:
        mins = []
        last = None
        for N in sizes:
            r = hahn.spectrum_report(mu, N)
            mins.append(r.min)
            last = r
            rep.add(f"w{mu}:N{N}:lower", "all -C eigenvalues >= 1/2 - 1e-6", r.min >= 0.5 - 1e-6, ">= 0.499999", fmt_float(r.min))
            rep.add(f"w{mu}:N{N}:interlace", "measure CDF between one-sided Gauss CDFs", r.interlacing, "True", str(r.interlacing))
        dec = all(b < a for a, b in zip(mins, mins[1:]))
        rep.add(f"w{mu}:min-decreasing", f"minimum decreases across N={sizes}", dec, "strictly decreasing", ", ".join(map(fmt_float, mins)))
        rep.add(
            f"w{mu}:N{sizes[-1]}:ks",
            f"mid-distribution KS of Gauss spectral measure <= {o['tol']:g}",
            last.ks_weighted <= o["tol"],
            f"<= {o['tol']:g}",
            f"{fmt_float(last.ks_weighted)} (sup {last.ks_weighted_sup:.3f}, counting {last.ks_counting:.3f})",
        )
    return rep


def _suite_hwv(o):
    rep = VerificationReport("hwv")
    L = o["terms"]
    for k in o["k"]:
        if k == 0:
            np_ = br.hwv_norm_partials(0, L)
            rep.add(
                "k0:divergent",
                "k = 0 norm series certified divergent (expected)",
                np_.verdict == "divergent",
                "divergent",
                f"{np_.verdict} (doubling increments >= 1/9: {sorted(np_.evidence['doubling_increments'].values())[0]:.4f} min)",
            )
            continue
        try:
            s = br.solve_hwv(k, L)
        except AssertionError as exc:
            rep.add(f"k{k}:solve", "highest weight recursion", False, "solved", str(exc))
            continue
        want = [Fraction(math.factorial(k), math.factorial(l) * math.factorial(k + l)) for l in range(L + 1)]
        rep.add(f"k{k}:coefficients", f"a_l = k!/(l!(k+l)!) for l <= {L}", s.a == want, "k!/(l!(k+l)!)", "match" if s.a == want else "mismatch")
        band = [k + 4 * L + 2]
        rep.add(f"k{k}:residual", "E+ residual only in the top degree band", s.residual.degrees() == band, band, s.residual.degrees())
        defect = br.hwv_casimir_defect(s)
        nu = 3 * k + 1
        rep.add(
            f"k{k}:casimir",
            f"C T = {fmt_rational(Fraction(nu * nu, 2) - nu)} T on interior degrees",
            defect.is_zero(),
            "0",
            "0" if defect.is_zero() else f"{len(defect)} terms",
        )
        if k == 1:
            a = br.hwv_norm_partials(1, min(L, 2), tail_L=1 << 15)
            b = br.hwv_norm_partials(1, min(L, 2), tail_L=1 << 16)
            ea, eb = a.evidence["value_estimate"], b.evidence["value_estimate"]
            lo, hi = b.evidence["value_bracket"]
            tol = o["tol"]
            rep.add("k1:tail-stable", f"tail-bounded value stable to {tol:g}", abs(ea - eb) <= tol and hi - lo <= tol,
                    f"<= {tol:g}", f"{fmt_float(eb)} (shift {abs(ea - eb):.1e}, width {hi - lo:.1e})")
            closed = br.hwv_norm_closed_form(1)
            rep.add("k1:closed-form", "bracket contains (k!)^2 (k-1)!/(G(k+1/3)G(k+2/3))",
                    lo - tol <= closed <= hi + tol, fmt_float(closed), f"[{fmt_float(lo)}, {fmt_float(hi)}]")
    return rep


def _suite_catalog(o):
    rep = VerificationReport("discrete-catalog")
    scan = br.no_lws_scan(o["mmax"], [FockPolynomial.monomial((0, 2))])
    rep.extend(scan.report, prefix="lws:")
    for cnd, ok, why in scan.candidates:
        rep.add(f"lws:candidate:{cnd!r}", "non-kernel candidate rejected", not ok, "rejected", why)
    div = br.hwv_norm_partials(0, 2).verdict
    rep.add("k0:excluded", "k = 0 excluded by norm divergence", div == "divergent", "divergent", div)
    k_max = max(o["k"])
    cat = br.discrete_components("all", k_max)
    want = [-(3 * k + 1) for k in range(1, k_max + 1)]
    got = [r.weight for r in cat]
    rep.add("catalog:all", "components sigma_{-(3k+1)}, k >= 1", got == want, want, got)
    even = [r.weight for r in br.discrete_components("even", k_max)]
    want_even = [-6 * l - 1 for l in range(1, k_max // 2 + 1)]
    rep.add("catalog:even", "even part has weights -6l-1", even == want_even, want_even, even)
    odd = [r.weight for r in br.discrete_components("odd", k_max)]
    want_odd = [-6 * l + 2 for l in range(1, (k_max + 1) // 2 + 1)]
    rep.add("catalog:odd", "odd part has weights -6l+2", odd == want_odd, want_odd, odd)
    for r in cat[:3]:
        ev = br.rep_casimir_eigenvalue(r)
        nu = r.parameter
        rep.add(f"catalog:{r}:casimir", "Casimir eigenvalue nu^2/2 - nu", ev == Fraction(nu * nu, 2) - nu, fmt_rational(Fraction(nu * nu, 2) - nu), fmt_rational(ev))
    return rep


_RUNNERS = {
    "sl2-matrix": _suite_sl2_matrix,
    "sl2-weyl": _suite_sl2_weyl,
    "norms": _suite_norms,
    "recurrence": _suite_recurrence,
    "hahn-orthogonality": _suite_orthogonality,
    "spectrum": _suite_spectrum,
    "hwv": _suite_hwv,
    "discrete-catalog": _suite_catalog,
}


def _validate(name: str, o: dict) -> None:
    for key in ("n", "k", "size", "weight"):
        if key in o and not isinstance(o[key], list):
            o[key] = [o[key]]
    if any(n < 1 for n in o.get("n", [])):
        raise UsageError("--n values must be >= 1")
    if any(k < 0 for k in o.get("k", [])):
        raise UsageError("--k values must be >= 0")
    if any(s < 2 for s in o.get("size", [])):
        raise UsageError("--size values must be >= 2")
    if o.get("mmax", 0) < 0 or o.get("terms", 0) < 0:
        raise UsageError("--mmax and --terms must be >= 0")
    if "tol" in o and not o["tol"] > 0:
        raise UsageError("--tol must be positive")
    if name in ("hahn-orthogonality", "spectrum") and any(w not in _PARAMS for w in o["weight"]):
        raise UsageError(f"{name} supports weights -1 and 0")
    if name == "sl2-weyl" and any(n > 4 for n in o["n"]):
        raise UsageError("sl2-weyl supports n <= 4")
    if name == "discrete-catalog" and max(o["k"]) < 1:
        raise UsageError("discrete-catalog needs --k >= 1")


def run_suite(name: str, options: dict | None = None) -> SuiteReport:
    """Run one named suite; ``options`` override the suite defaults."""
    if name not in _RUNNERS:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    o = {k: (list(v) if isinstance(v, list) else v) for k, v in DEFAULTS[name].items()}
    for key, val in (options or {}).items():
        if val is not None and key in o:
            o[key] = val
    _validate(name, o)
    t0 = time.perf_counter()
    rep = _RUNNERS[name](o)
    return SuiteReport(name, rep.checks, time.perf_counter() - t0, o)


def _run_one(args):
    return run_suite(*args)


# -- datasets -----------------------------------------------------------------------
def _dataset(name: str, o: dict) -> tuple[list[str], list[list]]:
    if name == "density":
        p = _PARAMS[o["weight"]]
        n = int(round(o["xmax"] / o["step"]))
        xs = np.arange(n + 1) * o["step"]
        rho = hahn.measure_density(xs, p)
        return ["x", "density"], [[float(x), float(r)] for x, r in zip(xs, rho)]
    if name == "spectrum":
        r = hahn.spectrum_report(o["weight"], o["size"])
        _, w = hahn.gauss_weights(hahn.jacobi_matrix(r.params, r.N))
        cols = ["j", "theta", "minus_casimir", "lambda", "x", "gauss_weight"]
        rows = [
            [j, float(t), float(c), float(lam), float(x), float(g)]
            for j, (t, c, lam, x, g) in enumerate(zip(r.theta, r.casimir, r.lambda_parametrization, r.x_parametrization, w))
        ]
        return cols, rows
    if name == "recurrence":
        data = br.casimir_tridiagonal(o["weight"], o["mmax"])
        return ["m", "alpha", "beta", "gamma"], [[m, a, b, g] for m, (a, b, g) in enumerate(data.triples)]
    if name == "hwv-partials":
        res = br.hwv_norm_partials(o["k"], o["terms"], doublings=4)
        return ["L", "S", "S_float"], [[L, s, float(s)] for L, s in enumerate(res.partials)]
    if name == "eigenfunction":
        coeffs = br.eigenfunction_coefficients(o["x"], o["terms"])
        p = hahn.ODD_PARAMS
        return ["m", "coefficient", "norm_sq"], [[m, float(c), p.norm_sq(m)] for m, c in enumerate(coeffs)]
    raise UsageError(f"unknown dataset {name!r}; choose from {', '.join(DATASETS)}")


_EMIT_KEYS = {
    "density": ("weight", "xmax", "step"),
    "spectrum": ("weight", "size"),
    "recurrence": ("weight", "mmax"),
    "hwv-partials": ("k", "terms"),
    "eigenfunction": ("x", "terms"),
}


def _cell(v):
    if isinstance(v, Fraction):
        return fmt_rational(v)
    if isinstance(v, float):
        return fmt_float(v)
    return v


def emit(name: str, fmt: str = "csv", options: dict | None = None) -> str:
    """Render a dataset deterministically as CSV or JSON text."""
    o = {"weight": -1, "xmax": 20.0, "step": 0.01, "size": 2000, "mmax": 10, "k": 1, "terms": 2, "x": 1.0}
    o.update({k: v for k, v in (options or {}).items() if v is not None})
    for key in ("weight", "size", "k"):
        if isinstance(o[key], list):
            o[key] = o[key][0]
    if name in ("density", "spectrum") and o["weight"] not in _PARAMS:
        raise UsageError(f"{name} supports weights -1 and 0")
    if name in ("density",) and not (o["step"] > 0 and o["xmax"] >= 0):
        raise UsageError("--step must be positive and --xmax nonnegative")
    cols, rows = _dataset(name, o)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(v) for v in r])
        return buf.getvalue()
    if fmt == "json":
        recs = [dict(zip(cols, (_cell(v) if not isinstance(v, float) else v for v in r))) for r in rows]
        opts = {k: o[k] for k in sorted(_EMIT_KEYS[name])}
        return json.dumps({"schema": SCHEMA, "dataset": name, "options": opts, "rows": recs}, indent=1) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


# -- argument handling --------------------------------------------------------------
def int_list(text: str) -> list[int]:
    """Parse ``3``, ``1..8``, ``-1,0`` or ``1..3,7``."""
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if ".." in part:
            a, b = part.split("..")
            lo, hi = int(a), int(b)
            if hi < lo:
                raise argparse.ArgumentTypeError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def _load_config(path: str) -> dict:
    cfg = json.loads(Path(path).read_text())
    if not isinstance(cfg, dict):
        raise UsageError("config must be a JSON object")
    return cfg


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int_list, help="n values, e.g. 1..8")
    p.add_argument("--weight", type=int_list, help="weights, e.g. -1,0")
    p.add_argument("--mmax", type=int, help="largest basis index (degree bound for discrete-catalog)")
    p.add_argument("--size", type=int_list, help="truncation sizes N")
    p.add_argument("--k", type=int_list, help="k values (largest is k_max for discrete-catalog)")
    p.add_argument("--terms", type=int, help="series terms L or M")
    p.add_argument("--tol", type=float, help="tolerance")
    p.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sp2branch", description=__doc__.strip().splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="run verification suites")
    r.add_argument("--suite", action="append", help=f"suite name or 'all' ({', '.join(SUITES)}); repeatable")
    r.add_argument("--json", action="store_true", help="print the report as JSON")
    r.add_argument("--config", help="JSON file with suites and options; flags override it")
    r.add_argument("--jobs", type=int, default=1, help="run suites in this many processes")
    r.add_argument("--verbose", "-v", action="store_true", help="list passing checks too")
    _common(r)
    e = sub.add_parser("emit", help="write a dataset")
    e.add_argument("dataset", choices=DATASETS)
    e.add_argument("--format", choices=("csv", "json"), default="csv")
    e.add_argument("--json", action="store_true", help="shorthand for --format json")
    e.add_argument("--xmax", type=float, help="density: right end of the x grid")
    e.add_argument("--step", type=float, help="density: grid step")
    e.add_argument("--x", type=float, help="eigenfunction: scaled spectral variable")
    _common(e)
    return ap


_OPTION_KEYS = ("n", "weight", "mmax", "size", "k", "terms", "tol")


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    flags = {k: getattr(args, k) for k in _OPTION_KEYS if getattr(args, k) is not None}
    try:
        if args.command == "emit":
            opts = dict(flags)
            for k in ("xmax", "step", "x"):
                if getattr(args, k) is not None:
                    opts[k] = getattr(args, k)
            _write(emit(args.dataset, "json" if args.json else args.format, opts), args.out)
            return 0
        cfg = _load_config(args.config) if args.config else {}
        names = args.suite or cfg.get("suites") or ["all"]
        if "all" in names:
            names = list(SUITES)
        jobs = []
        for name in names:
            if name not in SUITES:
                raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
            o = dict(cfg.get("options", {}))
            o.update(cfg.get(name, {}))
            o.update(flags)
            jobs.append((name, o))
        if args.jobs > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(args.jobs) as ex:
                reports = list(ex.map(_run_one, jobs))
        else:
            reports = [_run_one(j) for j in jobs]
    except (UsageError, OSError, json.JSONDecodeError) as exc:
        print(f"sp2branch: error: {exc}", file=sys.stderr)
        return 2
    ok = all(r.passed for r in reports)
    if args.json:
        doc = {"schema": SCHEMA, "status": "pass" if ok else "fail", "suites": [r.to_dict() for r in reports]}
        text = json.dumps(doc, indent=1) + "\n"
    else:
        text = "\n".join(r.text(args.verbose) for r in reports) + f"\n{'ALL PASS' if ok else 'FAILURES'}\n"
    _write(text, args.out)
    return 0 if ok else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
