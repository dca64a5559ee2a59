"""Batch verification driver.

Runs named check suites against the library, writes one JSON record per
check (machine readable) plus a human-readable pass/fail line per check, and
emits solution grids as CSV.  Exit codes: 0 all checks pass, 1 check failed,
2 usage/config error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import os
import sys
import tempfile
import time
from dataclasses import dataclass

import numpy as np

from . import __version__
from .asymptotics import loglog_slope, v_neg_asym, v_pos_asym
from .errors import ConfigError, PainleveError
from .integrals import TailPolicy, pv_total_integral, total_integral_formula, v_hat
from .mkdv import (InitialDataCoefficients, SelfSimilarField, ab_to_params,
                   pde_residual_closure, pde_residual_fd, u_hat)
from .pii import solve_right_launch_homogeneous, fit_oscillation, tuned_solution
from .rh_verify import (ContourCircle, m_pred, n_matrix, residue_check_origin,
                        stationary_identity, t_left_parametrix,
                        t_right_parametrix, SIGMA2)
from .specfun import airy_ai, log_gamma, pcf_d
from .stokes import (connection_constants, make_params, rh_constants,
                     stokes_triple)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

SUITES = ("connection", "total-integral", "fourier-limit", "pde",
          "rh-checks", "specfun", "all")

_CONFIG_KEYS = {
    "alpha": float,
    "k": float,
    "a": float,
    "b": float,
    "x_lo": float,
    "x_hi": float,
    "step": float,
    "tol": float,
    "cutoff": float,
    "out": str,
}


@dataclass
class CheckReport:
    check_id: str
    lhs: object
    rhs: object
    abs_err: float
    tol: float
    passed: bool
    runtime_ms: float

    def to_json(self) -> str:
        def enc(v):
            if isinstance(v, complex):
                return [v.real, v.imag]
            if isinstance(v, (np.floating, np.complexfloating)):
                return enc(complex(v)) if np.iscomplexobj(v) else float(v)
            return v
        rec = {
            "check_id": self.check_id,
            "lhs": enc(self.lhs),
            "rhs": enc(self.rhs),
            "abs_err": self.abs_err,
            "tol": self.tol,
            "pass": self.passed,
            "runtime_ms": self.runtime_ms,
        }
        return json.dumps(rec)


def _check(check_id: str, lhs, rhs, tol: float, t0: float) -> CheckReport:
    err = abs(lhs - rhs)
    return CheckReport(check_id, lhs, rhs, float(err), float(tol),
                       bool(err <= tol), 1000.0 * (time.perf_counter() - t0))


def parse_config(path: str) -> dict:
    """Plain-text KEY = VALUE configuration; '#' comments; unknown keys are
    rejected."""
    values: dict = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected KEY = VALUE")
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            values[key] = _CONFIG_KEYS[key](val)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: bad value for {key}: {val!r}") from exc
    return values


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".painleve-mkdv-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def _suite_specfun(opts) -> list[CheckReport]:
    out = []
    t0 = time.perf_counter()
    ai0, aip0 = airy_ai(0.0)
    out.append(_check("airy.ai0", ai0, 0.3550280538878172, 1e-13, t0))
    t0 = time.perf_counter()
    out.append(_check("airy.aip0", aip0, -0.2588194037928068, 1e-13, t0))
    t0 = time.perf_counter()
    ai10 = airy_ai(10.0)[0]
    out.append(_check("airy.ai10", ai10, 1.1047532552898685e-10, 1e-20, t0))
    t0 = time.perf_counter()
    gamma_i = abs(cmath.exp(log_gamma(1j)))
    out.append(_check("gamma.reflection_i", gamma_i,
                      math.sqrt(math.pi / math.sinh(math.pi)), 1e-12, t0))
    t0 = time.perf_counter()
    z = 0.7 - 0.3j
    rec = log_gamma(z + 1.0) - log_gamma(z) - cmath.log(z)
    out.append(_check("gamma.recurrence", rec, 0.0, 1e-13, t0))
    t0 = time.perf_counter()
    d0 = pcf_d(0.0, 1.3)[0]
    out.append(_check("pcf.gaussian_identity", d0, math.exp(-1.3 ** 2 / 4.0), 1e-14, t0))
    t0 = time.perf_counter()
    worst = 0.0
    for nu in (-0.5j, 0.3, 1.0 + 0.2j):
        for zz in (1.0 + 1.0j, -2.0 + 0.5j, 3.0 - 2.0j):
            v_hi, _ = pcf_d(nu + 1.0, zz)
            v_mid, _ = pcf_d(nu, zz)
            v_lo, _ = pcf_d(nu - 1.0, zz)
            worst = max(worst, abs(v_hi - zz * v_mid + nu * v_lo))
    out.append(_check("pcf.three_term_recurrence", worst, 0.0, 1e-10, t0))
    return out


def _osc_residual_slope(p, sol, s_lo=20.0, s_hi=200.0) -> float:
    c = sol.connection
    blocks = []
    s = s_lo
    while s < s_hi:
        width = 2.0 * math.pi / math.sqrt(s)
        xs = np.linspace(-min(s + width, s_hi), -s, 40)
        v = sol.v(xs)[0]
        model = v_neg_asym(xs, p, c, include_alpha_term=True)[0]
        blocks.append((s + 0.5 * width, float(np.max(np.abs(v - model)))))
        s += width
    return loglog_slope(blocks)


def _suite_connection(opts) -> list[CheckReport]:
    p = opts["params"]
    out = []
    t0 = time.perf_counter()
    sol = tuned_solution(p)
    out.append(_check("connection.seam_at_x_match", sol.seam_jump, 0.0, 5e-3, t0))
    if p.alpha == 0.0 and not p.degenerate:
        t0 = time.perf_counter()
        grid = solve_right_launch_homogeneous(p.k, 12.0, -60.0, 1e-11)
        d_fit, phi_fit = fit_oscillation(grid, (-60.0, -30.0), 0.0)
        c = connection_constants(p)
        out.append(_check("connection.right_launch_d", d_fit, c.d, 1e-2, t0))
        t0 = time.perf_counter()
        dphi = abs(math.remainder(phi_fit - c.phi, 2.0 * math.pi))
        out.append(_check("connection.right_launch_phi", dphi, 0.0, 5e-2, t0))
    if not p.degenerate and sol.grid.covers(-200.0, -20.0):
        t0 = time.perf_counter()
        slope = _osc_residual_slope(p, sol)
        out.append(_check("connection.remainder_slope", min(slope, -1.6), slope, 0.0, t0))
    return out


def _suite_total_integral(opts) -> list[CheckReport]:
    p = opts["params"]
    cutoff = opts.get("cutoff", 60.0)
    tol = opts.get("tol", 1e-3)
    out = []
    t0 = time.perf_counter()
    got = pv_total_integral(p, TailPolicy(cutoff=cutoff))
    want = total_integral_formula(p)
    out.append(_check("total_integral.formula", got, want, tol, t0))
    return out


def _suite_fourier(opts) -> list[CheckReport]:
    p = opts["params"]
    out = []
    c = total_integral_formula(p)
    for xi in (1e-3, -1e-3):
        t0 = time.perf_counter()
        got = v_hat(p, xi)
        want = complex(c, -math.copysign(math.pi * p.alpha, xi))
        out.append(_check(f"fourier.v_hat_limit_xi={xi:+.0e}", got, want, 1e-2, t0))
    if "coeffs" in opts:
        coeffs = opts["coeffs"]
        pf = ab_to_params(coeffs)
        for xi in (1.0, -1.0):
            t0 = time.perf_counter()
            field = SelfSimilarField(pf, 1e-6)
            got = u_hat(field, xi)
            want = complex(coeffs.a, -math.copysign(math.pi * coeffs.b, xi))
            out.append(_check(f"fourier.u_hat_limit_xi={xi:+.0f}", got, want, 5e-2, t0))
    return out


def _suite_pde(opts) -> list[CheckReport]:
    p = opts["params"]
    out = []
    field = SelfSimilarField(p, 1.0)
    t0 = time.perf_counter()
    r1 = pde_residual_fd(field, (-3.0, 3.0), 0.05)
    r2 = pde_residual_fd(field, (-3.0, 3.0), 0.025)
    ratio = r1 / r2
    out.append(_check("pde.fd_convergence_ratio", ratio, 4.0, 0.5, t0))
    t0 = time.perf_counter()
    closure = pde_residual_closure(field, (-3.0, 3.0))
    out.append(_check("pde.closure_residual", closure, 0.0, 1e-9, t0))
    return out


def _suite_rh(opts) -> list[CheckReport]:
    p = opts["params"]
    rc = rh_constants(p)
    st = stokes_triple(p)
    out = []
    t0 = time.perf_counter()
    vals = [residue_check_origin(ContourCircle(0.0, r), rc.nu)
            for r in (0.05, 0.1, 0.2)]
    worst = max(abs(v + 2j * math.pi) for v in vals)
    out.append(_check("rh.residue_origin", worst, 0.0, 1e-8, t0))
    t0 = time.perf_counter()
    spread = max(abs(v - vals[0]) for v in vals)
    out.append(_check("rh.residue_radius_independent", spread, 0.0, 1e-8, t0))
    t0 = time.perf_counter()
    worst = 0.0
    for t_val in (20.0, 50.0, 100.0):
        lhs, rhs = stationary_identity(p, t_val)
        worst = max(worst, abs(lhs - rhs))
    out.append(_check("rh.stationary_identity", worst, 0.0, 1e-6, t0))
    t0 = time.perf_counter()
    prod = rc.h0 * rc.h1 * (1.0 - st.s1 * st.s3) - st.s1 * st.s3
    out.append(_check("rh.h0h1_identity", prod, 0.0, 1e-12, t0))
    if not p.degenerate:
        t0 = time.perf_counter()
        z = 0.5 + 0.15 * cmath.exp(0.7j)
        sym = np.max(np.abs(t_left_parametrix(p, 50.0, -z)
                            - SIGMA2 @ t_right_parametrix(p, 50.0, z) @ SIGMA2))
        out.append(_check("rh.sigma2_symmetry", float(sym), 0.0, 1e-14, t0))
        t0 = time.perf_counter()
        zs = [0.5 + 0.15 * cmath.exp(1j * (0.0371 + 2.0 * math.pi * j / 16.0))
              for j in range(16)]
        pts = []
        for t_val in np.geomspace(10.0, 1000.0, 13):
            nrm = max(np.linalg.norm(
                t_right_parametrix(p, t_val, z) @ np.linalg.inv(n_matrix(z, rc.nu))
                - m_pred(p, t_val, z, "right")) for z in zs)
            pts.append((t_val, nrm))
        slope = loglog_slope(pts)
        out.append(_check("rh.parametrix_decay_slope", min(slope, -1.4), slope, 0.0, t0))
    return out


_SUITE_FUNCS = {
    "specfun": _suite_specfun,
    "connection": _suite_connection,
    "total-integral": _suite_total_integral,
    "fourier-limit": _suite_fourier,
    "pde": _suite_pde,
    "rh-checks": _suite_rh,
}


def run_suite(name: str, opts: dict) -> list[CheckReport]:
    names = [s for s in SUITES if s != "all"] if name == "all" else [name]
    reports: list[CheckReport] = []
    for n in names:
        reports.extend(_SUITE_FUNCS[n](opts))
    return reports


# ---------------------------------------------------------------------------
# grid emission
# ---------------------------------------------------------------------------

def emit_grid(opts: dict) -> str:
    p = opts["params"]
    x_lo = opts.get("x_lo", -60.0)
    x_hi = opts.get("x_hi", 4.0)
    step = opts.get("step", 0.01)
    if not (step > 0.0 and x_lo < x_hi):
        raise ConfigError("grid needs x_lo < x_hi and step > 0")
    n = int(round((x_hi - x_lo) / step))
    xs = x_lo + step * np.arange(n + 1)
    sol = tuned_solution(p)
    v, vp = sol.v(xs)
    c = sol.connection
    fmt = "%.17g"
    lines = [f"# painleve-mkdv {__version__} alpha={p.alpha:.17g} k={p.k:.17g} "
             f"x_lo={x_lo:.17g} x_hi={x_hi:.17g} step={step:.17g}",
             "x,v,v_prime,v_neg_asym,v_pos_asym,residual_osc,residual_full"]
    for i, x in enumerate(xs):
        if x <= -1.0 and c is not None:
            osc = v_neg_asym(x, p, c, include_alpha_term=False)[0]
            r_osc = abs(v[i] - osc)
            r_full = abs(v[i] - osc - p.alpha / x)
            neg_txt = fmt % osc
            r_osc_txt = fmt % r_osc
            r_full_txt = fmt % r_full
        else:
            neg_txt = r_osc_txt = r_full_txt = "nan"
        pos_txt = fmt % v_pos_asym(x, p.alpha)[0] if x >= 1.0 else "nan"
        lines.append(",".join([fmt % x, fmt % v[i], fmt % vp[i],
                               neg_txt, pos_txt, r_osc_txt, r_full_txt]))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="painleve-mkdv",
        description="verification suites and solution grids for real "
                    "Ablowitz-Segur Painleve II profiles")
    ap.add_argument("command", choices=SUITES + ("grid",))
    ap.add_argument("--config", help="plain-text KEY = VALUE configuration file")
    ap.add_argument("--alpha", type=float)
    ap.add_argument("--k", type=float)
    ap.add_argument("--a", type=float)
    ap.add_argument("--b", type=float)
    ap.add_argument("--out", help="output path (report .jsonl or grid .csv)")
    ap.add_argument("--tol", type=float)
    return ap


def _resolve_options(args) -> dict:
    opts: dict = {}
    if args.config:
        opts.update(parse_config(args.config))
    for key in ("alpha", "k", "a", "b", "out", "tol"):
        val = getattr(args, key)
        if val is not None:
            opts[key] = val
    has_ab = "a" in opts or "b" in opts
    has_alpha_k = "alpha" in opts or "k" in opts
    if has_ab and has_alpha_k:
        raise ConfigError("give either (alpha, k) or (a, b), not both")
    if has_ab:
        coeffs = InitialDataCoefficients(opts.get("a", 0.0), opts.get("b", 0.0))
        opts["coeffs"] = coeffs
        opts["params"] = ab_to_params(coeffs)
    else:
        opts["params"] = make_params(opts.get("alpha", 0.0), opts.get("k", 0.5))
    # environment may override output paths only
    env_out = os.environ.get("PAINLEVE_MKDV_OUT")
    if env_out:
        opts["out"] = env_out
    return opts


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        opts = _resolve_options(args)
    except (ConfigError, PainleveError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        if args.command == "grid":
            out_path = opts.get("out", "painleve-mkdv-grid.csv")
            _atomic_write(out_path, emit_grid(opts))
            print(f"grid written to {out_path}")
            return EXIT_OK
        reports = run_suite(args.command, opts)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except PainleveError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    out_path = opts.get("out", "painleve-mkdv-report.jsonl")
    _atomic_write(out_path, "".join(r.to_json() + "\n" for r in reports))
    all_pass = True
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        all_pass &= r.passed
        print(f"[{status}] {r.check_id}: abs_err={r.abs_err:.3e} tol={r.tol:.1e} "
              f"({r.runtime_ms:.0f} ms)")
    print(f"report written to {out_path}")
    return EXIT_OK if all_pass else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
