"""Command-line front end.

Runs kernel evaluations, the four solvers, the named verification suites,
and the scaling/quadrature studies, writing CSV or a structured-text
record.  Exit codes: 0 success, 1 usage or configuration error, 2
verification failure.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time
from datetime import datetime, timezone

import numpy as np

from .errors import ConfigError, DomainError
from .hyperbolic import (
    HyperbolicPoint,
    bump_profile_2d,
    hyperbolic_solve,
)
from .kernel import wave_kernel
from .profiles import BumpProfile, read_profile_csv
from .propagator import solve_cauchy, solve_cauchy_regularized
from .quadrature import gauss_legendre
from .reductions import (
    ScalingStudy,
    TelegraphParams,
    constant_potential_solve,
    scaling_limit_gap,
    telegraph_solve,
)
from .verification import SUITES, run_suites

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_VERIFY = 2


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise ConfigError(message)


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _parse_floats(text: str, flag: str) -> list[float]:
    try:
        return [float(p) for p in text.split(",") if p != ""]
    except ValueError as exc:
        raise ConfigError(f"{flag} expects a comma-separated list of numbers: {exc}")


def _parse_grid(text: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"--x-grid expects min:max:count, got {text!r}")
    lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    if count < 1 or (count > 1 and not hi > lo):
        raise ConfigError(f"--x-grid needs min < max and count >= 1, got {text!r}")
    return np.linspace(lo, hi, count)


def _parse_profile(text: str, two_dim: bool = False):
    kind, _, rest = text.partition(":")
    if kind == "bump" and not two_dim:
        parts = rest.split(":")
        if len(parts) != 2:
            raise ConfigError(f"bump profile expects bump:a:b, got {text!r}")
        return BumpProfile(float(parts[0]), float(parts[1]))
    if kind == "file" and not two_dim:
        return read_profile_csv(rest)
    if kind == "bump2" and two_dim:
        parts = rest.split(":")
        if len(parts) != 4:
            raise ConfigError(f"2-D bump expects bump2:x0:x1:y0:y1, got {text!r}")
        return bump_profile_2d(*(float(p) for p in parts))
    expected = "bump2:x0:x1:y0:y1" if two_dim else "bump:a:b or file:PATH"
    raise ConfigError(f"profile {text!r} not recognized; expected {expected}")


def _parse_point(text: str) -> HyperbolicPoint:
    parts = text.split(",")
    if len(parts) != 2:
        raise ConfigError(f"--w expects X,Y, got {text!r}")
    return HyperbolicPoint(float(parts[0]), float(parts[1]))


def _workers() -> int:
    raw = os.environ.get("LIOUWAVE_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"LIOUWAVE_THREADS must be an integer, got {raw!r}")
    if n < 0:
        raise ConfigError("LIOUWAVE_THREADS must be >= 0")
    return os.cpu_count() or 1 if n == 0 else n


def _grid_values(points, evaluate) -> list[float]:
    """Evaluate a pure function over indexed points; order never depends on workers."""
    workers = _workers()
    if workers > 1 and len(points) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(evaluate, points))
    return [evaluate(p) for p in points]


def _echo(args: argparse.Namespace, skip=("out", "format", "no_timestamp", "func")) -> str:
    pairs = []
    for key in sorted(vars(args)):
        if key in skip:
            continue
        value = getattr(args, key)
        if value is None:
            continue
        pairs.append(f"{key.replace('_', '-')}={value}")
    return " ".join(pairs)


def _write_record(args, columns, rows, provenance, started):
    lines = []
    wall = time.perf_counter() - started
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    echo = _echo(args)
    if args.format == "csv":
        if not args.no_timestamp:
            lines.append(f"# generated {stamp} wall_time_s={wall:.3f}")
        lines.append(f"# config: {echo}")
        lines.append(f"# provenance: {provenance}")
        lines.append(",".join(columns))
        lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    else:
        lines.append("liouwave result record")
        if not args.no_timestamp:
            lines.append(f"generated: {stamp}")
            lines.append(f"wall_time_s: {wall:.3f}")
        lines.append(f"config: {echo}")
        lines.append(f"provenance: {provenance}")
        lines.append(f"columns: {','.join(columns)}")
        lines.append(f"rows: {len(rows)}")
        lines.extend("row: " + ",".join(_fmt(v) for v in row) for row in rows)
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_eval_kernel(args, started):
    times = _parse_floats(args.t, "--t")
    xs = _parse_grid(args.x_grid)
    rows = []
    for t in times:
        for x in xs:
            try:
                value = wave_kernel(t, float(x), args.xp, args.k, args.coef_a, args.coef_b)
            except DomainError:
                value = math.nan
            rows.append((t, float(x), args.xp, value))
    _write_record(args, ("t", "X", "Xp", "value"), rows, "closed-form", started)
    return EXIT_OK


def _solver_rows(times, xs, solve_one):
    points = [(t, float(x)) for t in times for x in xs]
    values = _grid_values(points, lambda p: 0.0 if p[0] == 0.0 else solve_one(*p))
    return [(t, x, v) for (t, x), v in zip(points, values)]


def _check_times(times):
    if any(t < 0.0 for t in times):
        raise ConfigError("--t values must be >= 0")
    return times


def _cmd_solve(args, started):
    profile = _parse_profile(args.profile)
    times = _check_times(_parse_floats(args.t, "--t"))
    xs = _parse_grid(args.x_grid)
    rule = gauss_legendre(args.quad_order)
    solver = solve_cauchy_regularized if args.regularized else solve_cauchy

    rows = _solver_rows(times, xs, lambda t, x: solver(args.k, profile, t, x, rule, args.panels))
    provenance = "regularized" if args.regularized else "quadrature"
    _write_record(args, ("t", "X", "value"), rows, provenance, started)
    return EXIT_OK


def _cmd_solve_const(args, started):
    profile = _parse_profile(args.profile)
    times = _check_times(_parse_floats(args.t, "--t"))
    xs = _parse_grid(args.x_grid)
    rule = gauss_legendre(args.quad_order)
    rows = _solver_rows(
        times, xs,
        lambda t, x: constant_potential_solve(args.k, profile, t, x, rule, args.panels),
    )
    _write_record(args, ("t", "X", "value"), rows, "quadrature", started)
    return EXIT_OK


def _cmd_solve_telegraph(args, started):
    params = TelegraphParams(args.alpha, args.beta)
    profile = _parse_profile(args.profile)
    times = _check_times(_parse_floats(args.t, "--t"))
    xs = _parse_grid(args.x_grid)
    rule = gauss_legendre(args.quad_order)
    rows = _solver_rows(
        times, xs,
        lambda t, x: telegraph_solve(params, profile, t, x, rule, args.panels),
    )
    _write_record(args, ("t", "X", "value"), rows, "quadrature", started)
    return EXIT_OK


def _cmd_solve_hyperbolic(args, started):
    profile = _parse_profile(args.profile, two_dim=True)
    times = _check_times(_parse_floats(args.t, "--t"))
    w = _parse_point(args.w)
    rule = gauss_legendre(args.quad_order)
    rows = []
    for t in times:
        value = 0.0 if t == 0.0 else hyperbolic_solve(
            profile, t, w, rule, args.panels, args.ntheta
        )
        rows.append((t, w.x, w.y, value))
    _write_record(args, ("t", "x", "y", "value"), rows, "quadrature", started)
    return EXIT_OK


def _cmd_verify(args, started):
    names = list(SUITES) if args.suite == "all" else [s.strip() for s in args.suite.split(",")]
    results = run_suites(names, dx=args.dx, dt=args.dt, cfl=args.cfl)
    wall = time.perf_counter() - started
    lines = []
    if not args.no_timestamp:
        stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        lines.append(f"# generated {stamp} wall_time_s={wall:.3f}")
    lines.append(f"# config: {_echo(args)}")
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        note = f"  ({r.note})" if r.note else ""
        lines.append(
            f"{status}  [{r.suite}] {r.name:<{width}}  max_err={r.max_err:.3e}  tol={r.tol:g}{note}"
        )
    failed = [r for r in results if not r.passed]
    lines.append(f"# {len(results) - len(failed)}/{len(results)} checks passed")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return EXIT_VERIFY if failed else EXIT_OK


def _cmd_limit_study(args, started):
    lambdas = tuple(_parse_floats(args.lambdas, "--lambdas"))
    study = ScalingStudy(lambdas=lambdas, k=args.k)
    gaps = scaling_limit_gap(study)
    rows = [(lam, float(gap)) for lam, gap in zip(lambdas, gaps)]
    _write_record(args, ("lambda", "max_gap"), rows, "closed-form", started)
    return EXIT_OK


def _cmd_convergence(args, started):
    profile = _parse_profile(args.profile)
    times = _check_times(_parse_floats(args.t, "--t"))
    t = times[0]
    if t <= 0.0:
        raise ConfigError("convergence study needs t > 0")
    xs = _parse_grid(args.x_grid)
    rule = gauss_legendre(args.quad_order)
    rows = []
    panels = 1
    while panels <= args.max_panels:
        gap = max(
            abs(
                solve_cauchy(args.k, profile, t, float(x), rule, panels)
                - solve_cauchy_regularized(args.k, profile, t, float(x), rule, panels)
            )
            for x in xs
        )
        rows.append((float(panels), gap))
        panels *= 2
    _write_record(args, ("panels", "gap"), rows, "quadrature", started)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser assembly

def _add_output_flags(p):
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=("csv", "doc"), default="csv")
    p.add_argument("--no-timestamp", action="store_true",
                   help="suppress the timestamp/wall-time header line")


def _add_quad_flags(p):
    p.add_argument("--quad-order", type=int, default=16)
    p.add_argument("--panels", type=int, default=8)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="liouwave", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval-kernel", help="evaluate the light-cone wave kernel on a grid")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--t", required=True, help="comma-separated times")
    p.add_argument("--x-grid", required=True, help="min:max:count")
    p.add_argument("--xp", type=float, default=0.0, help="source position")
    p.add_argument("--coef-a", type=float, default=1.0, help="first-kind branch weight")
    p.add_argument("--coef-b", type=float, default=0.0, help="second-kind branch weight")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_eval_kernel)

    p = sub.add_parser("solve", help="exponential-potential Cauchy solve on a grid")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--profile", required=True, help="bump:a:b or file:PATH")
    p.add_argument("--t", required=True)
    p.add_argument("--x-grid", required=True)
    p.add_argument("--regularized", action="store_true",
                   help="use the substituted fixed-interval form")
    _add_quad_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("solve-const", help="constant-potential Cauchy solve on a grid")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--profile", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--x-grid", required=True)
    _add_quad_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_solve_const)

    p = sub.add_parser("solve-telegraph", help="transmission-line solve on a grid")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--profile", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--x-grid", required=True)
    _add_quad_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_solve_telegraph)

    p = sub.add_parser("solve-hyperbolic", help="half-plane wave solve at a point")
    p.add_argument("--profile", required=True, help="bump2:x0:x1:y0:y1")
    p.add_argument("--w", required=True, help="observation point X,Y (Y > 0)")
    p.add_argument("--t", required=True)
    p.add_argument("--ntheta", type=int, default=64, help="angular quadrature nodes")
    _add_quad_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_solve_hyperbolic)

    p = sub.add_parser("verify", help="run named verification suites")
    p.add_argument("--suite", default="all",
                   help="comma-separated suite names or 'all' "
                        f"(available: {', '.join(sorted(SUITES))})")
    p.add_argument("--dx", type=float, default=None,
                   help="mesh override for the finite-difference suites")
    p.add_argument("--dt", type=float, default=None,
                   help="time-step override for the finite-difference suites")
    p.add_argument("--cfl", type=float, default=None,
                   help="stability-safety override for the finite-difference suites")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("limit-study", help="rescaled-kernel gap per scale factor")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--lambdas", default="0.5,0.1,0.01",
                   help="comma-separated decreasing scales")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_limit_study)

    p = sub.add_parser("convergence", help="raw vs substituted gap under panel doubling")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--profile", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--x-grid", required=True)
    p.add_argument("--max-panels", type=int, default=64)
    _add_quad_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_convergence)

    return parser


# flags whose values may legitimately begin with '-' (negative bounds);
# argparse would otherwise read the value as an unknown option
_VALUE_FLAGS = frozenset({
    "--k", "--t", "--x-grid", "--xp", "--coef-a", "--coef-b",
    "--alpha", "--beta", "--w", "--lambdas", "--profile",
})


def _merge_dash_values(argv: list[str]) -> list[str]:
    merged = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok in _VALUE_FLAGS and nxt is not None and nxt.startswith("-") and not nxt.startswith("--"):
            merged.append(f"{tok}={nxt}")
            i += 2
        else:
            merged.append(tok)
            i += 1
    return merged


def main(argv=None) -> int:
    started = time.perf_counter()
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_dash_values(list(sys.argv[1:] if argv is None else argv)))
        return args.func(args, started)
    except (ConfigError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
