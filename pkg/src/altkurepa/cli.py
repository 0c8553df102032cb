"""Command-line interface: ``altkurepa <command> ...``.

Exit codes: 0 success, 1 usage error, 2 domain error or pole, 3 failed check.
Records go to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import checks
from . import singular_structure as ss
from .alt_kurepa import Representation, a1_eval, a_eval
from .complex_core import DEFAULT_CONFIG, EvalConfig, nearest_integer_distance
from .errors import AltKurepaError, PoleProximity
from .gamma_family import gamma
from .special_aux import constants_table

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_CHECK = 3

RECORD_FIELDS = ("z_re", "z_im", "value_re", "value_im", "err_est", "method")
POLE_FIELDS = ("function", "m", "order", "residue", "principal_value")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _num(x: float) -> str:
    # repr gives the shortest string that round-trips
    return repr(float(x))


def _poles_of(function: str):
    if function == "A":
        return lambda m: m <= -2
    if function == "A1":
        return lambda m: True
    return lambda m: m <= 0


def evaluate(function: str, z: complex, method: str, cfg: EvalConfig):
    if function == "A":
        return a_eval(z, method, cfg)
    return a1_eval(z, method, cfg)


def _record(z: complex, outcome) -> dict:
    return {
        "z_re": z.real,
        "z_im": z.imag,
        "value_re": outcome.value.real,
        "value_im": outcome.value.imag,
        "err_est": outcome.err_est,
        "method": outcome.method.value,
    }


def _skipped_record(z: complex, reason: str) -> dict:
    return {
        "z_re": z.real,
        "z_im": z.imag,
        "value_re": None,
        "value_im": None,
        "err_est": None,
        "method": "",
        "skipped": reason,
    }


def format_records(rows: list[dict], fmt: str, fields) -> str:
    if fmt == "json":
        return json.dumps([{k: r.get(k) for k in fields} for r in rows], indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for r in rows:
        out = []
        for k in fields:
            v = r.get(k)
            if v is None:
                out.append("")
            elif isinstance(v, float):
                out.append(_num(v))
            else:
                out.append(str(v))
        w.writerow(out)
    return buf.getvalue()


def _config(args) -> EvalConfig:
    tol = args.tol
    if tol is None:
        env = os.environ.get("ALTFACT_TOL")
        if env:
            try:
                tol = float(env)
            except ValueError:
                raise UsageError(f"ALTFACT_TOL is not a number: {env!r}") from None
    kw = {}
    if tol is not None:
        kw["tol_rel"] = tol
    if args.max_terms is not None:
        kw["max_terms"] = args.max_terms
    try:
        return EvalConfig(**kw) if kw else DEFAULT_CONFIG
    except AltKurepaError as exc:
        raise UsageError(str(exc)) from None


# -- commands -------------------------------------------------------------

def cmd_eval(args, out) -> int:
    cfg = _config(args)
    z = complex(args.re, args.im)
    outcome = evaluate(args.function, z, args.method, cfg)
    out.write(format_records([_record(z, outcome)], args.format, RECORD_FIELDS))
    return EXIT_OK


def pole_rows(function: str, m_min: int, m_max: int) -> list[dict]:
    if m_min > m_max:
        raise UsageError(f"empty range: m-min {m_min} > m-max {m_max}")
    rows = []
    for m in range(m_min, m_max + 1):
        info = ss.singularity_info(function, m)
        rows.append({
            "function": function,
            "m": m,
            "order": info.order,
            "residue": float(complex(info.residue).real),
            "principal_value": float(complex(info.principal_value).real),
        })
    return rows


def cmd_poles(args, out) -> int:
    rows = pole_rows(args.function, args.m_min, args.m_max)
    out.write(format_records(rows, args.format, POLE_FIELDS))
    return EXIT_OK


def cmd_constants(args, out) -> int:
    for const, routes in constants_table():
        out.write(f"{const.name:<12} {const.value:.16g}  ({const.definition})\n")
        for name, value in routes:
            out.write(f"    {name:<40} {value:.16g}  delta={abs(value - const.value):.2e}\n")
    return EXIT_OK


def _axis(lo: float, hi: float, step: float) -> list[float]:
    if not step > 0:
        raise UsageError("step must be positive")
    if hi < lo:
        raise UsageError(f"bad range [{lo}, {hi}]")
    count = int(round((hi - lo) / step)) + 1
    # rounding to 12 decimals lands grid points on integers exactly
    return [round(lo + i * step, 12) for i in range(count)]


def grid_points(re_min, re_max, im_min, im_max, step) -> list[complex]:
    res = _axis(re_min, re_max, step)
    ims = _axis(im_min, im_max, step)
    return [complex(x, y) for y in ims for x in res]


def _grid_row(task) -> dict:
    function, z, method, cfg = task
    m, d = nearest_integer_distance(z)
    if d < cfg.pole_guard_radius and _poles_of(function)(m):
        return _skipped_record(z, "pole")
    try:
        outcome = evaluate(function, z, method, cfg)
    except PoleProximity:
        return _skipped_record(z, "pole")
    except AltKurepaError as exc:
        return _skipped_record(z, type(exc).__name__)
    row = _record(z, outcome)
    row["skipped"] = ""
    return row


def grid_rows(function, points, method, cfg, workers: int = 1) -> list[dict]:
    tasks = [(function, z, method, cfg) for z in points]
    if workers <= 1:
        return [_grid_row(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map yields in submission order, so output is row-major regardless
        return list(pool.map(_grid_row, tasks, chunksize=16))


def cmd_grid(args, out) -> int:
    cfg = _config(args)
    pts = grid_points(args.re_min, args.re_max, args.im_min, args.im_max, args.step)
    rows = grid_rows(args.function, pts, args.method, cfg, args.workers)
    out.write(format_records(rows, args.format, RECORD_FIELDS + ("skipped",)))
    return EXIT_OK


def cmd_check(args, out) -> int:
    cfg = _config(args)
    results = checks.run_suite(args.suite, args.samples, args.seed, cfg)
    for r in results:
        out.write(r.line() + "\n")
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed (seed={args.seed})\n")
    return EXIT_OK if failed == 0 else EXIT_CHECK


def _function_callable(function: str, cfg: EvalConfig):
    if function == "Gamma":
        return lambda z: gamma(z, cfg.pole_guard_radius)
    # closed forms are analytic around the contour and cheap
    method = Representation.CLOSED_FORM
    return lambda z: evaluate(function, z, method, cfg).value


def cmd_singular(args, out) -> int:
    cfg = _config(args)
    info = ss.singularity_info(args.function, args.m)
    f = _function_callable(args.function, cfg)
    if args.command == "residue":
        exact = complex(info.residue)
        numeric, err = ss.residue_numeric(f, args.m)
        label = "residue"
    else:
        exact = complex(info.principal_value)
        numeric, err = ss.pv_contour(f, args.m)
        label = "principal_value"
    out.write(f"function={args.function} m={args.m} order={info.order}\n")
    out.write(f"{label}_closed={_num(exact.real)}\n")
    out.write(f"{label}_numeric={_num(numeric.real)}{numeric.imag:+.3e}j err_est={err:.3e}\n")
    return EXIT_OK


# -- parser ---------------------------------------------------------------

def _add_cfg_flags(p):
    p.add_argument("--tol", type=float, default=None, help="relative tolerance (default: $ALTFACT_TOL or 1e-12)")
    p.add_argument("--max-terms", type=int, default=None, help="series/continued-fraction term limit")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="altkurepa", description="Alternating Kurepa function A(z) and companion A1(z).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    methods = [m.value for m in Representation]

    p = sub.add_parser("eval", help="evaluate A or A1 at one point")
    p.add_argument("--function", choices=("A", "A1"), default="A")
    p.add_argument("--re", type=float, required=True)
    p.add_argument("--im", type=float, default=0.0)
    p.add_argument("--method", choices=methods, default="Auto")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_cfg_flags(p)
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("poles", help="residues and principal values at integers")
    p.add_argument("--function", choices=ss.FUNCTIONS, default="A")
    p.add_argument("--m-min", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=cmd_poles)

    p = sub.add_parser("constants", help="constants with their computation routes")
    p.set_defaults(handler=cmd_constants)

    p = sub.add_parser("grid", help="evaluate on a rectangular grid (plot data)")
    p.add_argument("--function", choices=("A", "A1"), default="A")
    p.add_argument("--re-min", type=float, required=True)
    p.add_argument("--re-max", type=float, required=True)
    p.add_argument("--im-min", type=float, default=0.0)
    p.add_argument("--im-max", type=float, default=0.0)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--method", choices=methods, default="Auto")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=1)
    _add_cfg_flags(p)
    p.set_defaults(handler=cmd_grid)

    p = sub.add_parser("check", help="run seeded consistency suites")
    p.add_argument("--suite", choices=checks.SUITES + ("all",), default="all")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=7)
    _add_cfg_flags(p)
    p.set_defaults(handler=cmd_check)

    for name, text in (("pv", "principal value at an integer"), ("residue", "residue at an integer")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--function", choices=ss.FUNCTIONS, default="A")
        p.add_argument("--m", type=int, required=True)
        _add_cfg_flags(p)
        p.set_defaults(handler=cmd_singular)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.handler(args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except PoleProximity as exc:
        print(f"error: {exc}; use the `pv` or `residue` command at a pole", file=sys.stderr)
        return EXIT_DOMAIN
    except (AltKurepaError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
