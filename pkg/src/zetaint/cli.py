"""Command line: ``python -m zetaint {eval,zeros,verify,sweep,report}``.

Numbers are printed with 15 significant digits so json and csv output is
byte-identical across runs; pass ``--no-timing`` to drop the one field that
is not (wall_ms).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import criteria as cr
from .argtrack import arg_zeta, counting_n
from .errors import InsufficientZeroTable, ZetaIntError
from .zeros import cached_zero_table, load_zero_table, save_zero_table, verify_zero_count
from .zeta import EULER_GAMMA, hardy_z, log_abs_zeta, log_deriv_zeta, log_gamma, riemann_siegel_theta, zeta

CACHE_ENV = "ZETAINT_CACHE_DIR"
EXIT_OK, EXIT_ERROR, EXIT_RESIDUAL = 0, 1, 2
DEFAULT_ALPHAS = tuple(round(0.05 * k, 2) for k in range(10))
REPORT_SET = ("eq3", "eq6", "eq10", "eq16", "eq17", "eq14")

KIND_FLAGS = {
    "theorem1": cr.Kind.Theorem1,
    "theorem1a": cr.Kind.Theorem1a,
    "theorem2": cr.Kind.Theorem2,
    "theorem2a": cr.Kind.Theorem2a,
    "volchkov": cr.Kind.Volchkov,
    "gamma-alpha": cr.Kind.GammaAlpha,
}
CRITERIA = tuple(KIND_FLAGS) + tuple(cr.SHORTCUTS)


def fmt(x) -> str:
    if x is None:
        return "null"
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    x = float(x)
    if x == 0:
        return "0"
    return format(x, ".15g")


def _num(x):
    """A json number rounded to 15 significant digits."""
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    return float(fmt(x))


def _dump_json(obj) -> str:
    def clean(o):
        if isinstance(o, dict):
            return {k: clean(v) for k, v in o.items()}
        if isinstance(o, (list, tuple)):
            return [clean(v) for v in o]
        return _num(o)

    return json.dumps(clean(obj), indent=2, ensure_ascii=True) + "\n"


def _dump_csv(rows: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(rows[0].keys()))
    for r in rows:
        w.writerow([_csv_cell(v) for v in r.values()])
    return buf.getvalue()


def _csv_cell(v):
    if isinstance(v, dict):
        return ";".join(f"{k}={fmt(x)}" for k, x in v.items())
    if isinstance(v, str):
        return v
    return fmt(v)


def _dump_human(rows: list) -> str:
    out = []
    for r in rows:
        width = max(len(k) for k in r)
        for k, v in r.items():
            out.append(f"{k:<{width}}  {_csv_cell(v)}")
        out.append("")
    return "\n".join(out)


def emit(rows, style: str, stream=None) -> None:
    stream = stream or sys.stdout
    rows = rows if isinstance(rows, list) else [rows]
    if style == "json":
        stream.write(_dump_json(rows[0] if len(rows) == 1 else rows))
    elif style == "csv":
        stream.write(_dump_csv(rows))
    else:
        stream.write(_dump_human(rows))


# --------------------------------------------------------------------------
# zero tables


def cache_dir(args) -> Path:
    if args.cache_dir:
        return Path(args.cache_dir)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "zetaint"


def zero_table(args, height: float):
    if getattr(args, "zeros_file", None):
        table = load_zero_table(args.zeros_file)
        if table.height < height:
            raise InsufficientZeroTable(
                f"{args.zeros_file} is complete to {table.height}, need {height}")
        return table
    return cached_zero_table(float(math.ceil(height)), cache_dir(args))


# --------------------------------------------------------------------------
# commands


def spec_from_args(args) -> cr.CriterionSpec:
    name = args.criterion
    if name in cr.SHORTCUTS:
        kw = {}
        if args.t_max is not None:
            kw["t_max"] = args.t_max
        if args.tol is not None:
            kw["tol"] = args.tol
        return cr.SHORTCUTS[name](**kw)
    kind = KIND_FLAGS[name]
    kw = {k: getattr(args, k) for k in ("b", "c", "d", "a", "alpha") if getattr(args, k) is not None}
    kw["t_max"] = args.t_max if args.t_max is not None else cr.DEFAULT_T_MAX
    if args.tol is not None:
        kw["tol"] = args.tol
    return cr.CriterionSpec(kind, **kw)


def _parse_hypo(text: str) -> cr.HypotheticalZero:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) not in (2, 3):
        raise ValueError(f"--hypo expects sigma,t[,n], got {text!r}")
    n = int(parts[2]) if len(parts) == 3 else 1
    return cr.HypotheticalZero(float(parts[0]), float(parts[1]), n)


def result_row(name: str, res: cr.CriterionResult, timing: bool = True) -> dict:
    row = {
        "criterion": name,
        "params": res.spec.params(),
        "lhs": res.lhs,
        "rhs": res.rhs,
        "residual": res.residual,
        "quad_error": res.quad_error,
        "tail_bound": res.tail_bound,
        "zeros_used": res.zeros_used,
        "t_max": res.spec.t_max,
        "wall_ms": round(res.wall_ms, 1) if timing else None,
    }
    if res.injected:
        row["injected"] = res.injected
        row["residual_prime"] = res.residual_prime
    row["passes"] = "yes" if res.passes else "no"
    return row


def run_verify(args) -> int:
    spec = spec_from_args(args)
    hypo = [_parse_hypo(h) for h in (args.hypo or [])]
    table = zero_table(args, spec.t_max)
    if hypo:
        res = cr.full_equality(spec, table, hypo)
    else:
        res = cr.verify(spec, table)
    emit(result_row(args.criterion, res, args.timing), args.output)
    return EXIT_OK if res.passes else EXIT_RESIDUAL


def run_zeros(args) -> int:
    if args.import_path:
        table = load_zero_table(args.import_path)
        dest = cache_dir(args) / f"zeros_{table.height:g}.txt"
        save_zero_table(table, dest)
        height = table.height
    else:
        if args.up_to is None:
            raise ValueError("zeros needs --up-to or --import")
        height = args.up_to
        table = cached_zero_table(height, cache_dir(args))
        dest = cache_dir(args) / f"zeros_{height:g}.txt"
    n = table.count_upto(height)
    # a headerless import ends exactly on a zero; count just above it
    at = height + 1e-6 if n and table.t[-1] == height else height
    ok = verify_zero_count(table, at) if height > 0 and n > 0 else True
    row = {"height": height, "count": n, "count_check": "pass" if ok else "fail",
           "first": table.t[0] if n else None, "last": table.upto(height)[-1] if n else None,
           "file": str(dest)}
    emit(row, args.output)
    if not ok:
        print("zero count disagrees with N(T)", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def _parse_alphas(text):
    if not text:
        return DEFAULT_ALPHAS
    return tuple(float(x) for x in text.split(","))


def sweep_rows(alphas, t_max, tol, table) -> list:
    rows = []
    for a in alphas:
        g = cr.gamma_alpha(a, t_max, tol, table)
        rows.append({"alpha": a, "gamma_alpha": g, "abs_error_vs_gamma": abs(g - EULER_GAMMA), "t_max": t_max})
    return rows


def run_sweep(args) -> int:
    t_max = args.t_max if args.t_max is not None else cr.DEFAULT_T_MAX
    tol = args.tol if args.tol is not None else 1e-12
    table = zero_table(args, t_max)
    rows = sweep_rows(_parse_alphas(args.alphas), t_max, tol, table)
    text = _dump_csv(rows) if args.output != "json" else _dump_json(rows)
    if args.out:
        Path(args.out).write_text(text, encoding="ascii", newline="\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def run_report(args) -> int:
    names = args.criteria.split(",") if args.criteria else REPORT_SET
    rows, worst = [], EXIT_OK
    for name in names:
        if name not in cr.SHORTCUTS:
            raise ValueError(f"unknown shortcut {name!r}")
        spec = cr.SHORTCUTS[name]()
        table = zero_table(args, spec.t_max)
        res = cr.verify(spec, table)
        rows.append(result_row(name, res, args.timing))
        if not res.passes:
            worst = EXIT_RESIDUAL
        if name == "eq16":
            alt = cr.volchkov_normalized(table, spec.t_max, spec.tol)
            rows.append(result_row("eq16-normalized", alt, args.timing))
    emit(rows, args.output)
    return worst


EVAL_FUNCS = ("zeta", "log-abs-zeta", "log-deriv-zeta", "log-gamma", "theta", "hardy-z", "arg-zeta", "counting-n")


def run_eval(args) -> int:
    s = complex(args.re, args.im)
    f = args.function
    row = {"function": f, "re": args.re, "im": args.im}
    if f == "zeta":
        r = zeta(s, args.tol)
        row.update(value_re=r.value.real, value_im=r.value.imag, abs_error_bound=r.abs_error_bound)
    elif f == "log-deriv-zeta":
        r = log_deriv_zeta(s, args.tol)
        row.update(value_re=r.value.real, value_im=r.value.imag, abs_error_bound=r.abs_error_bound)
    elif f == "log-abs-zeta":
        row["value"] = log_abs_zeta(s, args.tol)
    elif f == "log-gamma":
        v = complex(log_gamma(s))
        row.update(value_re=v.real, value_im=v.imag)
    elif f == "theta":
        row["value"] = float(riemann_siegel_theta(args.im))
    elif f == "hardy-z":
        row["value"] = hardy_z(args.im)
    elif f == "arg-zeta":
        row["value"] = arg_zeta(args.re, args.im)
    elif f == "counting-n":
        row["value"] = counting_n(args.im)
    emit(row, args.output)
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "csv", "human"), default="human")
    common.add_argument("--cache-dir", default=None, help=f"zero-table cache (env {CACHE_ENV})")
    common.add_argument("--zeros-file", default=None, help="ordinate file to use instead of the cache")
    common.add_argument("--no-timing", dest="timing", action="store_false", help="omit wall_ms")

    p = argparse.ArgumentParser(prog="zetaint", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate a zeta-family function")
    e.add_argument("function", choices=EVAL_FUNCS)
    e.add_argument("--re", type=float, default=0.5)
    e.add_argument("--im", type=float, default=0.0)
    e.add_argument("--tol", type=float, default=1e-10)

    z = sub.add_parser("zeros", parents=[common], help="build or import a zero table")
    z.add_argument("--up-to", type=float, default=None)
    z.add_argument("--import", dest="import_path", default=None)

    v = sub.add_parser("verify", parents=[common], help="compute both sides of one equality")
    v.add_argument("--criterion", choices=CRITERIA, required=True)
    for name in ("b", "c", "d", "a", "alpha"):
        v.add_argument(f"--{name}", type=float, default=None)
    v.add_argument("--t-max", type=float, default=None)
    v.add_argument("--tol", type=float, default=None)
    v.add_argument("--hypo", action="append", help="inject a zero: sigma,t[,n]")

    s = sub.add_parser("sweep", parents=[common], help="gamma(alpha) over a grid of alpha")
    s.add_argument("--alphas", default=None, help="comma list, default 0,0.05,...,0.45")
    s.add_argument("--t-max", type=float, default=None)
    s.add_argument("--tol", type=float, default=None)
    s.add_argument("--out", default=None, help="csv path (stdout if absent)")

    r = sub.add_parser("report", parents=[common], help="run the named equalities")
    r.add_argument("--criteria", default=None, help=f"comma list of {','.join(cr.SHORTCUTS)}")
    return p


COMMANDS = {"eval": run_eval, "zeros": run_zeros, "verify": run_verify, "sweep": run_sweep, "report": run_report}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ZetaIntError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
