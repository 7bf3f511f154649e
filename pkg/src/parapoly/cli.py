"""Command line: ``parapoly table | series | verify | show``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 truncation too low for the requested output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import genfun, oracle
from .bijections import dv_forward, left_factor_series, r2_to_d2
from .polyomino import GroupElement, exact_symmetry_group, is_fixed, parse_polyomino, realize
from .series import QPoly, TruncationError, format_qpoly
from .tables import genfun_table, oracle_table
from .verify import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_TRUNCATION = 0, 1, 2, 3

ORACLE_LIMITS = {"halfperimeter": oracle.MAX_HALFPERIMETER, "area": oracle.MAX_AREA}
DEFAULT_MAX = {"halfperimeter": 20, "area": 23}

_MODES = {"perimeter": "perimeter", "halfperimeter": "perimeter", "area": "area"}

_TARGETS = {
    "p": lambda w, a: genfun.parallelogram_series(w),
    "r2": lambda w, a: genfun.r2_series(w),
    "r2_even": lambda w, a: genfun.r2_even_series(w),
    "r2_odd": lambda w, a: genfun.r2_odd_series(w),
    "d1": lambda w, a: genfun.d1_series(w),
    "d2": lambda w, a: genfun.d2_series(w),
    "d12": lambda w, a: genfun.d12_series(w),
    "orbits": lambda w, a: genfun.orbit_series(w),
    "asym": lambda w, a: genfun.asym_series(w),
    "dyck": lambda w, a: genfun.dyck_gf(w),
    "ln": lambda w, a: genfun.ln_series(a.base, genfun.T, genfun.Q, w),
}
TARGETS = ("P", "R2", "R2_even", "R2_odd", "D1", "D2", "D12", "Orbits", "Asym",
           "Dyck", "Ln", "LeftFactors")


_INT_KEYS = ("max", "order", "jobs", "trunc_t", "trunc_q", "base")


class UsageError(Exception):
    pass


def _keyvals(args, tokens):
    """Accept ``halfperimeter max=20 source=genfun`` style positionals."""
    for tok in tokens:
        if "=" in tok:
            key, _, val = tok.partition("=")
            key = key.replace("-", "_")
            if not hasattr(args, key):
                raise UsageError(f"unknown option {key!r}")
            try:
                setattr(args, key, int(val) if key in _INT_KEYS else val)
            except ValueError as e:
                raise UsageError(f"{key} needs an integer, got {val!r}") from e
        elif tok in _MODES and hasattr(args, "measure"):
            args.measure = tok
        else:
            raise UsageError(f"unexpected argument {tok!r}")


def cmd_table(args, out, err) -> int:
    _keyvals(args, args.extra)
    measure = "area" if args.measure == "area" else "halfperimeter"
    if args.source not in ("genfun", "oracle", "both"):
        raise UsageError(f"unknown source {args.source!r}")
    if args.format not in ("csv", "json", "pretty"):
        raise UsageError(f"unknown format {args.format!r}")
    n = args.max if args.max is not None else DEFAULT_MAX[measure]
    if args.source != "genfun" and n > ORACLE_LIMITS[measure]:
        raise UsageError(f"oracle limit for {measure} is {ORACLE_LIMITS[measure]}, asked for {n}")
    table = None
    if args.source in ("genfun", "both"):
        table = genfun_table(measure, n, args.trunc_t, args.trunc_q)
    if args.source in ("oracle", "both"):
        brute = oracle_table(measure, n, jobs=args.jobs)
        if table is not None:
            diff = table.diff(brute)
            out.write(table.render(args.format))
            if diff:
                err.write("genfun and oracle disagree:\n" + "\n".join(diff) + "\n")
                return EXIT_MISMATCH
            err.write(f"genfun and oracle agree on {len(table.rows)} rows\n")
            return EXIT_OK
        table = brute
    out.write(table.render(args.format))
    return EXIT_OK


def _t_poly(row: dict[int, int]) -> str:
    return format_qpoly(QPoly(row), "t")


def cmd_series(args, out, err) -> int:
    rest = list(args.extra)
    for tok in list(rest):
        if tok in _MODES:
            args.measure = tok
            rest.remove(tok)
        elif tok.isdigit():
            args.order = int(tok)
            rest.remove(tok)
    _keyvals(args, rest)
    key = args.target.lower()
    mode = _MODES.get(args.measure or "perimeter")
    if mode is None:
        raise UsageError(f"unknown mode {args.measure!r}")
    order = args.order if args.order is not None else 8
    if order < 0:
        raise UsageError("order must be >= 0")
    if key == "leftfactors":
        if mode != "perimeter":
            raise UsageError("LeftFactors is a one-variable series (length)")
        s = left_factor_series(order)
        for k in range(order + 1):
            out.write(f"t^{k}: {s[k].at_one()}\n")
        return EXIT_OK
    if key not in _TARGETS:
        raise UsageError(f"unknown target {args.target!r}; choose from {', '.join(TARGETS)}")
    if mode == "perimeter":
        w = genfun.perimeter_window(order + 1)
        if key in ("dyck", "ln"):
            # t marks height here; rows grow by at most one cell
            base = args.base if key == "ln" else 1
            w = genfun.Window(order + 1, order * base + order * (order - 1) // 2 + 1)
        w = genfun.Window(args.trunc_t or w.t, args.trunc_q or w.q, w.mode)
        if w.t < order + 1:
            raise TruncationError(f"t^{order} needs trunc_t >= {order + 1}")
        s = _TARGETS[key](w, args)
        for k, c in s.terms():
            if k <= order:
                out.write(f"t^{k}: {format_qpoly(c)}\n")
    else:
        w = genfun.area_window(order + 1)
        w = genfun.Window(args.trunc_t or w.t, args.trunc_q or w.q, w.mode)
        if w.q < order + 1:
            raise TruncationError(f"q^{order} needs trunc_q >= {order + 1}")
        # area n allows half-perimeter up to n + 1
        if w.t < order + 2:
            raise TruncationError(f"q^{order} needs trunc_t >= {order + 2}")
        s = _TARGETS[key](w, args)
        by_q: dict[int, dict[int, int]] = {}
        for k, c in s.terms():
            for e, v in c.items():
                by_q.setdefault(e, {})[k] = v
        for e in sorted(by_q):
            if e <= order:
                out.write(f"q^{e}: {_t_poly(by_q[e])}\n")
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    if args.suite not in SUITES and args.suite != "all":
        raise UsageError(f"unknown suite {args.suite!r}")
    report = run_suite(args.suite, args.max)
    out.write(json.dumps(report, indent=1, sort_keys=True, default=str) + "\n")
    for c in report["checks"]:
        err.write(f"{'PASS' if c['passed'] else 'FAIL'} {c['suite']}.{c['name']}\n")
    return EXIT_OK if report["passed"] else EXIT_MISMATCH


def _picture(p) -> str:
    cells = realize(p)
    return "\n".join("".join("#" if (x, y) in cells else "." for x in range(p.width))
                     for y in reversed(range(p.height)))


def cmd_show(args, out, err) -> int:
    try:
        p = parse_polyomino(args.polyomino)
    except ValueError as e:
        raise UsageError(str(e)) from e
    out.write(f"{p}\n")
    out.write(f"width={p.width} height={p.height} area={p.area} half_perimeter={p.half_perimeter}\n")
    out.write(f"symmetry={exact_symmetry_group(p).name}\n")
    out.write(f"dyck={dv_forward(p).word}\n")
    if is_fixed(GroupElement.R2, p) and p.half_perimeter % 2 == 0:
        out.write(f"r2_to_d2={r2_to_d2(p)}\n")
    out.write(_picture(p) + "\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="parapoly", description="Parallelogram polyominoes by symmetry class.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--measure", default=None,
                       help="halfperimeter (perimeter) or area")
        p.add_argument("--trunc-t", type=int, default=None)
        p.add_argument("--trunc-q", type=int, default=None)
        p.add_argument("--jobs", type=int, default=1)

    t = sub.add_parser("table", help="count table by symmetry class")
    common(t)
    t.add_argument("--max", type=int, default=None)
    t.add_argument("--source", default="genfun", help="genfun, oracle or both")
    t.add_argument("--format", default="csv", help="csv, json or pretty")
    t.add_argument("extra", nargs="*", help="measure and key=value overrides")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("series", help="q-polynomial coefficients of a generating function")
    common(s)
    s.add_argument("target", help=", ".join(TARGETS))
    s.add_argument("--order", type=int, default=None, help="highest t (or q) power to print")
    s.add_argument("--base", type=int, default=1, help="base width n for Ln")
    s.add_argument("extra", nargs="*", help="mode and order, e.g. 'perimeter 6'")
    s.set_defaults(func=cmd_series)

    v = sub.add_parser("verify", help="run property suites, JSON report on stdout")
    v.add_argument("--suite", default="all", help=", ".join(list(SUITES) + ["all"]))
    v.add_argument("--max", type=int, default=None, help="oracle size limit")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("show", help="describe one polyomino, e.g. 'a=2,2;b=1'")
    w.add_argument("polyomino")
    w.set_defaults(func=cmd_show)
    return ap


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args, rest = build_parser().parse_known_args(argv)
        # positionals given after an option land here
        if any(r.startswith("-") for r in rest) or (rest and not hasattr(args, "extra")):
            raise UsageError(f"unrecognized arguments: {' '.join(rest)}")
        if rest:
            args.extra = list(args.extra) + rest
        return args.func(args, out, err)
    except UsageError as e:
        err.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except TruncationError as e:
        err.write(f"truncation too low: {e}\n")
        return EXIT_TRUNCATION
    except genfun.GFMismatch as e:
        err.write(f"mismatch: {e}\n")
        return EXIT_MISMATCH
    except ValueError as e:
        err.write(f"usage error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
