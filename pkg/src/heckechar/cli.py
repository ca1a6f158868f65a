"""Command-line front end: ``heckechar {value,table,verify,bench}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import statistics
import sys
import time

from .characters import character_table, clear_caches, dual_mn, frobenius_oracle
from .combinatorics import format_partition, parse_partition, partitions_of, weight
from .exact import to_int_poly
from .verify import SUITES, run_suite

DEFAULT_MAX_N = 12


class UsageError(Exception):
    pass


def max_n():
    raw = os.environ.get("HECKE_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"HECKE_MAX_N must be an integer, got {raw!r}") from None


def _check_n(n, what="--n"):
    limit = max_n()
    if not 0 <= n <= limit:
        raise UsageError(f"{what} must be between 0 and {limit} (set HECKE_MAX_N to raise the limit)")


def _partition_arg(text, name):
    try:
        lam, reordered = parse_partition(text)
    except ValueError as exc:
        raise UsageError(f"{name}: {exc}") from None
    if reordered:
        print(f"warning: {name} reordered to {format_partition(lam)}", file=sys.stderr)
    return lam


def cmd_value(args, out):
    lam = _partition_arg(args.lam, "--lambda")
    mu = _partition_arg(args.mu, "--mu")
    if weight(lam) != weight(mu):
        raise UsageError(f"weight mismatch: |lambda| = {weight(lam)}, |mu| = {weight(mu)}")
    value = dual_mn(lam, mu)
    match = None
    if args.check:
        match = to_int_poly(frobenius_oracle(lam, mu)) == value
    if args.format == "json":
        obj = {"lambda": format_partition(lam), "mu": format_partition(mu), "value": value.render()}
        if match is not None:
            obj["oracle_match"] = match
        out.write(json.dumps(obj) + "\n")
    else:
        out.write(value.render() + "\n")
    if match is False:
        print("error: dual recursion disagrees with the Frobenius formula", file=sys.stderr)
        return 1
    return 0


def _latex_poly(text):
    return re.sub(r"\^(\d{2,})", r"^{\1}", text)


def _latex_partition(lam):
    return r"\varnothing" if not lam else "(" + ",".join(map(str, lam)) + ")"


def render_table(table, fmt):
    if fmt == "json":
        return json.dumps(table.to_json_obj()) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["lambda\\mu"] + [format_partition(mu) for mu in table.cols])
        for lam, row in zip(table.rows, table.matrix()):
            w.writerow([format_partition(lam)] + [v.render() for v in row])
        return buf.getvalue()
    if fmt == "latex":
        cols = "c|" + "c" * len(table.cols)
        lines = [rf"\begin{{tabular}}{{{cols}}}"]
        header = ["$\\lambda \\backslash \\mu$"] + [f"${_latex_partition(mu)}$" for mu in table.cols]
        lines.append(" & ".join(header) + r" \\")
        lines.append(r"\hline")
        for lam, row in zip(table.rows, table.matrix()):
            cells = [f"${_latex_partition(lam)}$"] + [f"${_latex_poly(v.render())}$" for v in row]
            lines.append(" & ".join(cells) + r" \\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def cmd_table(args, out):
    _check_n(args.n)
    out.write(render_table(character_table(args.n, args.method), args.format))
    return 0


def cmd_verify(args, out):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.max_n is not None:
        _check_n(args.max_n, "--max-n")
    failed = False
    for name in names:
        checks = run_suite(name, args.max_n)
        total = sum(c.count for c in checks)
        ok = all(c.ok for c in checks)
        failed |= not ok
        out.write(f"[{name}] {'PASS' if ok else 'FAIL'}: {total} instances\n")
        for c in checks:
            out.write("  " + c.line() + "\n")
    return 1 if failed else 0


def cmd_bench(args, out):
    _check_n(args.n)
    if args.repeat < 1:
        raise UsageError("--repeat must be at least 1")
    times = []
    for _ in range(args.repeat):
        clear_caches()
        start = time.perf_counter()
        table = character_table(args.n, args.method)
        times.append(time.perf_counter() - start)
    report = {
        "method": args.method,
        "n": args.n,
        "cells": len(table.values),
        "repeat": args.repeat,
        "elapsed_s": statistics.median(times),
        "runs_s": times,
    }
    out.write(json.dumps(report) + "\n")
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="heckechar", description="Character values of type-A Hecke algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("value", help="one character value chi^lambda_mu(q)")
    v.add_argument("--lambda", dest="lam", required=True, help='upper partition, e.g. "3,2,1"')
    v.add_argument("--mu", required=True, help='class type, e.g. "4,2"; "-" for empty')
    v.add_argument("--format", choices=("plain", "json"), default="plain")
    v.add_argument("--check", action="store_true", help="also evaluate the Frobenius formula")
    v.set_defaults(func=cmd_value)

    t = sub.add_parser("table", help="full character table of H_n(q)")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--method", choices=("dual", "oracle"), default="dual")
    t.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    t.set_defaults(func=cmd_table)

    r = sub.add_parser("verify", help="run identity suites")
    r.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    r.add_argument("--max-n", type=int, default=None)
    r.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time a full table computation")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--method", choices=("dual", "oracle"), default="dual")
    b.add_argument("--repeat", type=int, default=1)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"heckechar: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
