"""Command-line front end. Every subcommand prints one JSON document.

Integers in the output are decimal strings so big values survive any JSON
reader. Exit codes: 0 success, 1 a property that must hold was found false,
2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys

from . import identities
from .classifier import classify, expected_period
from .divisibility import (
    InvariantViolation,
    check_div_rp,
    criterion_ind34,
    hs_criterion,
    is_strong_divisible,
    is_weak_divisible,
)
from .lucas_fast import lucas_fast, lucas_gcd
from .periodicity import detect_period
from .recurrence import Geometric, LucasParams, Params, Unique, gen_sequence, recover_params
from .search import SearchBox, sweep


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _add_pq(p, with_r=True):
    # "--P=-1" and "-P -1" both work; no option looks like a negative number,
    # so argparse reads "-1" as a value.
    p.add_argument("-P", "--P", type=int, required=True)
    p.add_argument("-Q", "--Q", type=int, required=True)
    if with_r:
        p.add_argument("-R", "--R", type=int, required=True)


def _add_source(p):
    p.add_argument("-P", "--P", type=int)
    p.add_argument("-Q", "--Q", type=int)
    p.add_argument("-R", "--R", type=int)
    p.add_argument("-n", type=int, default=24, help="prefix length when generating (default 24)")
    p.add_argument("--values", type=_int_list, help="explicit comma-separated u_1,u_2,...")


def _values(args) -> list[int]:
    if args.values is not None:
        return args.values
    if None in (args.P, args.Q, args.R):
        raise UsageError("give either --values or all of -P -Q -R")
    return list(gen_sequence(Params(args.P, args.Q, args.R), args.n).values)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sdseq", allow_abbrev=False,
                                     description="Strong-divisibility order-2 recurrences.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="generate u_1..u_n")
    _add_pq(p)
    p.add_argument("-n", type=int, required=True)

    p = sub.add_parser("lucas", help="U_n, U_{n+1} by fast doubling")
    _add_pq(p, with_r=False)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--gcd", type=int, nargs=2, metavar=("I", "J"),
                   help="also report gcd(U_I, U_J) via the index gcd")

    p = sub.add_parser("classify", help="decide strong divisibility from (P, Q, R)")
    _add_pq(p)

    p = sub.add_parser("check", help="brute-force strong or weak divisibility")
    p.add_argument("kind", choices=["strong", "weak"])
    _add_source(p)

    p = sub.add_parser("criterion", help="gcd(u3,u4) = 1 test or the five-gate test")
    p.add_argument("which", choices=["ind34", "hs"])
    _add_pq(p)

    p = sub.add_parser("divrp", help="check u_n | u_2n => u_n | R - P")
    _add_pq(p)
    p.add_argument("-n", type=int, required=True)

    p = sub.add_parser("period", help="detect eventual periodicity")
    _add_source(p)

    p = sub.add_parser("recover", help="recover (P, Q, R) from u_2, u_3, u_4")
    p.add_argument("--u2", type=int, required=True)
    p.add_argument("--u3", type=int, required=True)
    p.add_argument("--u4", type=int, required=True)

    p = sub.add_parser("sweep", help="exhaustive oracle vs classifier over a box")
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--depth", type=int, default=60)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("identities", help="run the identity self-test suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    return parser


def _emit(doc, out) -> None:
    json.dump(doc, out, separators=(",", ":"))
    out.write("\n")


def _dispatch(args, out) -> int:
    cmd = args.cmd
    if cmd == "gen":
        if args.n < 2:
            raise UsageError("-n must be >= 2")
        _emit(gen_sequence(Params(args.P, args.Q, args.R), args.n).to_dict(), out)
        return 0

    if cmd == "lucas":
        lp = LucasParams(args.P, args.Q)
        if args.n < 0:
            raise UsageError("-n must be >= 0")
        a, b = lucas_fast(lp, args.n)
        doc = {"P": str(lp.P), "Q": str(lp.Q), "n": str(args.n), "U_n": str(a), "U_n_plus_1": str(b)}
        if args.gcd:
            try:
                doc["gcd"] = str(lucas_gcd(lp, *args.gcd))
            except ValueError as e:
                raise UsageError(str(e))
        _emit(doc, out)
        return 0

    if cmd == "classify":
        c = classify(Params(args.P, args.Q, args.R))
        doc = c.to_dict()
        adm = expected_period(c)
        doc["expected_period"] = None if adm is None else [[str(a), str(b)] for a, b in sorted(adm)]
        _emit(doc, out)
        return 0

    if cmd == "check":
        values = _values(args)
        rep = (is_strong_divisible if args.kind == "strong" else is_weak_divisible)(values)
        _emit(rep.to_dict(), out)
        return 0

    if cmd == "criterion":
        params = Params(args.P, args.Q, args.R)
        if args.which == "ind34":
            _emit({"params": params.to_dict(), "ind34": criterion_ind34(params)}, out)
        else:
            _emit(hs_criterion(params).to_dict(), out)
        return 0

    if cmd == "divrp":
        params = Params(args.P, args.Q, args.R)
        try:
            ok = check_div_rp(params, args.n)
        except ValueError as e:
            raise UsageError(str(e))
        _emit({"params": params.to_dict(), "n": str(args.n), "holds": ok}, out)
        return 0 if ok else 1

    if cmd == "period":
        values = _values(args)
        if len(values) < 4:
            raise UsageError("need at least 4 terms")
        info = detect_period(values)
        _emit({"period": None if info is None else info.to_dict()}, out)
        return 0

    if cmd == "recover":
        res = recover_params(args.u2, args.u3, args.u4)
        if isinstance(res, Unique):
            doc = {"result": "Unique", "params": res.params.to_dict()}
        elif isinstance(res, Geometric):
            doc = {"result": "Geometric", "R": str(res.R)}
        else:
            doc = {"result": "Inconsistent"}
        _emit(doc, out)
        return 0

    if cmd == "sweep":
        try:
            box = SearchBox(args.pmax, args.qmax, args.rmax, args.depth)
        except ValueError as e:
            raise UsageError(str(e))
        report = sweep(box)
        if args.format == "json":
            _emit(report.to_dict(timing=True), out)
        else:
            out.write(survivors_csv(report))
        return 1 if report.mismatches else 0

    if cmd == "identities":
        results = identities.run_all(args.seed, args.samples)
        _emit({"results": [r.to_dict() for r in results]}, out)
        return 0 if all(r.passed for r in results) else 1

    raise UsageError(f"unknown command {cmd}")


def survivors_csv(report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["P", "Q", "R", "families", "period"])
    for params, c in report.survivors:
        info = detect_period(gen_sequence(params, report.box.depth).values)
        period = "" if info is None else f"{info.preperiod}+{info.period}"
        w.writerow([params.P, params.Q, params.R, "|".join(c.names), period])
    return buf.getvalue()


def run(argv: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    # decimal-string output must not hit the interpreter's digit cap
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return _dispatch(args, out)
    except (UsageError, ValueError) as e:
        parser.print_usage(err)
        err.write(f"sdseq: error: {e}\n")
        return 2
    except InvariantViolation as e:
        err.write(f"sdseq: property violated: {e}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
