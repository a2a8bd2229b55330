"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch or non-integral solution,
2 usage or budget error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from ._scan import resolve_budget
from .errors import (BudgetError, InconsistentSystemError, NegativeCountError,
                     NonIntegralError, UnderdeterminedError)
from .formulas import r1_formula, r2_formula, rq_from_distribution, total_count
from .moments import MomentSystem, solve_moments
from .persymmetric import enumerate_distribution
from .polysys import count_Rq
from .verify import SLOW_SUITES, SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _fail(msg: str, code: int = EXIT_USAGE) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _emit_distribution(n, k, gamma, provenance, fmt, out=None):
    out = out or sys.stdout
    if fmt == "json":
        json.dump({"n": n, "k": k, "gamma": list(gamma), "provenance": list(provenance)}, out)
        out.write("\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "k", "i", "gamma_i", "source"])
        for i, (g, src) in enumerate(zip(gamma, provenance)):
            w.writerow([n, k, i, g, src])
    else:
        width = max(len(str(g)) for g in gamma)
        out.write(f"n={n} k={k}\n")
        for i, (g, src) in enumerate(zip(gamma, provenance)):
            out.write(f"  Gamma_{i} = {g:>{width}}  [{src}]\n")


def cmd_enumerate(args) -> int:
    budget = resolve_budget(args.budget_bits)
    try:
        d = enumerate_distribution(args.n, args.k, budget, args.threads, progress=True)
    except BudgetError as exc:
        return _fail(str(exc))
    _emit_distribution(d.n, d.k, d.counts, ["enumerated"] * (d.k + 1), args.format)
    if args.format == "table":
        total = d.total()
        ok = total == total_count(d.n, d.k)
        print(f"  sum = {total} {'=' if ok else '!='} 2^{(d.k + 1) * d.n}")
        if not ok:
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES and args.suite not in SLOW_SUITES and args.suite != "all":
        return _fail(f"unknown suite {args.suite!r}")
    rep = run_suite(args.suite)
    if args.slow and args.suite == "all":
        for name in SLOW_SUITES:
            rep.extend(run_suite(name))
    if args.json:
        json.dump(rep.to_dict(), sys.stdout)
        print()
    else:
        for r in rep.failures():
            print(f"FAIL {r.check_id}: expected {r.expected} [{r.provenance}], got {r.computed}")
        print(f"suite {rep.suite}: {len(rep.records) - len(rep.failures())}/{len(rep.records)} "
              f"checks passed in {rep.wall_time:.1f}s -> {rep.status}")
    return EXIT_OK if rep.passed else EXIT_MISMATCH


def cmd_rq(args) -> int:
    n, k, q = args.n, args.k, args.q
    try:
        if args.mode == "formula":
            if q == 1:
                value, prov = r1_formula(n, k), "r1-formula"
            elif q == 2:
                value, prov = r2_formula(n, k), "r2-formula"
            else:
                return _fail(f"no closed form for R_{q}")
        elif args.mode == "brute":
            value, prov = count_Rq(n, k, q, threads=args.threads, progress=True), "brute-force"
        else:
            d = enumerate_distribution(n, k, resolve_budget(args.budget_bits), args.threads,
                                       progress=True)
            value, prov = rq_from_distribution(q, n, k, d), "moment-identity"
            if k > 2 * n:
                prov += " (k > 2n: outside the claimed range)"
    except BudgetError as exc:
        return _fail(str(exc))
    except NonIntegralError as exc:
        return _fail(str(exc), EXIT_MISMATCH)
    print(f"R_{q}(n={n}, k={k}) = {value}  [{prov}]")
    return EXIT_OK


def cmd_solve_moments(args) -> int:
    n, k = args.n, args.k
    try:
        sol = solve_moments(MomentSystem.standard(n, k, postulates=args.postulates))
    except UnderdeterminedError as exc:
        return _fail(str(exc))
    except (NonIntegralError, NegativeCountError, InconsistentSystemError) as exc:
        return _fail(str(exc), EXIT_MISMATCH)
    budget = resolve_budget(args.budget_bits)
    enumerated = None
    if (k + 1) * n <= budget and not args.no_enumerate:
        enumerated = enumerate_distribution(n, k, budget, progress=True)
    known = MomentSystem.standard(n, k).knowns
    uses_postulates = args.postulates and k >= 3
    flags = []
    for i, g in enumerate(sol.counts):
        if enumerated is not None:
            flags.append("enumerated-verified" if enumerated[i] == g else "enumeration-MISMATCH")
        elif i in known:
            flags.append("closed-form")
        elif uses_postulates:
            flags.append("postulate-dependent")
        else:
            flags.append("moment-derived")
    fmt = "json" if args.json else "table"
    _emit_distribution(n, k, sol.counts, flags, fmt)
    if enumerated is not None and enumerated.counts != sol.counts:
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="persym", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def budget_flags(sp):
        sp.add_argument("--budget-bits", type=int, default=None,
                        help="max seed bits to enumerate (default: $PERSYM_BUDGET_BITS or 30)")
        sp.add_argument("--threads", type=int, default=1)

    e = sub.add_parser("enumerate", help="exhaustive rank distribution")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    budget_flags(e)
    g = e.add_mutually_exclusive_group()
    g.add_argument("--json", dest="format", action="store_const", const="json")
    g.add_argument("--csv", dest="format", action="store_const", const="csv")
    e.set_defaults(format="table", func=cmd_enumerate)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True,
                   help="one of: " + ", ".join([*SUITES, *SLOW_SUITES, "all"]))
    v.add_argument("--json", action="store_true")
    v.add_argument("--slow", action="store_true", help="with --suite all, also run slow suites")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("rq", help="count solutions R_q")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--q", type=int, required=True)
    r.add_argument("--mode", choices=("brute", "formula", "moment"), required=True)
    budget_flags(r)
    r.set_defaults(func=cmd_rq)

    s = sub.add_parser("solve-moments", help="solve the moment system for unknown counts")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--postulates", action="store_true",
                   help="use the postulated general Gamma_2 / Gamma_3 forms as knowns")
    s.add_argument("--json", action="store_true")
    s.add_argument("--no-enumerate", action="store_true",
                   help="skip the cross-check against enumeration")
    s.add_argument("--budget-bits", type=int, default=None)
    s.set_defaults(func=cmd_solve_moments)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
