"""Command-line front end: every computation as a subcommand.

Exit codes: 0 success, 1 verification failure (a cross-checked pair of
methods disagreed, a bound failed, or a verify suite went red), 2 usage
error. Output formats: human (default), csv, json (one object per line).
DISCRIM_JOBS sets the default worker count for the verify scans.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from .census import census_scan, fset_member_interval, fset_member_weyl
from .charsum import char_sum_report
from .discriminator import (
    METHOD_BOTH,
    discriminator_brute,
    nonvalue_screen,
    salajan_discriminator_closed,
    table_ranges,
)
from .numtheory import artin_constant
from .periods import incongruence_index, period_brute, salajan_period_formula
from .sequences import (
    SALAJAN,
    CapExceeded,
    SequenceNotAdmissible,
    parse_spec,
    salajan,
)
from .verify import SUITES, default_jobs, run_suites


def _emit(rows: list[dict], fmt: str, out) -> None:
    """Write rows (list of same-keyed dicts) as csv, json lines, or text."""
    if not rows:
        return
    header = list(rows[0])
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([row[k] for k in header])
    elif fmt == "json":
        for row in rows:
            out.write(json.dumps(row, separators=(", ", ": ")) + "\n")
    else:
        widths = {
            k: max(len(k), max(len(str(r[k])) for r in rows)) for k in header
        }
        out.write("  ".join(k.ljust(widths[k]) for k in header).rstrip() + "\n")
        for row in rows:
            out.write(
                "  ".join(str(row[k]).ljust(widths[k]) for k in header).rstrip() + "\n"
            )


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError("range must look like lo:hi")
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise ValueError("range bounds must be integers") from None
    if lo_i > hi_i:
        raise ValueError("range lower bound exceeds upper bound")
    return lo_i, hi_i


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discrim",
        description="discriminators, periods and incongruence indices of integer sequences",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("csv", "json", "human"), default="human")
        p.add_argument("--output", default=None, help="write to this file instead of stdout")
        return p

    p = add("discriminate", "smallest modulus separating the first n terms")
    p.add_argument("--seq", default="salajan", help="salajan | linrec:c1,c2,v1,v2 | poly:a0,a1,...")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("closed", "brute", "both"), default=None)
    p.add_argument("--cap", type=int, default=None, help="largest modulus the brute scan will try")

    p = add("table", "closed-form value ranges up to --max")
    p.add_argument("--max", type=int, required=True)

    p = add("period", "period and pre-period of the sequence mod d")
    p.add_argument("--seq", default="salajan")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--method", choices=("formula", "brute", "both"), default="both")

    p = add("iota", "incongruence index: longest pairwise-distinct prefix mod m")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--m", type=int)
    group.add_argument("--range", dest="span", metavar="LO:HI")

    p = add("screen", "non-value certificates")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--d", type=int)
    group.add_argument("--range", dest="span", metavar="LO:HI")

    p = add("census", "prime classification densities up to --x")
    p.add_argument("--x", type=int, required=True)

    p = add("fset", "exponents b whose interval [4*5^(b-1), 5^b] misses the powers of 2")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--method", choices=("interval", "weyl", "both"), default="both")

    p = add("charsum", "character-sum verification report for one prime")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--g", type=int, default=None, help="primitive root (smallest if omitted)")

    p = add("artin", "partial product of the Artin constant")
    p.add_argument("--prime-limit", type=int, required=True)

    p = add("verify", "run verification suites")
    p.add_argument("--suite", default="all", help="|".join(SUITES) + " or all")
    p.add_argument("--nmax", type=int, default=None, help="range cap for the theorem1 suite")

    return parser


def _cmd_discriminate(args, out) -> int:
    spec = parse_spec(args.seq)
    method = args.method or ("both" if spec.kind == SALAJAN else "brute")
    if spec.kind != SALAJAN and method != "brute":
        raise ValueError("closed form exists only for the salajan sequence; use --method brute")
    if method == "closed":
        rec = salajan_discriminator_closed(args.n)
    elif method == "brute":
        rec = discriminator_brute(spec, args.n, args.cap)
    else:
        closed = salajan_discriminator_closed(args.n)
        brute = discriminator_brute(spec, args.n, args.cap)
        if closed.value != brute.value:
            print(
                f"methods disagree at n={args.n}: closed={closed.value} brute={brute.value}",
                file=sys.stderr,
            )
            return 1
        rec = type(closed)(args.n, closed.value, METHOD_BOTH)
    _emit([{"n": rec.n, "value": rec.value, "method": rec.method}], args.format, out)
    return 0


def _cmd_table(args, out) -> int:
    rows = [
        {"start": a, "end": b, "value": v} for a, b, v in table_ranges(args.max)
    ]
    _emit(rows, args.format, out)
    return 0


def _cmd_period(args, out) -> int:
    spec = parse_spec(args.seq)
    if args.method in ("formula", "both") and spec.kind != SALAJAN:
        raise ValueError("the period formula applies to the salajan sequence; use --method brute")
    rows, code = [], 0
    if args.method == "formula":
        info = salajan_period_formula(args.d)
    elif args.method == "brute":
        info = period_brute(spec, args.d)
    else:
        formula = salajan_period_formula(args.d)
        brute = period_brute(spec, args.d)
        if (formula.pre_period, formula.period) != (brute.pre_period, brute.period):
            print(
                f"methods disagree at d={args.d}: formula={formula} brute={brute}",
                file=sys.stderr,
            )
            return 1
        info = formula
    rows.append(
        {
            "modulus": info.modulus,
            "pre_period": info.pre_period,
            "period": info.period,
            "method": args.method,
        }
    )
    _emit(rows, args.format, out)
    return code


def _cmd_iota(args, out) -> int:
    if args.span:
        lo, hi = _parse_range(args.span)
        targets = range(max(lo, 1), hi + 1)
    else:
        targets = [args.m]
    seq = salajan()
    rows = [{"m": m, "iota": incongruence_index(seq, m)} for m in targets]
    _emit(rows, args.format, out)
    return 0


def _cmd_screen(args, out) -> int:
    if args.span:
        lo, hi = _parse_range(args.span)
        targets = range(max(lo, 2), hi + 1)
    else:
        targets = [args.d]
    rows = []
    for d in targets:
        cert = nonvalue_screen(d)
        rows.append(
            {
                "d": cert.d,
                "verdict": cert.verdict,
                "reason": cert.reason or "",
                "witness": json.dumps(cert.witness, sort_keys=True),
            }
        )
    _emit(rows, args.format, out)
    return 0


def _cmd_census(args, out) -> int:
    report = census_scan(args.x)
    rows = []
    for cls in ("P1", "P2", "P3"):
        rows.append(
            {
                "class": cls,
                "count": report.counts[cls],
                "empirical": f"{report.empirical[cls]:.9f}",
                "predicted": f"{report.predicted[cls]:.9f}",
                "deviation": f"{report.deviation[cls]:+.6f}",
            }
        )
    if args.format == "human":
        out.write(f"x = {report.x}, primes classified = {report.pi_x}\n")
    _emit(rows, args.format, out)
    return 0


def _cmd_fset(args, out) -> int:
    rows = []
    for b in range(1, args.max + 1):
        if args.method == "interval":
            rec = fset_member_interval(b)
            member, witness = rec.member, rec.witness
        elif args.method == "weyl":
            member, witness = fset_member_weyl(b), None
        else:
            rec = fset_member_interval(b)
            weyl = fset_member_weyl(b)
            if weyl != rec.member:
                print(f"methods disagree at b={b}: interval={rec.member} weyl={weyl}", file=sys.stderr)
                return 1
            member, witness = rec.member, rec.witness
        rows.append({"b": b, "member": member, "witness": "" if witness is None else witness})
    _emit(rows, args.format, out)
    return 0


def _cmd_charsum(args, out) -> int:
    report = char_sum_report(args.p, args.g)
    lower = math.sqrt(report.setA_size)
    # the maximum is a Jacobi-sum modulus, i.e. exactly sqrt(p); allow fp margin
    ok = (
        report.setA_size == args.p - 2
        and lower - 1e-6 <= report.max_nontrivial_sum <= report.sqrt_p + 1e-9
        and report.identity_residual < 1e-6 * (args.p - 1) ** 2
    )
    rows = [
        {
            "p": report.p,
            "g": report.g,
            "setA_size": report.setA_size,
            "max_nontrivial_sum": f"{report.max_nontrivial_sum:.9f}",
            "sqrt_lower": f"{lower:.9f}",
            "sqrt_p": f"{report.sqrt_p:.9f}",
            "identity_residual": f"{report.identity_residual:.3e}",
            "verdict": "ok" if ok else "FAIL",
        }
    ]
    _emit(rows, args.format, out)
    return 0 if ok else 1


def _cmd_artin(args, out) -> int:
    value = artin_constant(args.prime_limit)
    _emit([{"prime_limit": args.prime_limit, "artin_partial": f"{value:.12f}"}], args.format, out)
    return 0


def _cmd_verify(args, out) -> int:
    ok, results = run_suites(args.suite, n_max=args.nmax, jobs=default_jobs())
    for res in results:
        flag = "PASS" if res.passed else "FAIL"
        out.write(f"[{flag}] {res.suite}: {res.detail}\n")
    return 0 if ok else 1


_COMMANDS = {
    "discriminate": _cmd_discriminate,
    "table": _cmd_table,
    "period": _cmd_period,
    "iota": _cmd_iota,
    "screen": _cmd_screen,
    "census": _cmd_census,
    "fset": _cmd_fset,
    "charsum": _cmd_charsum,
    "artin": _cmd_artin,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _COMMANDS[args.command]
    try:
        if args.output:
            with open(args.output, "w") as fh:
                return handler(args, fh)
        return handler(args, sys.stdout)
    except (SequenceNotAdmissible, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 1


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
