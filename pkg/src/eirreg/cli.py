"""Command line interface.

Subcommands
-----------
exact     exact Bernoulli / Euler tables as CSV or JSON lines
classify  irregularity classification of one odd prime
scan      order-class census up to a bound, with optional JSONL cache
classnum  exact relative refined class number of one small odd prime
verify    run a verification suite and report each check

Exit codes: 0 success, 1 verification failure, 2 invalid input.  Rationals
are always serialised as "numerator/denominator" in lowest terms, CSV uses
comma separators with a header row and LF line endings, and repeated runs
with the same arguments produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .cache import CacheRecord, append_cache, read_cache
from .checks import SUITES, run_suite
from .classnum import relative_refined_class_number
from .distribution import aggregate_report, profile_many, scan
from .errors import SelfCheckError
from .exact import bernoulli, euler_number, euler_zero
from .primes import is_prime, sieve_primes
from .sieve import classify

_EXACT_MAX_N = 500


def _fmt_fraction(value) -> str:
    return f"{value.numerator}/{value.denominator}"


def cmd_exact(args: argparse.Namespace) -> int:
    if not 0 <= args.max_n <= _EXACT_MAX_N:
        raise ValueError(f"--max-n must be within 0..{_EXACT_MAX_N}")
    rows = []
    for n in range(args.max_n + 1):
        den_pow = None
        if n % 2 == 1:
            den_pow = ((n + 1) & -(n + 1)).bit_length() - 1
        rows.append(
            {
                "n": n,
                "bernoulli": _fmt_fraction(bernoulli(n)),
                "euler_number": euler_number(n),
                "euler_zero": _fmt_fraction(euler_zero(n)),
                "euler_zero_den_pow2": den_pow,
            }
        )
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "bernoulli", "euler_number", "euler_zero", "euler_zero_den_pow2"])
        for row in rows:
            writer.writerow(
                [
                    row["n"],
                    row["bernoulli"],
                    row["euler_number"],
                    row["euler_zero"],
                    "" if row["euler_zero_den_pow2"] is None else row["euler_zero_den_pow2"],
                ]
            )
    else:
        for row in rows:
            sys.stdout.write(json.dumps(row) + "\n")
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    p = args.p
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    cls = classify(p)
    order_doc = None
    if p >= 5:
        from .distribution import profile

        prof = profile(p)
        order_doc = {
            "r": prof.r,
            "m": prof.m,
            "in_p1": prof.in_p1,
            "in_p2": prof.in_p2,
            "witness": prof.witness,
        }
    doc = {
        "p": p,
        "irregular_indices": sorted(cls.irregular_indices),
        "e_irregular_indices": sorted(cls.e_irregular_indices),
        "is_irregular": cls.is_irregular,
        "is_e_irregular": cls.is_e_irregular,
        "wieferich": cls.wieferich,
        "order_profile": order_doc,
    }
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    if args.limit < 10:
        raise ValueError("--limit must be at least 10")
    if args.jobs < 1:
        raise ValueError("--jobs must be at least 1")
    primes = sieve_primes(args.limit).tolist()
    targets = [p for p in primes if p >= 5]
    cached: dict[int, CacheRecord] = {}
    if args.cache:
        try:
            cached, skipped = read_cache(args.cache)
        except OSError as exc:
            raise ValueError(f"cannot read cache {args.cache}: {exc}") from exc
        if skipped:
            print(f"note: skipped {skipped} corrupt cache lines", file=sys.stderr)
    known = [cached[p] for p in targets if p in cached]
    missing = [p for p in targets if p not in cached]
    fresh = [CacheRecord.from_profile(prof) for prof in profile_many(missing, jobs=args.jobs)]
    if args.cache and fresh:
        try:
            append_cache(args.cache, fresh)
        except OSError as exc:
            raise ValueError(f"cannot write cache {args.cache}: {exc}") from exc
    entries = sorted(known + fresh, key=lambda rec: rec.p)
    report = aggregate_report(x=args.limit, pi_x=len(primes), entries=entries)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(
        [
            "x",
            "pi",
            "count_p1",
            "count_p2",
            "certified",
            "bound",
            "class_1mod4",
            "class_3mod4",
            "class_1mod6",
            "class_5mod6",
        ]
    )
    writer.writerow(
        [
            report.x,
            report.pi_x,
            report.count_p1,
            report.count_p2,
            report.certified_count,
            f"{report.bound_value:.6f}",
            report.class_1mod4,
            report.class_3mod4,
            report.class_1mod6,
            report.class_5mod6,
        ]
    )
    return 0


def cmd_classnum(args: argparse.Namespace) -> int:
    report = relative_refined_class_number(args.p)
    agreement = report.divisible_by_p == report.e_irregular
    doc = {
        "p": report.p,
        "product_value": report.product_value,
        "h_minus": report.h_minus,
        "divisible_by_p": report.divisible_by_p,
        "e_irregular": report.e_irregular,
        "agreement": agreement,
    }
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0 if agreement else 1


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite, args.limit)
    failed = 0
    for result in results:
        if result.passed is None:
            status = "INFO"
        elif result.passed:
            status = "PASS"
        else:
            status = "FAIL"
            failed += 1
        sys.stdout.write(f"{status}  {result.name}: {result.detail}\n")
    gated = sum(1 for r in results if r.passed is not None)
    sys.stdout.write(f"{gated - failed} passed, {failed} failed\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eirreg",
        description="Exact and modular arithmetic for E-irregular primes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_exact = sub.add_parser("exact", help="exact Bernoulli / Euler tables")
    p_exact.add_argument("--max-n", type=int, required=True, metavar="N",
                         help=f"largest index, 0..{_EXACT_MAX_N}")
    p_exact.add_argument("--format", choices=("csv", "json"), default="csv")
    p_exact.set_defaults(func=cmd_exact)

    p_classify = sub.add_parser("classify", help="classify one odd prime")
    p_classify.add_argument("p", type=int)
    p_classify.set_defaults(func=cmd_classify)

    p_scan = sub.add_parser("scan", help="order-class census up to a bound")
    p_scan.add_argument("--limit", type=int, required=True)
    p_scan.add_argument("--jobs", type=int, default=1)
    p_scan.add_argument("--cache", type=str, default=None,
                        help="JSONL cache file, read and appended to")
    p_scan.set_defaults(func=cmd_scan)

    p_classnum = sub.add_parser("classnum", help="exact relative refined class number")
    p_classnum.add_argument("p", type=int)
    p_classnum.set_defaults(func=cmd_classnum)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=SUITES, default="all")
    p_verify.add_argument("--limit", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SelfCheckError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
