"""Command-line front end.

Verbs: sigma, bracket, changepoints, na, verify, table.  Output goes to
stdout as JSON, CSV, or text; diagnostics go to stderr.  Exit status is 0
on success (and all-PASS verification), 1 when any check FAILs, and 2 on
usage errors or comparisons left undecided at the precision cap.

Enclosure endpoints are rendered as decimal strings that parse back to the
exact binary values; integers stay integers.  The environment variable
SIGMA_LAB_MAX_BITS overrides the default precision cap when the
--max-precision-bits flag is not given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .bounds import (
    BoundedReal,
    DomainError,
    PrecisionExhaustedError,
    PrecisionPolicy,
    endpoints_decimal,
)
from .changepoints import (
    enumerate_changepoints,
    ensure_changepoints_through,
    quotient_report,
    read_cache_file,
    slice_records,
    write_cache_file,
)
from .verify import SUITE_NAMES, Verdict, run_suite

MAX_BITS_ENV = "SIGMA_LAB_MAX_BITS"


def _default_cache_path() -> str:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return os.path.join(base, "sigma-lab", "changepoints.jsonl")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigma-lab",
        description="Certified computation of the factorial-growth sequence sigma_n, "
        "its change points, n_a for bases a > 1, and the inequality audit suites.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--precision-bits", type=int, default=128, help="initial working precision")
        p.add_argument("--max-precision-bits", type=int, default=None, help="precision escalation cap")
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("sigma", help="certified sigma_n")
    p.add_argument("n", type=int)
    common(p)

    p = sub.add_parser("bracket", help="two-candidate bracket for sigma_n")
    p.add_argument("n", type=int)
    common(p)

    p = sub.add_parser("changepoints", help="enumerate change points n_i")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--cache", default=None, help="cache file path")
    p.add_argument("--no-cache", action="store_true", help="ignore the cache entirely")
    common(p)

    p = sub.add_parser("na", help="smallest l with a^l <= l!")
    p.add_argument("a", help="base a > 1, decimal (parsed exactly)")
    common(p)

    p = sub.add_parser("verify", help="run certified check suites")
    p.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p.add_argument("--max-n", type=int, default=None, help="size knob for range-based suites")
    common(p)

    p = sub.add_parser("table", help="rows of (n, sigma_n) over a range")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    common(p)

    return parser


def _policy_from(args: argparse.Namespace) -> PrecisionPolicy:
    max_bits = args.max_precision_bits
    if max_bits is None:
        env = os.environ.get(MAX_BITS_ENV)
        max_bits = int(env) if env else 8192
    return PrecisionPolicy(initial_bits=args.precision_bits, max_bits=max_bits)


def _enclosure_json(v: BoundedReal | None):
    if v is None:
        return None
    lo, hi = endpoints_decimal(v)
    return {"lo": lo, "hi": hi}


def _emit_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# -- verb handlers ----------------------------------------------------------------


def _run_sigma(args, policy) -> tuple[str, int]:
    from .sigma import sigma_exact

    cert = sigma_exact(args.n, policy)
    if args.format == "json":
        out = json.dumps(
            {"n": cert.n, "sigma": cert.sigma, "bits_used": cert.bits_used, "method": cert.method}
        )
    elif args.format == "csv":
        out = _emit_csv(
            ["n", "sigma", "bits_used", "method"],
            [[cert.n, cert.sigma, cert.bits_used, cert.method]],
        )
    else:
        out = f"sigma({cert.n}) = {cert.sigma}  [{cert.method}, {cert.bits_used} bits]"
    return out, 0


def _run_bracket(args, policy) -> tuple[str, int]:
    from .sigma import sigma_bracket

    br = sigma_bracket(args.n, bits=policy.initial_bits)
    if args.format == "json":
        out = json.dumps(
            {
                "n": br.n,
                "lower": _enclosure_json(br.lower),
                "upper": _enclosure_json(br.upper),
                "candidates": list(br.candidates),
            }
        )
    elif args.format == "csv":
        lo = endpoints_decimal(br.lower)
        hi = endpoints_decimal(br.upper)
        out = _emit_csv(
            ["n", "lower_lo", "lower_hi", "upper_lo", "upper_hi", "candidates"],
            [[br.n, lo[0], lo[1], hi[0], hi[1], ";".join(map(str, br.candidates))]],
        )
    else:
        lo, hi = endpoints_decimal(br.lower)
        ulo, uhi = endpoints_decimal(br.upper)
        out = (
            f"bracket({br.n}): lower in [{lo}, {hi}], upper in [{ulo}, {uhi}], "
            f"candidates {list(br.candidates)}"
        )
    return out, 0


def _run_changepoints(args, policy) -> tuple[str, int]:
    if args.no_cache:
        records = enumerate_changepoints(args.max_n, policy)
    else:
        path = args.cache or _default_cache_path()
        known = []
        if os.path.exists(path):
            try:
                known = read_cache_file(path, bits=policy.initial_bits)
            except (ValueError, json.JSONDecodeError) as exc:
                print(f"ignoring unreadable cache {path}: {exc}", file=sys.stderr)
        if known and known[-1].n > args.max_n:
            full = known
        else:
            full = ensure_changepoints_through(args.max_n, policy, known)
            write_cache_file(path, full)
        records = slice_records(full, args.max_n)

    if args.format == "json":
        out = json.dumps(
            {
                "max_n": args.max_n,
                "records": [
                    {
                        "index": r.index,
                        "n_i": r.n,
                        "sigma_at": r.sigma_at,
                        "gap": r.gap,
                        "quotient": _enclosure_json(r.quotient),
                        "bits_used": r.bits_used,
                    }
                    for r in records
                ],
            }
        )
    elif args.format == "csv":
        rows = []
        for r in records:
            q = endpoints_decimal(r.quotient) if r.quotient is not None else ("", "")
            rows.append([r.index, r.n, r.sigma_at, r.gap if r.gap is not None else "", q[0], q[1]])
        out = _emit_csv(["index", "n_i", "sigma_at", "gap", "quotient_lo", "quotient_hi"], rows)
    else:
        lines = [f"change points with n_i <= {args.max_n}:"]
        for r in records:
            part = f"  n_{r.index} = {r.n}  (sigma = {r.sigma_at})"
            if r.gap is not None:
                qlo, qhi = endpoints_decimal(r.quotient)
                part += f"  gap {r.gap}, quotient in [{qlo}, {qhi}]"
            lines.append(part)
        for row in quotient_report(records, bits=policy.initial_bits):
            dlo, dhi = endpoints_decimal(row.distance_to_e_squared)
            lines.append(f"  quotient n_{row.index + 1}/n_{row.index} - e^2 in [{dlo}, {dhi}]")
        out = "\n".join(lines)
    return out, 0


def _run_na(args, policy) -> tuple[str, int]:
    from .sigma import n_a_of

    try:
        a = Fraction(args.a)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"cannot parse base {args.a!r} as an exact decimal/rational")
    result = n_a_of(a, policy)
    if args.format == "json":
        out = json.dumps({"a": args.a, "n_a": result.n_a, "n_env": result.n_env, "r": result.r})
    elif args.format == "csv":
        out = _emit_csv(["a", "n_a", "n_env", "r"], [[args.a, result.n_a, result.n_env, result.r]])
    else:
        out = f"n_a({args.a}) = {result.n_a}  [envelope n = {result.n_env}, r = {result.r}]"
    return out, 0


def _run_verify(args, policy) -> tuple[str, int]:
    reports = run_suite(args.suite, policy, max_n=args.max_n)
    worst = 0
    for rep in reports:
        if rep.verdict is Verdict.FAIL:
            worst = max(worst, 1)
        elif rep.verdict is Verdict.UNDECIDED:
            worst = max(worst, 2)
    if args.format == "json":
        out = json.dumps(
            {
                "checks": [
                    {
                        "check_id": r.check_id,
                        "params": r.params,
                        "verdict": r.verdict.value,
                        "witnesses": [[k, v] for k, v in r.witnesses],
                    }
                    for r in reports
                ]
            }
        )
    elif args.format == "csv":
        out = _emit_csv(
            ["check_id", "verdict", "witnesses"],
            [[r.check_id, r.verdict.value, len(r.witnesses)] for r in reports],
        )
    else:
        lines = []
        for r in reports:
            params = " ".join(f"{k}={v}" for k, v in r.params.items())
            lines.append(f"{r.verdict.value:<9} {r.check_id}  {params}".rstrip())
            for key, value in r.witnesses:
                lines.append(f"    {key}: {value}")
        out = "\n".join(lines)
    return out, worst


def _run_table(args, policy) -> tuple[str, int]:
    from .changepoints import first_n_with_sigma
    from .sigma import sigma_exact

    if args.start < 1 or args.stop < args.start:
        raise DomainError("table requires 1 <= from <= to")
    rows: list[tuple[int, int]] = []
    n = args.start
    s = sigma_exact(n, policy).sigma
    while n <= args.stop:
        nxt = first_n_with_sigma(s + 1, policy)
        top = min(args.stop, nxt - 1)
        rows.extend((m, s) for m in range(n, top + 1))
        n = nxt
        s += 1
    if args.format == "json":
        out = json.dumps(
            {"from": args.start, "to": args.stop, "rows": [{"n": a, "sigma": b} for a, b in rows]}
        )
    elif args.format == "csv":
        out = _emit_csv(["n", "sigma"], [list(row) for row in rows])
    else:
        out = "\n".join(f"sigma({a}) = {b}" for a, b in rows)
    return out, 0


_HANDLERS = {
    "sigma": _run_sigma,
    "bracket": _run_bracket,
    "changepoints": _run_changepoints,
    "na": _run_na,
    "verify": _run_verify,
    "table": _run_table,
}


def dispatch(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        policy = _policy_from(args)
    except ValueError as exc:
        print(f"invalid precision flags: {exc}", file=sys.stderr)
        return 2
    try:
        out, status = _HANDLERS[args.verb](args, policy)
    except PrecisionExhaustedError as exc:
        print(f"undecided at precision cap: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return status


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
