"""Command-line interface.

    frf compute --frac 2/5 --what T0
    frf table --max-den 18 --what T0 --format latex
    frf verify --suite section8
    frf divides --num 1/3 --den 1/9
    frf preps --frac 2/5 --tol 1e-8

The FRF_CACHE environment variable (or --cache) names a JSON-lines snapshot
that point computations reuse and extend.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .farey import Fraction
from .engine import MemoStore, Family, make_family
from .poly import format_poly
from .tables import FORMATS, TABLE_KINDS, write_table
from .verify import SUITES, run_suite
from .words import riley_roots, verify_prep

COMPUTE_KINDS = ("T", "T0", "riley", "uv", "U")


@dataclass
class JobSpec:
    """Parsed batch-job options shared by the table and cache plumbing."""
    kind: str
    max_den: int
    lo: Fraction
    hi: Fraction
    fmt: str = "text"
    out: str | None = None
    cache: str | None = None


def _cache_path(args) -> str | None:
    return args.cache or os.environ.get("FRF_CACHE") or None


def _family_with_cache(kind: str, cache: str | None) -> Family:
    """Family whose store was primed from the snapshot when one exists."""
    fam = make_family(kind)
    if cache and os.path.exists(cache):
        fresh = make_family(kind)
        fam.store = MemoStore.load(cache, kind, fam.variables,
                                   recompute=fresh.value, sample=0.01)
    return fam


def cmd_compute(args) -> int:
    try:
        alpha = Fraction.parse(args.frac)
    except ValueError as exc:
        print(f"error: bad fraction {args.frac!r}: {exc}", file=sys.stderr)
        return 2
    cache = _cache_path(args)
    if args.what == "uv":
        from .engine import uv_poly
        print(format_poly(uv_poly(alpha)))
        return 0
    fam = _family_with_cache(args.what, cache)
    print(format_poly(fam.value(alpha)))
    if cache:
        fam.store.save(cache)
    return 0


def cmd_table(args) -> int:
    try:
        lo = Fraction.parse(args.lo)
        hi = Fraction.parse(args.hi)
    except ValueError as exc:
        print(f"error: bad range: {exc}", file=sys.stderr)
        return 2
    job = JobSpec(kind=args.what, max_den=args.max_den, lo=lo, hi=hi,
                  fmt=args.format, out=args.out, cache=_cache_path(args))
    cache_fh = open(job.cache, "a") if job.cache else None

    def record_hook(alpha, value):
        if cache_fh is not None and job.kind != "uv":
            rec = {"frac": str(alpha), "kind": job.kind, "poly": format_poly(value)}
            cache_fh.write(json.dumps(rec) + "\n")
            cache_fh.flush()

    stream = open(job.out, "w") if job.out else sys.stdout
    try:
        count, elapsed = write_table(job.kind, job.max_den, job.lo, job.hi,
                                     job.fmt, stream,
                                     record_hook if cache_fh else None)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if job.out:
            stream.close()
        if cache_fh is not None:
            cache_fh.close()
    print(f"rows={count} elapsed={elapsed:.2f}s", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    opts = {}
    if args.max_den is not None:
        opts["max_den"] = args.max_den
    if args.odd_only:
        opts["odd_only"] = True
    if args.tol is not None:
        opts["tol"] = args.tol
    if args.seed is not None:
        opts["seed"] = args.seed
    results = run_suite(args.suite, **opts)
    report = {"suite": args.suite,
              "ok": all(r.ok for r in results),
              "checks": [r.as_dict() for r in results]}
    print(json.dumps(report, indent=2))
    return 0 if report["ok"] else 1


def cmd_divides(args) -> int:
    from .orbits import divides_quotient
    try:
        alpha = Fraction.parse(args.num)
        alpha_prime = Fraction.parse(args.den)
    except ValueError as exc:
        print(f"error: bad fraction: {exc}", file=sys.stderr)
        return 2
    quotient = divides_quotient(alpha, alpha_prime, args.what)
    verdict = {
        "alpha": str(alpha),
        "alpha_prime": str(alpha_prime),
        "divides": quotient is not None,
        "quotient": format_poly(quotient) if quotient is not None else None,
    }
    print(json.dumps(verdict))
    return 0


def cmd_preps(args) -> int:
    try:
        alpha = Fraction.parse(args.frac)
    except ValueError as exc:
        print(f"error: bad fraction {args.frac!r}: {exc}", file=sys.stderr)
        return 2
    from .engine import riley_poly
    lam = riley_poly(alpha)
    records = []
    for root, _mult in riley_roots(alpha, args.tol):
        records.append({
            "frac": str(alpha),
            "root_re": root.real,
            "root_im": root.imag,
            "residual": abs(lam.eval_complex({"X": root})),
            "prep_ok": verify_prep(alpha, root, args.tol),
        })
    print(json.dumps(records, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frf",
                                     description="Farey-recursive polynomial computations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print one polynomial")
    p.add_argument("--frac", required=True, help="target fraction, e.g. 2/7")
    p.add_argument("--what", default="T0", choices=COMPUTE_KINDS)
    p.add_argument("--cache", default=None, help="snapshot path (default: $FRF_CACHE)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="emit a table over a fraction range")
    p.add_argument("--max-den", type=int, required=True,
                   help="exclusive denominator bound")
    p.add_argument("--lo", default="0/1")
    p.add_argument("--hi", default="1/2")
    p.add_argument("--what", default="T0", choices=TABLE_KINDS)
    p.add_argument("--format", default="text", choices=FORMATS)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--cache", default=None,
                   help="append snapshot records as rows are produced")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--max-den", type=int, default=None)
    p.add_argument("--odd-only", action="store_true")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("divides", help="exact divisibility between two values")
    p.add_argument("--num", required=True, help="candidate factor slope")
    p.add_argument("--den", required=True, help="candidate multiple slope")
    p.add_argument("--what", default="T", choices=("T", "T0"))
    p.set_defaults(func=cmd_divides)

    p = sub.add_parser("preps", help="Riley roots and parabolic-representation checks")
    p.add_argument("--frac", required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_preps)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
