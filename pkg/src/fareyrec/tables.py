"""Batch table emission in the four output formats.

Rows stream in ascending fraction order from the tree walk, so the output
is deterministic and arbitrarily large tables run in memory proportional to
the tree depth, not the row count.
"""

from __future__ import annotations

import csv
import json
import time
from typing import IO, Iterator

from .farey import Fraction
from .engine import iter_family
from .poly import Poly, format_poly

TABLE_KINDS = ("T", "T0", "riley", "uv")
FORMATS = ("text", "csv", "json", "latex")


def iter_rows(kind: str, max_den: int, lo: Fraction, hi: Fraction
              ) -> Iterator[tuple[Fraction, Poly]]:
    if kind not in TABLE_KINDS:
        raise ValueError(f"unknown table kind {kind!r}")
    return iter_family(kind, max_den, lo, hi)


def _degree(p: Poly) -> int:
    return 0 if p.is_zero else p.total_degree()


def write_table(kind: str, max_den: int, lo: Fraction, hi: Fraction,
                fmt: str, stream: IO[str],
                record_hook=None) -> tuple[int, float]:
    """Emit the table; returns (row count, elapsed seconds).

    `record_hook(frac, poly)` is called per row after it is written, which
    the CLI uses to flush snapshot records incrementally.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    start = time.perf_counter()
    count = 0
    writer = csv.writer(stream) if fmt == "csv" else None
    if writer is not None:
        writer.writerow(["frac", "kind", "degree", "poly"])
    for alpha, value in iter_rows(kind, max_den, lo, hi):
        text = format_poly(value)
        if fmt == "text":
            stream.write(f"{alpha}  {text}\n")
        elif fmt == "csv":
            writer.writerow([str(alpha), kind, _degree(value), text])
        elif fmt == "json":
            stream.write(json.dumps({"frac": str(alpha), "kind": kind,
                                     "poly": text}) + "\n")
        else:  # latex: fraction, then polynomial, aligned like the reference lists
            stream.write(f"{alpha.num}/{alpha.den} && {text.replace('*', ' ')} \\\\\n")
        if record_hook is not None:
            record_hook(alpha, value)
        count += 1
    return count, time.perf_counter() - start
