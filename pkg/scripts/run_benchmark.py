#!/usr/bin/env python3
"""Sweep the naive-vs-accelerated benchmark over a grid of s values and
accuracy targets, emitting plot-ready CSV.

Examples:
    python scripts/run_benchmark.py
    python scripts/run_benchmark.py --function u --s 1.1 1.5 2 3 --digits 6 8
    python scripts/run_benchmark.py --out bench.csv
"""

from __future__ import annotations

import argparse
import csv
import sys

from eulersums.bench import run_bench


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--function", choices=("u", "v", "w"), default="u")
    parser.add_argument("--s", type=float, nargs="+",
                        default=[1.1, 1.5, 2.0, 3.0])
    parser.add_argument("--digits", type=int, nargs="+", default=[6, 8])
    parser.add_argument("--out", default="-",
                        help="output CSV path ('-' for stdout)")
    args = parser.parse_args()

    handle = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    try:
        writer = csv.writer(handle)
        writer.writerow(
            ["function", "s", "digits", "method", "terms", "quad_evals",
             "achieved_error", "seconds", "slow_converging"]
        )
        for s in args.s:
            for digits in args.digits:
                for row in run_bench(args.function, s, digits_target=digits):
                    writer.writerow(
                        [row.function, row.s, digits, row.method, row.terms,
                         row.quad_evals, row.achieved_error, row.seconds,
                         row.slow_converging]
                    )
                    print(
                        f"{row.function}({s}) @ {digits} digits, "
                        f"{row.method}: {row.terms} terms in "
                        f"{row.seconds:.3f}s (err {row.achieved_error:.2e})",
                        file=sys.stderr,
                    )
    finally:
        if handle is not sys.stdout:
            handle.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
