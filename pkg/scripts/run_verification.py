#!/usr/bin/env python3
"""Run every verification suite and print a one-line summary per suite.

Exit status is 0 only if all suites pass.

Examples:
    python scripts/run_verification.py
    python scripts/run_verification.py --max-n 200 --tol 1e-8
"""

from __future__ import annotations

import argparse
import sys
import time

from eulersums.verify import run_continuation, run_exact_identities, run_theorem4


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=200)
    parser.add_argument("--continuation-m", type=int, default=6)
    parser.add_argument("--tol", type=float, default=1e-8)
    args = parser.parse_args()

    ok = True
    t0 = time.perf_counter()
    rows, passed = run_exact_identities(args.max_n)
    print(f"exact_identities: {len(rows)} checks, "
          f"{'PASS' if passed else 'FAIL'} ({time.perf_counter() - t0:.2f}s)")
    ok &= passed

    t0 = time.perf_counter()
    rows, passed = run_continuation(args.continuation_m, args.tol)
    print(f"continuation:     {len(rows)} checks, "
          f"{'PASS' if passed else 'FAIL'} ({time.perf_counter() - t0:.2f}s)")
    ok &= passed

    t0 = time.perf_counter()
    rows, passed = run_theorem4(args.tol)
    worst = max(row["residual"] for row in rows)
    print(f"theorem4:         {len(rows)} checks, worst residual {worst:.2e}, "
          f"{'PASS' if passed else 'FAIL'} ({time.perf_counter() - t0:.2f}s)")
    ok &= passed

    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
