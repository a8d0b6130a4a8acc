"""Command-line surface.

Commands
    tables   exact coefficient tables (bernoulli, euler_zero, genocchi, c_coeff)
    values   exact values / pole reports of u, v, w at non-positive integers
    eval     numeric evaluation of u, v, w, eta, zeta, G at a point
    verify   identity suites (exact_identities, continuation, theorem4)
    bench    naive summation vs. accelerated pipeline at matched accuracy

Exact rationals are serialized as "numerator/denominator" strings (plain
integer string when the denominator is 1) so values round-trip losslessly;
floats always travel next to an explicit error_bound.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 evaluation-domain error (machine-readable reason on stdout).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict
from fractions import Fraction

from . import bench as bench_mod
from . import verify as verify_mod
from .closed_forms import (
    Log2Linear,
    c_coefficients,
    u_value,
    v_residue,
    v_value_even,
    w_value,
)
from .errors import EvaluationError
from .exact import bernoulli, euler_zero, genocchi
from .hankel import g_num
from .numeric import (
    AccelConfig,
    eta_num,
    u_num,
    v_num,
    w_num,
    zeta_num,
)

__all__ = ["main", "run", "to_json"]


def fmt_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def fmt_log2linear(value: Log2Linear) -> dict:
    return {
        "rational_part": fmt_rational(value.rational_part),
        "log2_coeff": fmt_rational(value.log2_coeff),
    }


def to_json(obj) -> str:
    return json.dumps(obj, indent=2)


def _emit_json(obj) -> None:
    sys.stdout.write(to_json(obj) + "\n")


def _emit_csv(header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _parse_s(text: str) -> complex:
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise ValueError(f"cannot parse s from {text!r}; use 're' or 're,im'")
    try:
        re = float(parts[0])
        im = float(parts[1]) if len(parts) == 2 else 0.0
    except ValueError as exc:
        raise ValueError(f"cannot parse s from {text!r}") from exc
    return complex(re, im)


_TABLE_FUNCS = {
    "bernoulli": lambda n: fmt_rational(bernoulli(n)),
    "euler_zero": lambda n: fmt_rational(euler_zero(n)),
    "genocchi": lambda n: str(genocchi(n)),
}


def cmd_tables(args, cfg: AccelConfig) -> int:
    if args.max_n < 1:
        print("--max-n must be >= 1", file=sys.stderr)
        return 2
    if args.max_n > 10_000:
        print(
            f"note: generating exact tables to n={args.max_n} is an O(n^2) "
            "big-rational computation and may take a while",
            file=sys.stderr,
        )
    if args.kind == "c_coeff":
        coeffs = c_coefficients(args.max_n)
        pairs = [(n, fmt_rational(coeffs[n - 1])) for n in range(1, args.max_n + 1)]
    else:
        func = _TABLE_FUNCS[args.kind]
        pairs = [(n, func(n)) for n in range(0, args.max_n + 1)]
    if args.format == "csv":
        _emit_csv(["n", "value"], [[n, v] for n, v in pairs])
    else:
        _emit_json(
            {
                "command": "tables",
                "kind": args.kind,
                "rows": [
                    {"kind": "table_row", "payload": {"index": n, "value": v}}
                    for n, v in pairs
                ],
            }
        )
    return 0


_V_POLES_NONPOS = lambda m: m == 0 or (m % 2 == 1)


def _values_rows(function: str, m_max: int) -> list[dict]:
    rows = []
    for m in range(0, m_max + 1):
        if function == "v" and _V_POLES_NONPOS(m):
            pole = v_residue(-m)
            payload = {
                "s": -m,
                "pole": {
                    "location": pole.location,
                    "residue": fmt_rational(pole.residue),
                    "order": pole.order,
                },
            }
        elif function == "v":
            payload = {
                "s": -m,
                "value": fmt_log2linear(
                    Log2Linear(v_value_even(m // 2), Fraction(0))
                ),
            }
        else:
            value = u_value(m) if function == "u" else w_value(m)
            payload = {"s": -m, "value": fmt_log2linear(value)}
        rows.append({"kind": "value", "payload": payload})
    return rows


def cmd_values(args, cfg: AccelConfig) -> int:
    if args.m_max < 0:
        print("--m-max must be >= 0", file=sys.stderr)
        return 2
    rows = _values_rows(args.function, args.m_max)
    if args.format == "csv":
        table = []
        for row in rows:
            p = row["payload"]
            if "pole" in p:
                table.append(
                    [p["s"], "pole", "", "", p["pole"]["residue"], p["pole"]["order"]]
                )
            else:
                table.append(
                    [p["s"], "value", p["value"]["rational_part"],
                     p["value"]["log2_coeff"], "", ""]
                )
        _emit_csv(
            ["s", "type", "rational_part", "log2_coeff", "residue", "order"], table
        )
    else:
        _emit_json({"command": "values", "function": args.function, "rows": rows})
    return 0


_EVAL_FUNCS = {
    "u": u_num,
    "v": v_num,
    "w": w_num,
    "eta": eta_num,
    "zeta": zeta_num,
}


def cmd_eval(args, cfg: AccelConfig) -> int:
    s = _parse_s(args.s)
    if args.function == "G":
        if s.imag != 0:
            print(
                to_json({"error": {"reason": "unsupported_region",
                                   "detail": "G is evaluated on the real axis only"}})
            )
            return 3
        result = g_num(s.real, cfg)
    else:
        result = _EVAL_FUNCS[args.function](s, cfg)
    payload = {
        "function": args.function,
        "s": {"re": s.real, "im": s.imag},
        "value": {"re": result.value.real, "im": result.value.imag},
        "error_bound": result.error_bound,
        "bound_kind": result.bound_kind,
        "config": {
            "q": cfg.q,
            "series_cutoff": cfg.series_cutoff,
            "quad_nodes": cfg.quad_nodes,
            "period_cap": cfg.period_cap,
            "tol": cfg.tol,
        },
    }
    if args.format == "csv":
        _emit_csv(
            ["re", "im", "error_bound", "bound_kind"],
            [[result.value.real, result.value.imag, result.error_bound,
              result.bound_kind]],
        )
    else:
        _emit_json({"command": "eval", "rows": [{"kind": "value", "payload": payload}]})
    return 0


def cmd_verify(args, cfg: AccelConfig) -> int:
    max_n = args.max_n
    if args.suite == "exact_identities":
        rows, passed = verify_mod.run_exact_identities(200 if max_n is None else max_n)
    elif args.suite == "continuation":
        rows, passed = verify_mod.run_continuation(
            6 if max_n is None else max_n, args.tol, cfg
        )
    else:
        rows, passed = verify_mod.run_theorem4(args.tol, cfg)
    if args.format == "csv":
        header = sorted({k for row in rows for k in row})
        _emit_csv(header, [[row.get(k, "") for k in header] for row in rows])
    else:
        _emit_json(
            {
                "command": "verify",
                "suite": args.suite,
                "passed": passed,
                "rows": [{"kind": "verification", "payload": row} for row in rows],
            }
        )
    return 0 if passed else 1


def cmd_bench(args, cfg: AccelConfig) -> int:
    methods = tuple(m.strip() for m in args.methods.split(",") if m.strip())
    try:
        rows = bench_mod.run_bench(args.function, args.s, methods, args.digits)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.format == "csv":
        _emit_csv(
            ["method", "function", "s", "terms", "quad_evals",
             "achieved_error", "seconds", "slow_converging"],
            [[r.method, r.function, r.s, r.terms, r.quad_evals,
              r.achieved_error, r.seconds, r.slow_converging] for r in rows],
        )
    else:
        _emit_json(
            {
                "command": "bench",
                "rows": [
                    {"kind": "benchmark_row", "payload": asdict(r)} for r in rows
                ],
            }
        )
    return 0


def _global_args(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # the same flags are accepted before or after the subcommand; the
    # subparser copies use SUPPRESS defaults so they only override when
    # given explicitly
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=("json", "csv"),
                        default=d if suppress else "json")
    parser.add_argument("--tol", type=float,
                        default=d if suppress else 1e-10)
    parser.add_argument("--q", type=int,
                        default=d if suppress else None,
                        help="override the tail-expansion order")
    parser.add_argument("--seed",
                        default=d if suppress else None,
                        help="reserved; the tool is fully deterministic")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulersums",
        description="Exact and numeric toolkit for alternating Euler sums.",
    )
    _global_args(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_args(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="exact coefficient tables",
                       parents=[common])
    p.add_argument("kind", choices=("bernoulli", "euler_zero", "genocchi", "c_coeff"))
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.set_defaults(handler=cmd_tables)

    p = sub.add_parser("values", help="exact values at non-positive integers",
                       parents=[common])
    p.add_argument("function", choices=("u", "v", "w"))
    p.add_argument("--m-max", type=int, required=True, dest="m_max")
    p.set_defaults(handler=cmd_values)

    p = sub.add_parser("eval", help="numeric evaluation at a point",
                       parents=[common])
    p.add_argument("function", choices=("u", "v", "w", "eta", "zeta", "G"))
    p.add_argument("s", help="complex argument as 're' or 're,im'")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("verify", help="identity verification suites",
                       parents=[common])
    p.add_argument("suite", choices=("exact_identities", "continuation", "theorem4"))
    p.add_argument("--max-n", type=int, default=None, dest="max_n",
                   help="identity index cap (default: 200 exact, 6 continuation)")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("bench", help="naive vs accelerated cost comparison",
                       parents=[common])
    p.add_argument("function", choices=("u", "v", "w"))
    p.add_argument("s", type=float)
    p.add_argument("--methods", default="naive,boole")
    p.add_argument("--digits", type=int, default=8)
    p.set_defaults(handler=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        # exact tables legitimately contain integers beyond the default
        # int-to-str conversion cap
        sys.set_int_max_str_digits(0)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.seed is not None:
        print("--seed is rejected: this tool is fully deterministic",
              file=sys.stderr)
        return 2
    if args.tol <= 0:
        print("--tol must be positive", file=sys.stderr)
        return 2
    try:
        cfg = AccelConfig(q=args.q, tol=args.tol)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    try:
        return args.handler(args, cfg)
    except EvaluationError as exc:
        _emit_json({"error": {"reason": exc.reason, "detail": str(exc)}})
        return 3
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
