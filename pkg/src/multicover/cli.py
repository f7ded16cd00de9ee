"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (bad input file, failed
verification), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from .arith import format_rational, to_decimal
from .contributions import (
    MODELS,
    GeometrySignature,
    contribution_degree,
    contribution_partition_sum,
    contribution_series,
)
from .hodge import (
    alpha,
    alpha_via_log,
    faber_expected,
    faber_ratio_check,
    kappa_integral,
    psi_lambda_table,
)
from .series import int_pow, sine_ratio
from .tables import BPSTable, ETable, GWTable, TableError, dumps_json, load_table, table_to_csv, table_to_json
from .transforms import enumerative_forward, enumerative_solve, gv_forward, gv_invert
from .verify import SUITES, run_all


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(";", ",").split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


class _Out:
    """Renders rationals per --decimal and emits rows as JSON or CSV."""

    def __init__(self, fmt: str, decimal: Optional[int]):
        self.fmt = fmt
        self.decimal = decimal

    def val(self, x: Optional[Fraction]) -> Any:
        if x is None:
            return None
        if self.decimal is None:
            return format_rational(x)
        return {"exact": format_rational(x), "approx": "~" + to_decimal(x, self.decimal)}

    def emit(self, doc: Any, rows: Optional[list[dict]] = None) -> str:
        if self.fmt == "json" or rows is None:
            return dumps_json(doc)
        buf = io.StringIO()
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            for r in rows:
                w.writerow({k: _csv_cell(v) for k, v in r.items()})
        return buf.getvalue()


def _csv_cell(v: Any) -> Any:
    if isinstance(v, dict):
        return v["exact"]
    if isinstance(v, bool):
        return str(v).lower()
    if v is None:
        return ""
    return v


def cmd_series(args, out: _Out) -> str:
    if args.kind == "Q":
        s = alpha_via_log(args.order)
    else:
        s = int_pow(sine_ratio(args.order), args.exponent)
    coeffs = [out.val(c) for c in s]
    return out.emit(coeffs, [{"h": h, "value": c} for h, c in enumerate(coeffs)])


def cmd_contrib(args, out: _Out) -> str:
    if args.anti_k > 0 and args.d != 1:
        raise UsageError("--d > 1 is only meaningful with --anti-k 0 (multiple covers in a Calabi-Yau)")
    rows = []
    if args.anti_k > 0 or args.d == 1:
        sig = GeometrySignature(args.genus, args.anti_k)
        ser = contribution_series(sig, args.max_h)
        for h in range(args.max_h + 1):
            row = {"h": h, "value": out.val(ser[h]), "defined": True}
            if args.check_routes:
                ps = contribution_partition_sum(sig, h)
                row["partition_sum"] = out.val(ps)
                row["routes_agree"] = ps == ser[h]
            rows.append(row)
    else:
        for h in range(args.max_h + 1):
            cv = contribution_degree(args.genus, h, args.d, args.model)
            rows.append({"h": h, "value": out.val(cv.value), "defined": cv.defined})
    doc = {
        "genus": args.genus,
        "anti_k": args.anti_k,
        "d": args.d,
        "model": args.model,
        "rows": rows,
    }
    return out.emit(doc, rows)


def cmd_hodge(args, out: _Out) -> str:
    rows: list[dict] = []
    doc: dict[str, Any] = {"kind": args.which}
    if args.which == "alpha":
        via_log = alpha_via_log(args.max_q)
        for q in range(1, args.max_q + 1):
            a = alpha(q)
            rows.append({"q": q, "alpha": out.val(a), "via_log": out.val(via_log[q]),
                         "equal": a == via_log[q]})
    elif args.which == "kappa":
        for q in range(2, args.max_q + 1):
            rows.append({"q": q, "kappa_integral": out.val(kappa_integral(q))})
    elif args.which == "faber":
        for q in range(2, args.max_q + 1):
            ratio, expected = faber_ratio_check(q), faber_expected(q)
            rows.append({
                "q": q,
                "alpha": out.val(alpha(q)),
                "kappa_integral": out.val(kappa_integral(q)),
                "ratio": out.val(ratio),
                "expected": out.val(expected),
                "equal": ratio == expected,
            })
        doc["all_equal"] = all(r["equal"] for r in rows)
    else:
        for (h, i), v in sorted(psi_lambda_table(args.max_h).items()):
            rows.append({"h": h, "i": i, "value": out.val(v)})
    doc["rows"] = rows
    return out.emit(doc, rows)


def _emit_table(table, args, out: _Out) -> str:
    if args.format == "csv":
        return table_to_csv(table, include_zeros=args.include_zeros)
    return dumps_json(table_to_json(table, include_zeros=args.include_zeros, decimal=out.decimal))


def cmd_gv(args, out: _Out) -> str:
    if args.action == "forward":
        bps = load_table(args.input, BPSTable)
        table = gv_forward(bps, args.max_genus, args.degree_cutoffs, model=args.model)
    else:
        table = gv_invert(load_table(args.input, GWTable), model=args.model)
    return _emit_table(table, args, out)


def cmd_enum(args, out: _Out) -> str:
    if args.action == "forward":
        table = enumerative_forward(load_table(args.input, ETable), args.canonical)
    else:
        table = enumerative_solve(load_table(args.input, GWTable), args.canonical)
    return _emit_table(table, args, out)


def cmd_verify(args, out: _Out) -> str:
    results = run_all(args.suite)
    n_pass = sum(r.passed for r in results)
    doc = {
        "suites": [r.as_dict() for r in results],
        "passed": n_pass,
        "failed": len(results) - n_pass,
    }
    rows = [{"suite": r.name, "checked": r.checked, "passed": r.passed} for r in results]
    args._failed = len(results) - n_pass
    return out.emit(doc, rows)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--decimal", type=_positive, metavar="N",
                        help="add N-digit decimal approximations next to exact values")

    p = argparse.ArgumentParser(
        prog="multicover",
        description="Exact degenerate contributions, Hodge integrals and BPS extraction.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("series", parents=[common], help="powers of sin(t/2)/(t/2) and Q(t)")
    s.add_argument("kind", nargs="?", choices=("power", "Q"), default="power")
    s.add_argument("--order", type=_nonneg, required=True)
    s.add_argument("--exponent", type=int, default=1)
    s.set_defaults(func=cmd_series)

    c = sub.add_parser("contrib", parents=[common], help="degenerate contributions C_g(h, d)")
    c.add_argument("--genus", type=_nonneg, required=True)
    c.add_argument("--anti-k", type=_nonneg, default=0)
    c.add_argument("--max-h", type=_nonneg, required=True)
    c.add_argument("--d", type=_positive, default=1)
    c.add_argument("--model", choices=MODELS, default="geometric")
    c.add_argument("--check-routes", action="store_true",
                   help="also evaluate the partition sum (degree 1 only)")
    c.set_defaults(func=cmd_contrib)

    h = sub.add_parser("hodge", parents=[common], help="Hodge integral values")
    h.add_argument("which", choices=("alpha", "kappa", "faber", "psi-lambda"))
    h.add_argument("--max-q", type=_positive, default=10)
    h.add_argument("--max-h", type=_positive, default=5)
    h.set_defaults(func=cmd_hodge)

    g = sub.add_parser("gv", parents=[common], help="Gopakumar-Vafa transform of a table")
    g.add_argument("action", choices=("forward", "invert"))
    g.add_argument("--input", required=True)
    g.add_argument("--model", choices=MODELS, default="mtheory")
    g.add_argument("--max-genus", type=_nonneg)
    g.add_argument("--degree-cutoffs", type=_int_list)
    g.add_argument("--include-zeros", action="store_true")
    g.set_defaults(func=cmd_gv)

    e = sub.add_parser("enum", parents=[common], help="enumerative correction system")
    e.add_argument("action", choices=("forward", "solve"))
    e.add_argument("--input", required=True)
    e.add_argument("--canonical", type=_int_list,
                   help="canonical pairing vector; overrides the one in the file")
    e.add_argument("--include-zeros", action="store_true")
    e.set_defaults(func=cmd_enum)

    v = sub.add_parser("verify", parents=[common], help="run the cross-route identity suites")
    v.add_argument("--suite", action="append", choices=sorted(SUITES))
    v.set_defaults(func=cmd_verify)
    return p


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(args.format, args.decimal)
    try:
        text = args.func(args, out)
    except UsageError as exc:
        print(f"multicover {args.command}: error: {exc}", file=stderr)
        return 2
    except (TableError, ValueError) as exc:
        print(f"multicover {args.command}: {exc}", file=stderr)
        return 1
    stdout.write(text)
    if getattr(args, "_failed", 0):
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
