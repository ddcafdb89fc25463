"""Command-line interface.

    eulersum coeffs {coth,tanh,weights} COUNT
    eulersum sum N [--alternating]
    eulersum zeta N
    eulersum eta N
    eulersum verify [--depth D]

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 mathematical domain error (e.g. a divergent series).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import coefficients as coeffs
from . import engine
from .errors import DomainError
from .exact import format_fraction, rat_to_decimal
from .terms import PowerTerm
from .verify import run_checks

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def _orders(text: str):
    if text == engine.AUTO:
        return engine.AUTO
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'auto' or an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("order must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=_positive_int, default=30,
                        help="fractional digits in decimal output (default 30)")
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--split", type=_positive_int, default=10,
                        help="index x where the accelerated tail starts (default 10)")
    common.add_argument("--orders", type=_orders, default=engine.AUTO,
                        help="number of derivative terms, or 'auto' (default)")
    common.add_argument("--max-order", type=_positive_int, default=engine.DEFAULT_MAX_ORDER,
                        help="cap for automatic order selection (default 16)")

    parser = argparse.ArgumentParser(
        prog="eulersum",
        description="Euler's differential summation formulas with exact coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", parents=[common], help="print coefficient tables")
    p.add_argument("family", choices=("coth", "tanh", "weights"))
    p.add_argument("count", type=_positive_int)

    p = sub.add_parser("sum", parents=[common], help="sum 1/k**N (or its alternating version)")
    p.add_argument("n", type=int)
    p.add_argument("--alternating", action="store_true")

    p = sub.add_parser("zeta", parents=[common], help="zeta(N) = sum 1/k**N")
    p.add_argument("n", type=int)

    p = sub.add_parser("eta", parents=[common], help="eta(N) = sum (-1)**(k+1)/k**N")
    p.add_argument("n", type=int)

    p = sub.add_parser("verify", parents=[common], help="run the cross-check battery")
    p.add_argument("--depth", type=_positive_int, default=10)
    return parser


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def _dump_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _dump_table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _emit(fmt: str, header: list[str], rows: list[list], records: list[dict]) -> str:
    if fmt == "json":
        return _dump_json(records)
    if fmt == "csv":
        return _dump_csv(header, rows)
    return _dump_table(header, rows)


def cmd_coeffs(args) -> tuple[int, str]:
    d = args.digits
    if args.family == "weights":
        w = coeffs.engine_weights(args.count)
        header = ["k", "e", "f", "ratio", "e_decimal", "f_decimal"]
        rows, records = [], []
        for k in range(1, args.count + 1):
            e, f = w.e(k), w.f(k)
            ratio = f / e
            rows.append([k, format_fraction(e), format_fraction(f), format_fraction(ratio),
                         rat_to_decimal(e, d), rat_to_decimal(f, d)])
            records.append({"k": k, "e": format_fraction(e), "f": format_fraction(f),
                            "ratio": format_fraction(ratio),
                            "e_decimal": rat_to_decimal(e, d), "f_decimal": rat_to_decimal(f, d)})
        if args.format == "table":
            # ratios are integers; show them bare
            for row in rows:
                row[3] = row[3].removesuffix("/1")
        return EXIT_OK, _emit(args.format, header, rows, records)

    if args.family == "coth":
        table = coeffs.coth_coefficients(args.count)
        items = [(k, table[k]) for k in range(1, args.count + 1)]
    else:
        table = coeffs.tanh_coefficients(args.count + 1)
        items = [(k, table[k]) for k in range(1, args.count + 1)]
    family = table.family
    header = ["k", "family", "numerator", "denominator", "fraction", "decimal"]
    rows, records = [], []
    for k, v in items:
        rows.append([k, family, v.numerator, v.denominator, format_fraction(v), rat_to_decimal(v, d)])
        records.append({"k": k, "family": family, "numerator": str(v.numerator),
                        "denominator": str(v.denominator), "decimal": rat_to_decimal(v, d)})
    if args.format == "table":
        header = ["k", "fraction", "decimal"]
        rows = [[r[0], r[4], r[5]] for r in rows]
    return EXIT_OK, _emit(args.format, header, rows, records)


def _series_output(args, label: str, result: engine.SeriesResult) -> str:
    d = args.digits
    info = {"function": label, "n": args.n}
    info.update(result.to_dict(d))
    if args.format == "json":
        return _dump_json(info)
    if args.format == "csv":
        rows = [
            ["value", info["value_decimal"]],
            ["error_estimate", info["error_estimate_decimal"]],
            ["order_used", info["order_used"]],
            ["split", info["split"]],
            ["head", info["head_decimal"]],
        ]
        rows += [[f"tail:{c['label']}", c["decimal"]] for c in info["contributions"]]
        return _dump_csv(["quantity", "value"], rows)
    tail = result.tail
    lines = [
        f"{label}({args.n}), head k < {result.split}, tail order {tail.order_used}"
        + (" (capped)" if tail.capped else ""),
        f"value           {info['value_decimal']}",
        f"error estimate  {info['error_estimate_decimal']}",
        f"head            {info['head_decimal']}",
        f"tail sign       {'+' if result.tail_sign > 0 else '-'}",
        "tail contributions:",
    ]
    width = max(len(c["label"]) for c in info["contributions"])
    lines += [f"  {c['label'].ljust(width)}  {c['decimal']}" for c in info["contributions"]]
    return "\n".join(lines) + "\n"


def _series_kwargs(args) -> dict:
    return {"max_order": args.max_order}


def cmd_zeta(args) -> tuple[int, str]:
    result = engine.zeta_series(args.n, args.split, args.orders, **_series_kwargs(args))
    return EXIT_OK, _series_output(args, "zeta", result)


def cmd_eta(args) -> tuple[int, str]:
    result = engine.eta_series(args.n, args.split, args.orders, **_series_kwargs(args))
    return EXIT_OK, _series_output(args, "eta", result)


def cmd_sum(args) -> tuple[int, str]:
    if args.n < 1:
        raise DomainError("the exponent N must be >= 1")
    case = engine.ALTERNATING if args.alternating else engine.SAME_SIGN
    result = engine.evaluate_series(PowerTerm(args.n), args.split, case, args.orders,
                                    **_series_kwargs(args))
    label = "alternating_sum" if args.alternating else "sum"
    return EXIT_OK, _series_output(args, label, result)


def cmd_verify(args) -> tuple[int, str]:
    results = run_checks(args.depth)
    text = "".join(r.line() + "\n" for r in results)
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"verification failed: {failed[0].name}", file=sys.stderr)
        return EXIT_VERIFY_FAILED, text
    return EXIT_OK, text + f"all {len(results)} checks passed at depth {args.depth}\n"


COMMANDS = {
    "coeffs": cmd_coeffs,
    "sum": cmd_sum,
    "zeta": cmd_zeta,
    "eta": cmd_eta,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"eulersum: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
