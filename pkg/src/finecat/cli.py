"""Command-line front end: ``finecat seq|triangle|verify|oracle|bijection``.

Data goes to stdout, logging to stderr. Exit status 0 means success (or every
identity came out as registered), 1 a verification mismatch, 2 a usage error and
3 an exhaustive enumeration past its bound.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Callable, Dict, List, Optional

from . import closedforms, core, identities, oracle
from .levels import get_supported_levels, get_triangle_levels
from .validators import (
    ResourceBoundError,
    UnknownIdentityError,
    validate_level,
    validate_positive,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

FORMATS = ["table", "csv", "json", "bfile"]
METHODS = ["conv", "matrix", "closed"]
ORACLE_KINDS = list(oracle.COUNT_KINDS)
BIJECTION_MODES = ["list", "roundtrip"]

ARROW = "↔"

TRIANGLE_BUILDERS: Dict[str, Callable[[int, int], core.Triangle]] = {
    "conv": core.tower_triangle,
    "matrix": core.matrix_triangle,
    "closed": closedforms.closed_triangle,
}


# Rendering -----------------------------------------------------------------


def render_sequence(m: int, seq: core.Sequence, fmt: str) -> str:
    values = seq.values
    if fmt == "bfile":
        return "\n".join(f"{n} {value}" for n, value in enumerate(values, 1))
    if fmt == "csv":
        return "\n".join(["n,value"] + [f"{n},{value}" for n, value in enumerate(values, 1)])
    if fmt == "json":
        return json.dumps({"m": m, "values": [str(value) for value in values]})
    width = len(str(len(values)))
    lines = [f"{'n':>{width}}  f{m}(n)"]
    lines += [f"{n:>{width}}  {value}" for n, value in enumerate(values, 1)]
    return "\n".join(lines)


def render_triangle(m: int, triangle: core.Triangle, method: str, fmt: str) -> str:
    if fmt == "bfile":
        flat = [value for row in triangle.rows for value in row]
        return "\n".join(f"{index} {value}" for index, value in enumerate(flat, 1))
    if fmt == "csv":
        return "\n".join(",".join(str(value) for value in row) for row in triangle.rows)
    if fmt == "json":
        return json.dumps(
            {
                "m": m,
                "rows": [[str(value) for value in row] for row in triangle.rows],
                "method": method,
            }
        )
    return "\n".join(" ".join(str(value) for value in row) for row in triangle.rows)


def render_count(fields: Dict[str, Optional[int]], kind: str, count: int, fmt: str) -> str:
    present = {name: value for name, value in fields.items() if value is not None}
    if fmt == "json":
        return json.dumps({"kind": kind, **present, "count": str(count)})
    if fmt == "csv":
        header = ",".join(["kind", *present, "count"])
        row = ",".join([kind, *(str(value) for value in present.values()), str(count)])
        return f"{header}\n{row}"
    return str(count)


# Commands ------------------------------------------------------------------


def cmd_seq(args: argparse.Namespace) -> tuple[int, str]:
    m = validate_level(args.m, get_supported_levels())
    length = validate_positive(args.n, "--n")
    return EXIT_OK, render_sequence(m, core.tower_sequence(m, length), args.format)


def cmd_triangle(args: argparse.Namespace) -> tuple[int, str]:
    m = validate_level(args.m, get_triangle_levels())
    rows = validate_positive(args.rows, "--rows")
    triangle = TRIANGLE_BUILDERS[args.method](m, rows)
    return EXIT_OK, render_triangle(m, triangle, args.method, args.format)


def cmd_verify(args: argparse.Namespace) -> tuple[int, str]:
    max_n = validate_positive(args.max_n, "--max-n")
    registry = identities.REGISTRY
    records = registry.select(args.id) if args.id else list(registry)
    runner = identities.IdentityRunner(registry)
    reports = runner.run_records(records, max_n, workers=args.workers)

    if args.format == "json":
        text = identities.reports_to_json(reports)
    else:
        text = "\n".join(identities.report_lines(reports))
    status = EXIT_OK if identities.suite_ok(reports) else EXIT_MISMATCH
    return status, text


def cmd_oracle(args: argparse.Namespace) -> tuple[int, str]:
    count = oracle.count_kind(args.kind, args.n, args.k, args.m)
    fmt = "table" if args.format == "bfile" else args.format
    return EXIT_OK, render_count({"n": args.n, "k": args.k, "m": args.m}, args.kind, count, fmt)


def cmd_bijection(args: argparse.Namespace) -> tuple[int, str]:
    n = validate_positive(args.n, "--n")
    if args.mode == "roundtrip":
        result = oracle.check_bijection(n, args.k)
        if result.ok:
            return EXIT_OK, f"ok, {result.pairs} pairs"
        lines = result.failures + [
            f"failed, {len(result.failures)} of {result.pairs} pairs "
            f"({result.words} words)"
        ]
        return EXIT_MISMATCH, "\n".join(lines)

    columns = [args.k] if args.k is not None else list(range(1, n + 1))
    lines: List[str] = []
    for k in columns:
        for path, word in oracle.bijection_pairs(n, k):
            lines.append(f"{oracle.render_colored(path)} {ARROW} {word}")
    return EXIT_OK, "\n".join(lines)


COMMANDS: Dict[str, Callable[[argparse.Namespace], tuple[int, str]]] = {
    "seq": cmd_seq,
    "triangle": cmd_triangle,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "bijection": cmd_bijection,
}


# Parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finecat",
        description="Fine-Catalan invert-transform tower, colored-hill triangles and "
        "identity verification in exact arithmetic.",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Debug logging on stderr."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    seq = sub.add_parser("seq", help="Print f_m(1..N).")
    seq.add_argument("--m", type=int, required=True, help="Tower level 0..4.")
    seq.add_argument("--n", type=int, required=True, help="Number of terms.")
    seq.add_argument("--format", choices=FORMATS, default="table")

    triangle = sub.add_parser("triangle", help="Print rows of G_m.")
    triangle.add_argument("--m", type=int, required=True, help="Triangle level 1..4.")
    triangle.add_argument("--rows", type=int, required=True, help="Number of rows.")
    triangle.add_argument("--method", choices=METHODS, default="conv")
    triangle.add_argument("--format", choices=FORMATS, default="table")

    verify = sub.add_parser("verify", help="Check one identity family or all of them.")
    target = verify.add_mutually_exclusive_group()
    target.add_argument("--id", help="Identity id or family, e.g. I-exotic-8.")
    target.add_argument("--all", action="store_true", help="Every registered identity (default).")
    verify.add_argument("--max-n", type=int, default=20, dest="max_n")
    verify.add_argument("--workers", type=int, default=1, help="Threads used for records.")
    verify.add_argument("--format", choices=["table", "json"], default="table")

    oracle_cmd = sub.add_parser("oracle", help="Exhaustive counts.")
    oracle_cmd.add_argument("--kind", choices=ORACLE_KINDS, required=True)
    oracle_cmd.add_argument("--n", type=int, required=True)
    oracle_cmd.add_argument("--k", type=int)
    oracle_cmd.add_argument("--m", type=int)
    oracle_cmd.add_argument("--format", choices=FORMATS, default="table")

    bijection = sub.add_parser("bijection", help="Colored Dyck paths and ballot words.")
    bijection.add_argument("--n", type=int, required=True)
    bijection.add_argument("--k", type=int)
    bijection.add_argument("--mode", choices=BIJECTION_MODES, default="list")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        status, text = COMMANDS[args.command](args)
    except ResourceBoundError as e:
        print(f"finecat: resource bound: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, UnknownIdentityError) as e:
        print(f"finecat: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if text:
        sys.stdout.write(text + "\n")
    logger.debug(f"{args.command} finished with status {status}")
    return status


if __name__ == "__main__":
    sys.exit(main())
