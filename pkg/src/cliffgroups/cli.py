"""Command-line front end.

    cliffgroups mul e2 e1                        # -e12
    cliffgroups gen e1 e23 [--no-minus-one]       # closure listing
    cliffgroups classify --n 3 e1 e23 e123        # choir/band record
    cliffgroups iso e12 e13 -- e12 e13 e23        # the four relations
    cliffgroups enumerate --n 3 --max-gens 3 --format json
    cliffgroups tables --id 6

Exit status is 0 on success, 2 on usage errors and 1 when an internal
invariant check fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Sequence, TextIO

from . import tables
from .blade import BladeParseError, DimensionError, format_blade, mul, parse_blade
from .enumerator import CSV_COLUMNS, csv_row, enumerate_taxonomy
from .groupset import GeneratorList, generate_closure
from .taxonomy import InvariantError, check_record, classify, describe, relations

FORMATS = ("text", "csv", "json")
_NEG_LITERAL = re.compile(r"-e[0-9]+")
_REL_SYMBOLS = {"isomorphic": "≅", "similar": "≈", "equivalent": "≡", "equal": "="}


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, dim: bool = True) -> None:
    if dim:
        p.add_argument("--n", type=int, default=3, help="ambient dimension of Cl(n,0) (default 3)")
    p.add_argument("--format", choices=FORMATS, default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliffgroups", description="Clifford basis groups: choirs and bands")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mul", help="product of blade literals")
    p.add_argument("blades", nargs="+")
    _common(p)

    p = sub.add_parser("gen", help="group generated by blades")
    p.add_argument("generators", nargs="*")
    p.add_argument("--no-minus-one", action="store_true", help="do not adjoin -1")
    _common(p)

    p = sub.add_parser("classify", help="classify a generator presentation")
    p.add_argument("generators", nargs="*")
    p.add_argument("--no-minus-one", action="store_true")
    _common(p)

    p = sub.add_parser("iso", help="relations between two presentations: GENS -- GENS")
    p.add_argument("generators", nargs="*")
    _common(p)

    p = sub.add_parser("enumerate", help="enumerate similarity classes")
    p.add_argument("--max-gens", type=int, default=None, help="generator cap (default min(3, 2^n-1))")
    p.add_argument("--workers", type=int, default=1)
    _common(p)

    p = sub.add_parser("tables", help="reproduce the Cl(3,0) reference tables")
    p.add_argument("--id", type=int, default=None, help="table 1..10 (default: all)")
    _common(p, dim=False)
    return parser


def _protect(argv: Sequence[str]) -> list[str]:
    # argparse would read "-e12" as an option; a leading space keeps it positional
    return [" " + a if _NEG_LITERAL.fullmatch(a) else a for a in argv]


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def _gens(literals, n, adjoin=True) -> GeneratorList:
    try:
        return GeneratorList.parse(literals, n, adjoin)
    except BladeParseError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _cmd_mul(args) -> str:
    values = [parse_blade(t, args.n) for t in args.blades]
    out = values[0]
    for v in values[1:]:
        out = mul(out, v)
    lit = format_blade(out)
    if args.format == "json":
        return _dump(lit)
    if args.format == "csv":
        return _csv(["product"], [[lit]])
    return lit + "\n"


def _cmd_gen(args) -> str:
    closure = generate_closure(_gens(args.generators, args.n, not args.no_minus_one))
    if args.format == "json":
        return _dump(closure.literals())
    if args.format == "csv":
        return _csv(["element"], [[x] for x in closure.literals()])
    return str(closure) + "\n"


def _cmd_classify(args) -> str:
    rec = classify(_gens(args.generators, args.n, not args.no_minus_one))
    check_record(rec)
    if args.format == "json":
        return _dump(rec.to_dict())
    if args.format == "csv":
        return _csv(CSV_COLUMNS, [csv_row(rec)])
    return describe(rec) + "\n"


def _cmd_iso(args, right: list[str] | None) -> str:
    if right is None:
        raise UsageError("iso needs two generator lists separated by --")
    verdicts = relations(_gens(args.generators, args.n), _gens(right, args.n))
    if args.format == "json":
        return _dump(verdicts)
    if args.format == "csv":
        return _csv(list(verdicts), [[str(v).lower() for v in verdicts.values()]])
    return "".join(f"{_REL_SYMBOLS[k]} {k:<11}{str(v).lower()}\n" for k, v in verdicts.items())


def _cmd_enumerate(args) -> str:
    cap = args.max_gens if args.max_gens is not None else min(3, (1 << args.n) - 1)
    try:
        report = enumerate_taxonomy(args.n, cap, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for rec in report.classes:
        check_record(rec)
    if args.format == "json":
        return _dump(report.to_dict())
    if args.format == "csv":
        return report.to_csv()
    total, choirs, bands = report.counts
    lines = [f"Cl({report.n},0), at most {report.max_gens} generators: "
             f"{total} classes, {choirs} choirs, {bands} bands", ""]
    lines += _class_table(report)
    lines.append("")
    for i, b in enumerate(report.modes):
        lines.append(f"mode {i} (cantor {b.leader.pattern}): " + "; ".join(r.pattern for r in b.members))
    for b in report.rhythms:
        lines.append(f"rhythm of {b.leader.pattern}: " + "; ".join(r.pattern for r in b.members))
    lines.append(f"{len(report.isomorphism_classes)} presentation-isomorphism classes:")
    lines += ["  " + "; ".join(c) for c in report.isomorphism_classes]
    lines += ["# " + n for n in report.notes]
    return "\n".join(lines) + "\n"


def _class_table(report) -> list[str]:
    rows = [[str(c) for c in csv_row(r)] for r in report.classes]
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(CSV_COLUMNS)]
    fmt = lambda vals: "  ".join(v.ljust(w) for v, w in zip(vals, widths)).rstrip()
    return [fmt(CSV_COLUMNS), fmt(["-" * w for w in widths])] + [fmt(r) for r in rows]


def _cmd_tables(args) -> str:
    report = enumerate_taxonomy(3, 3)
    ids = [args.id] if args.id is not None else list(range(1, 11))
    try:
        render = {"text": tables.render_text, "csv": tables.render_csv, "json": tables.render_json}[args.format]
        return "\n".join(render(report, i) for i in ids)
    except tables.TableError as exc:
        raise UsageError(str(exc)) from exc


def run(argv: Sequence[str], out: TextIO) -> int:
    argv = list(argv)
    right = None
    if "--" in argv:
        cut = argv.index("--")
        argv, right = argv[:cut], argv[cut + 1:]
    parser = build_parser()
    try:
        args = parser.parse_args(_protect(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    if right is not None and args.command != "iso":
        parser.print_usage(sys.stderr)
        print(f"cliffgroups: error: unexpected arguments after --: {' '.join(right)}", file=sys.stderr)
        return 2
    try:
        if args.command == "iso":
            text = _cmd_iso(args, right)
        else:
            text = {
                "mul": _cmd_mul,
                "gen": _cmd_gen,
                "classify": _cmd_classify,
                "enumerate": _cmd_enumerate,
                "tables": _cmd_tables,
            }[args.command](args)
    except (BladeParseError, DimensionError, UsageError) as exc:
        print(f"cliffgroups: error: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"cliffgroups: invariant violated: {exc}", file=sys.stderr)
        return 1
    out.write(text)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    return run(sys.argv[1:] if argv is None else argv, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
