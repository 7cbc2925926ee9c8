"""Command-line entry point: enumerate, coeffs, verify, convert."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import series as S
from . import verify as V
from .enumeration import class_of, gen_involutions_avoiding_321
from .paths import (
    CrossingSequence,
    LatticePath,
    PathError,
    crossing_sequence,
    involution_from_labelled_motzkin,
    involution_from_sequence,
    labelled_motzkin_from_involution,
    motzkin_from_sequence,
    sequence_from_motzkin,
)
from .perm import Permutation, PermutationError, avoids_321, cycle_form, is_involution
from .svg import involution_svg, path_svg

CLASSES = ("all", "type12", "type21", "simple", "inflation")
FORMATS = ("text", "json", "csv")
TARGETS = ("dyck", "motzkin", "sequence", "involution", "svg")
DEFAULT_MAX_N = 16


class UsageError(Exception):
    pass


def _listing(n: int, klass: str) -> list[dict]:
    rows = []
    for p in gen_involutions_avoiding_321(n):
        kind = class_of(p)
        if klass != "all" and kind != klass:
            continue
        row = {"involution": str(p), "class": kind}
        if kind == "simple":
            row["sequence"] = str(crossing_sequence(p))
        rows.append(row)
    return rows


def cmd_enumerate(args) -> str:
    if not 1 <= args.n <= args.max_n:
        raise UsageError(f"n must be in 1..{args.max_n}, got {args.n}")
    rows = _listing(args.n, args.klass)
    if args.format == "json":
        return json.dumps({"n": args.n, "class": args.klass, "items": rows}, indent=2) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["involution", "class", "sequence"])
        for r in rows:
            w.writerow([r["involution"], r["class"], r.get("sequence", "")])
        return buf.getvalue()
    return "".join(
        f"{r['involution']} {r['sequence']}\n" if "sequence" in r else f"{r['involution']}\n" for r in rows
    )


def cmd_coeffs(args) -> str:
    if args.name not in S.NAMES:
        raise UsageError(f"unknown series {args.name!r}; choose from {', '.join(S.NAMES)}")
    if args.count < 1:
        raise UsageError(f"N must be at least 1, got {args.count}")
    ser = S.expand_named(args.name, args.count).truncate(args.count)
    if args.format == "json":
        return json.dumps({"name": args.name, "start": 1, "coefficients": json.loads(ser.to_json(start=1))}, indent=2) + "\n"
    if args.format == "csv":
        return ser.to_csv(start=1)
    return ",".join(str(c) for c in ser.integers()[1:]) + "\n"


def cmd_verify(args):
    report = V.run(args.suite, max_n=args.max_n, order=args.order, jobs=args.jobs,
                   command=f"verify --suite {args.suite} --max-n {args.max_n} --order {args.order}")
    return report


def _read_input(text: str):
    text = text.strip()
    if text.startswith("{"):
        return CrossingSequence.parse(text)
    if text and set(text.replace(":", "")) - set("UDH0123456789") == set() and text[0] in "UDH":
        return LatticePath.parse(text)
    return Permutation.parse(text)


def cmd_convert(args) -> str:
    obj = _read_input(args.input)
    to = args.to
    if isinstance(obj, CrossingSequence):
        p = involution_from_sequence(obj)
        path = motzkin_from_sequence(obj)
        if to == "sequence":
            return f"{obj}\n"
        if to == "motzkin":
            return f"{path}\n"
        if to == "dyck":
            return f"{labelled_motzkin_from_involution(p)}\n"
        if to == "involution":
            return f"{p}\n"
        return involution_svg(p)
    if isinstance(obj, LatticePath):
        if to == "svg":
            return path_svg(obj)
        if to in ("motzkin", "dyck"):
            if to == "dyck" and not obj.is_dyck:
                raise UsageError(f"{obj} is not a Dyck path")
            return f"{obj}\n"
        if to == "sequence":
            return f"{sequence_from_motzkin(obj)}\n"
        return f"{involution_from_labelled_motzkin(obj)}\n"
    p = obj
    if not is_involution(p):
        raise UsageError(f"{p} is not an involution")
    if to == "involution":
        return f"{p}\n"
    if to == "svg":
        return involution_svg(p)
    if to == "motzkin":
        return f"{labelled_motzkin_from_involution(p)}\n"
    if not avoids_321(p) or cycle_form(p).fixed_points:
        raise UsageError(f"{p} is not a fixed-point-free 321-avoiding involution")
    if to == "dyck":
        return f"{labelled_motzkin_from_involution(p)}\n"
    return f"{crossing_sequence(p)}\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="inv321", description="321-avoiding involutions: enumeration, series and bijections.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list I(321)_n lexicographically")
    p.add_argument("n", type=int)
    p.add_argument("--class", dest="klass", choices=CLASSES, default="all")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("coeffs", help="coefficients 1..N of a named generating function")
    p.add_argument("name", choices=S.NAMES)
    p.add_argument("count", type=int, metavar="N")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("verify", help="run the consistency checks")
    p.add_argument("--suite", choices=(*V.SUITES, "all"), default="all")
    p.add_argument("--max-n", type=int, default=14)
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--jobs", type=int, default=1, help="worker threads for independent checks")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="convert between involutions, paths and crossing sequences")
    p.add_argument("input")
    p.add_argument("--to", choices=TARGETS, required=True)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (UsageError, PermutationError, PathError, S.SeriesError) as exc:
        print(f"inv321 {args.command}: {exc}", file=sys.stderr)
        return 2
    if isinstance(out, V.RunReport):
        sys.stdout.write((out.to_json() if args.json else out.to_text()) + "\n")
        return out.exit_code
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
