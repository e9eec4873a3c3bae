"""Command-line front end.

Exit codes: 0 success, 1 I/O error, 2 validation error, 3 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import charts, report
from .core import IndicatorRow, ValidationError
from .dominance import (
    DEFAULT_INDICATORS,
    HIGHER,
    LOWER,
    IndicatorMatrix,
    Orientation,
    compare_tensor,
    verdict_from,
)
from .ingest import MODES, RECORDS, Dataset, load
from .stats import correlation_matrix, rank_entities

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_USAGE = 0, 1, 2, 3
CHART_KINDS = ("rank-distribution", "indicator-bars", "i3-lines")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _names(text: str) -> list[str]:
    return [s.strip() for s in text.split(",") if s.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--input", "-i", action="append", required=True, metavar="PATH",
                        help="input file; repeat to combine files (compare: one file per slice)")
    common.add_argument("--mode", choices=MODES, help="input schema (default: inferred from the header)")
    common.add_argument("--format", "-f", choices=report.FORMATS, default=report.TABLE)
    common.add_argument("--output", "-o", metavar="PATH", help="write here instead of stdout")
    common.add_argument("--precision", type=int, default=report.DEFAULT_PRECISION, metavar="N",
                        help="significant digits in table/csv output (default: %(default)s)")
    common.add_argument("--full-precision", action="store_true", help="print floats at full precision")
    common.add_argument("--skip-invalid", action="store_true",
                        help="drop summary rows that violate invariants instead of failing")

    p = _Parser(prog="i3type", description="h-based I3-type multivariate indicators")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("compute", parents=[common], help="per-entity X, Y, I3X, I3Y, e-index and Yh")

    c = sub.add_parser("correlate", parents=[common], help="Spearman correlation grid")
    c.add_argument("--anchor", default="h", help="anchor indicator, e.g. h or JIF (default: %(default)s)")
    c.add_argument("--rows", type=_names, help="row indicators (default: anchor,X1,X2,X3,I3X)")
    c.add_argument("--cols", type=_names, help="column indicators (default: anchor,Y1,Y2,Y3,I3Y)")

    m = sub.add_parser("compare", parents=[common], help="dominance verdict between two entities")
    m.add_argument("--a", required=True, metavar="ID")
    m.add_argument("--b", required=True, metavar="ID")
    m.add_argument("--indicators", type=_names,
                   help=f"indicators to compare (default: those of {','.join(DEFAULT_INDICATORS)} both entities have)")
    m.add_argument("--epsilon", type=float, default=0.0, help="differences within this are ties")
    m.add_argument("--orient", action="append", default=[], metavar="NAME=higher|lower")

    r = sub.add_parser("rank", parents=[common], help="order entities by one indicator")
    r.add_argument("--by", required=True, metavar="NAME")
    r.add_argument("--ascending", action="store_true")

    ch = sub.add_parser("chart", parents=[common], help="write an SVG chart")
    ch.add_argument("--kind", choices=CHART_KINDS, required=True)
    ch.add_argument("--indicator", default="Y1", help="indicator for indicator-bars (default: %(default)s)")
    ch.add_argument("--entity", action="append", metavar="ID", help="restrict to these entities")
    return p


def _load_all(args) -> list[Dataset]:
    sets = [load(path, args.mode, args.skip_invalid) for path in args.input]
    for d in sets:
        for w in d.warnings:
            print(f"i3type: warning: {d.source}: {w}", file=sys.stderr)
    return sets


def _merged_rows(sets: Sequence[Dataset]) -> list[IndicatorRow]:
    rows, seen = [], set()
    for d in sets:
        for r in d.indicator_rows():
            if r.entity_id in seen:
                raise ValidationError(f"entity {r.entity_id!r} appears in more than one input", "unique entity_id")
            seen.add(r.entity_id)
            rows.append(r)
    return rows


def _orientation(specs: Sequence[str]) -> Orientation:
    o = Orientation()
    for spec in specs:
        name, sep, direction = spec.partition("=")
        if not sep or direction not in (HIGHER, LOWER) or not name:
            raise UsageError(f"--orient expects NAME=higher|lower, got {spec!r}")
        o = o.with_override(name.strip(), direction)
    return o


def _pick(rows: Sequence[IndicatorRow], entity_id: str, source: str) -> IndicatorRow:
    for r in rows:
        if r.entity_id == entity_id:
            return r
    raise ValidationError(f"unknown entity {entity_id!r} in {source}", "entity present")


def cmd_compute(args) -> str:
    rows = _merged_rows(_load_all(args))
    return report.indicators_output(rows, args.format, args.precision)


def cmd_correlate(args) -> str:
    rows = _merged_rows(_load_all(args))
    anchor = args.anchor
    if rows and not all(r.has(anchor) for r in rows):
        raise ValidationError(f"anchor column {anchor!r} missing", "anchor present")
    row_vars = args.rows or [anchor, "X1", "X2", "X3", "I3X"]
    col_vars = args.cols or [anchor, "Y1", "Y2", "Y3", "I3Y"]
    return report.correlation_output(correlation_matrix(rows, row_vars, col_vars), args.format)


def cmd_compare(args) -> str:
    orient = _orientation(args.orient)
    sets = _load_all(args)
    slices = []
    for d in sets:
        rows = d.indicator_rows()
        axis = Path(d.source).stem if len(sets) > 1 else None
        slices.append((_pick(rows, args.a, d.source), _pick(rows, args.b, d.source), axis))
    indicators = args.indicators
    if not indicators:
        indicators = [n for n in DEFAULT_INDICATORS if all(a.has(n) and b.has(n) for a, b, _ in slices)]
    A = [IndicatorMatrix.from_row(a, indicators, axis) for a, _, axis in slices]
    B = [IndicatorMatrix.from_row(b, indicators, axis) for _, b, axis in slices]
    elements = compare_tensor(A, B, orient, args.epsilon)
    return report.comparison_output(args.a, args.b, verdict_from(elements), elements, args.format,
                                    args.precision, args.epsilon)


def cmd_rank(args) -> str:
    rows = _merged_rows(_load_all(args))
    ordered = rank_entities(rows, args.by, descending=not args.ascending)
    return report.ranking_output(ordered, args.by, args.format, args.precision)


def cmd_chart(args) -> str:
    sets = _load_all(args)
    if args.kind == "rank-distribution":
        if any(d.mode != RECORDS for d in sets):
            raise UsageError("rank-distribution needs records-mode input")
        profiles = [p for d in sets for p in d.entities]
        if args.entity:
            profiles = [_pick(profiles, e, "input") for e in args.entity]
        return charts.rank_distribution(profiles)
    rows = _merged_rows(sets)
    if args.entity:
        rows = [_pick(rows, e, "input") for e in args.entity]
    if args.kind == "indicator-bars":
        return charts.indicator_bars(rows, args.indicator)
    return charts.i3_lines(rows)


COMMANDS = {
    "compute": cmd_compute,
    "correlate": cmd_correlate,
    "compare": cmd_compare,
    "rank": cmd_rank,
    "chart": cmd_chart,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    if args.full_precision:
        args.precision = None
    elif args.precision < 1:
        print("i3type: --precision must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        text = COMMANDS[args.command](args)
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    except UsageError as e:
        print(f"i3type: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as e:
        print(f"i3type: invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f"i3type: {e}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
