"""Command-line entry point.

Exit codes: 0 success, 2 usage error, 3 MIS node budget exhausted,
4 discrepancy between exact values and the closed form.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import serialize
from .bounds import report
from .construction import build_l_arrangement
from .grid_core import GridSpec, validate
from .oracle import DEFAULT_BUDGET, cross_validate, exact_mis, exact_per_line
from .render import RenderStyle, render_ascii, render_svg

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_DISCREPANCY = 4

BUILD_MAX_N = 10_000
MIS_MAX_CANDIDATES = 100

SWEEP_HEADER = ["n", "l", "lower", "upper", "closed", "exact", "divisible", "agrees"]


@dataclass(frozen=True)
class SweepRow:
    n: int
    l: int
    lower_construction: int
    upper_path_sum: int
    closed_form: Optional[int]
    exact: Optional[int]
    divisible: bool

    @property
    def agrees(self) -> bool:
        values = [self.lower_construction, self.upper_path_sum, self.closed_form, self.exact]
        present = {v for v in values if v is not None}
        return len(present) == 1

    def cells(self) -> list[str]:
        def opt(v):
            return "" if v is None else str(v)

        return [
            str(self.n),
            str(self.l),
            str(self.lower_construction),
            str(self.upper_path_sum),
            opt(self.closed_form),
            opt(self.exact),
            "true" if self.divisible else "false",
            "true" if self.agrees else "false",
        ]


def sweep_rows(l_max: int, n_max: int) -> list[SweepRow]:
    """One row per (n, l) with l <= n, ordered by l then n; exact values from the per-line DP."""
    rows = []
    for l in range(1, l_max + 1):
        for n in range(l, n_max + 1):
            r = report(n, l)
            exact = exact_per_line(GridSpec(n, l)).value
            rows.append(SweepRow(n, l, r.lower_construction, r.upper_path_sum, r.closed_form, exact, r.divisible))
    return rows


def _int_at_least(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"expected an integer >= {minimum}, got {value}")
        return value

    return parse


_positive = _int_at_least(1)
_non_negative = _int_at_least(0)


def _grid(parser: argparse.ArgumentParser, args) -> GridSpec:
    if args.l > args.n:
        parser.error(f"--l ({args.l}) must not exceed --n ({args.n})")
    return GridSpec(args.n, args.l)


def _emit(text: str, output: Optional[str]) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def cmd_build(parser, args) -> int:
    grid = _grid(parser, args)
    if grid.n > BUILD_MAX_N:
        parser.error(f"--n must be at most {BUILD_MAX_N} for build")
    result = build_l_arrangement(grid)
    arrangement = result.arrangement
    verdict = validate(arrangement)
    if args.format == "json":
        text = serialize.dumps(arrangement, verdict)
    elif not verdict.ok:
        text = ""
    elif args.format == "ascii":
        text = render_ascii(arrangement)
    else:
        text = render_svg(arrangement, RenderStyle(cell_px=args.cell_px, show_anchors=args.show_anchors))
    _emit(text, args.output)
    if args.format != "json" or args.output not in (None, "-"):
        status = "valid" if verdict.ok else f"INVALID ({len(verdict.conflicts)} conflicts)"
        print(f"n={grid.n} l={grid.l} count={result.count} {status}", file=sys.stderr)
    return EXIT_OK if verdict.ok else 1


def cmd_bounds(parser, args) -> int:
    grid = _grid(parser, args)
    print(json.dumps(report(grid.n, grid.l).as_dict()))
    return EXIT_OK


def _mis_allowed(parser, grid: GridSpec, force: bool) -> None:
    candidates = (grid.n - grid.l + 1) ** 2
    if candidates > MIS_MAX_CANDIDATES and not force:
        parser.error(
            f"{candidates} candidate diagonals exceeds {MIS_MAX_CANDIDATES} for MIS; pass --force to try anyway"
        )


def cmd_exact(parser, args) -> int:
    grid = _grid(parser, args)
    if args.method == "mis":
        _mis_allowed(parser, grid, args.force)
        result = exact_mis(grid, budget=args.budget)
    else:
        result = exact_per_line(grid)
    doc = {
        "n": grid.n,
        "l": grid.l,
        "method": result.method,
        "value": result.value,
        "optimal": result.optimal,
        "nodes": result.nodes,
        "witness": [{"x": d.x, "y": d.y} for d in result.witness.diagonals],
    }
    print(json.dumps(doc))
    return EXIT_OK if result.optimal else EXIT_BUDGET


def cmd_sweep(parser, args) -> int:
    rows = sweep_rows(args.l_max, args.n_max)
    try:
        if args.csv == "-":
            handle = sys.stdout
            close = False
        else:
            handle = open(args.csv, "w", newline="", encoding="utf-8")
            close = True
    except OSError as exc:
        print(f"cannot write {args.csv}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(SWEEP_HEADER)
        for row in rows:
            writer.writerow(row.cells())
    finally:
        if close:
            handle.close()
    if args.csv != "-":
        disagree = sum(not r.agrees for r in rows)
        print(f"wrote {len(rows)} rows to {args.csv} ({disagree} without full agreement)")
    return EXIT_OK


def cmd_verify(parser, args) -> int:
    grid = _grid(parser, args)
    _mis_allowed(parser, grid, args.force)
    cv = cross_validate(grid, budget=args.budget)
    closed = "-" if cv.closed_form is None else str(cv.closed_form)
    print(f"n={cv.n} l={cv.l} divisible={'yes' if cv.divisible else 'no'}")
    print(f"  mis           {cv.mis}{'' if cv.mis_optimal else ' (budget exhausted)'}")
    print(f"  per_line      {cv.per_line}")
    print(f"  upper         {cv.upper}")
    print(f"  construction  {cv.construction}")
    print(f"  closed_form   {closed}")
    if not cv.mis_optimal:
        print("verdict: BUDGET")
        return EXIT_BUDGET
    if cv.ok:
        print("verdict: OK")
        return EXIT_OK
    record = json.dumps(cv.as_dict(), sort_keys=True)
    print("verdict: DISCREPANCY")
    print(record)
    with open(args.log, "a", encoding="utf-8") as fh:
        fh.write(record + "\n")
    return EXIT_DISCREPANCY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagpack",
        description="Packings of non-intersecting positive diagonals in n x n lattice arrays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def grid_args(p):
        p.add_argument("--n", type=_positive, required=True, help="array side")
        p.add_argument("--l", type=_positive, required=True, help="diagonal length")

    p = sub.add_parser("build", help="nested-L construction")
    grid_args(p)
    p.add_argument("--format", choices=["json", "ascii", "svg"], default="json")
    p.add_argument("--output", "-o", help="write here instead of stdout")
    p.add_argument("--cell-px", type=int, default=40)
    p.add_argument("--show-anchors", action="store_true")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("bounds", help="construction count, floor-sum bound, closed form")
    grid_args(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("exact", help="exact maximum by per-line DP or MIS search")
    grid_args(p)
    p.add_argument("--method", choices=["lines", "mis"], default="lines")
    p.add_argument("--budget", type=_non_negative, default=DEFAULT_BUDGET, help="MIS node limit")
    p.add_argument("--force", action="store_true", help="allow MIS on large instances")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("sweep", help="CSV table over a range of (n, l)")
    p.add_argument("--l-max", type=_positive, required=True)
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--csv", required=True, help="output path, or - for stdout")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="cross-check every route on one instance")
    grid_args(p)
    p.add_argument("--budget", type=_non_negative, default=DEFAULT_BUDGET)
    p.add_argument("--force", action="store_true")
    p.add_argument("--log", default="discrepancies.jsonl", help="appended to on discrepancy")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cell_px", 40) < 8:
        parser.error("--cell-px must be at least 8")
    return args.func(parser, args)


if __name__ == "__main__":
    sys.exit(main())
