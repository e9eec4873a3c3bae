"""Recompute the published tables from the bundled fixtures and diff them.

    python scripts/reproduce_tables.py [--out results/]
"""

from __future__ import annotations

import argparse
import csv
from dataclasses import dataclass, field
from pathlib import Path

from i3type import load_fixture
from i3type.core import indicator_row
from i3type.ingest import fixture_path
from i3type.report import cell_text, indicators_output
from i3type.stats import correlation_matrix, rank_entities


@dataclass(frozen=True)
class GridConfig:
    name: str
    vectors: str
    printed: str
    anchor: str
    rows: tuple[str, ...] = ("X1", "X2", "X3", "I3X")
    cols: tuple[str, ...] = ("Y1", "Y2", "Y3", "I3Y")


@dataclass(frozen=True)
class Config:
    grids: tuple[GridConfig, ...] = field(default_factory=lambda: (
        GridConfig("universities 2011-2015", "universities_2011_2015.csv",
                   "universities_2011_2015_spearman_printed.csv", "h"),
        GridConfig("universities 2011-2015 (verbatim rows)", "universities_2011_2015_verbatim.csv",
                   "universities_2011_2015_spearman_printed.csv", "h"),
        GridConfig("EC journals 2011-2015", "ec_journals_2011_2015.csv",
                   "ec_journals_spearman_printed.csv", "JIF"),
    ))
    tolerance: float = 0.01


def printed_grid(name: str) -> dict:
    with open(fixture_path(name), encoding="utf-8") as f:
        return {(r["row"], r["col"]): r for r in csv.DictReader(l for l in f if not l.startswith("#"))}


def grid_report(g: GridConfig, tol: float) -> tuple[str, int, int]:
    rows = load_fixture(g.vectors).indicator_rows()
    rv, cv = [g.anchor, *g.rows], [g.anchor, *g.cols]
    m = correlation_matrix(rows, rv, cv)
    want = printed_grid(g.printed)
    lines = [f"== {g.name} (n={len(rows)})", "cell".ljust(12) + "computed".ljust(18) + "printed".ljust(10) + "diff"]
    hits = 0
    for r in rv:
        for c in cv:
            cell, w = m.cell(r, c), want[(r, c)]
            d = cell.rho - float(w["rho"])
            hits += abs(d) <= tol
            flag = "" if abs(d) <= tol else "  <-- off"
            shown = "1" if r == c else cell_text(cell.rho, cell.p_value, cell.stars)
            lines.append(f"{r + '/' + c:<12}{shown:<18}{w['rho']:<10}{d:+.3f}{flag}")
    return "\n".join(lines) + "\n", hits, len(rv) * len(cv)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, help="also write each report to this directory")
    args = ap.parse_args(argv)
    cfg = Config()

    sections = []
    scholars = [indicator_row(s) for s in load_fixture("scholars_summary.csv").entities]
    sections.append(("scholars.txt", "== scholar vectors\n" + indicators_output(scholars, "table", 7)))
    for g in cfg.grids:
        text, hits, total = grid_report(g, cfg.tolerance)
        sections.append((g.vectors.replace(".csv", "_spearman.txt"), text + f"{hits}/{total} within {cfg.tolerance}\n"))
    for period in ("2009_2013", "2011_2015"):
        ranked = rank_entities(load_fixture(f"universities_{period}.csv").indicator_rows(), "Y1")
        body = "\n".join(f"{i:>2}  {r.entity_id:<22} h={r.h:<4} Y1={r.Y1:.2f}" for i, r in enumerate(ranked, 1))
        sections.append((f"ranking_{period}.txt", f"== Y1 ranking {period}\n{body}\n"))

    for name, text in sections:
        print(text)
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / name).write_text(text, encoding="utf-8")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
