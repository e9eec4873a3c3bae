"""Text, CSV and JSON rendering of indicator rows, correlation grids and verdicts."""

from __future__ import annotations

import csv
import io
import json
from typing import Optional, Sequence

from .core import INDICATOR_COLUMNS, IndicatorRow
from .dominance import ElementComparison, Verdict
from .ingest import _meta_keys
from .stats import CorrelationMatrix

DEFAULT_PRECISION = 6
TABLE, CSV, JSON = "table", "csv", "json"
FORMATS = (TABLE, CSV, JSON)


def fmt(value, precision: Optional[int] = DEFAULT_PRECISION) -> str:
    """Significant-digit formatting; ``precision=None`` keeps full repr."""
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    if precision is None:
        return repr(float(value))
    return f"{value:.{precision}g}"


def _decimal3(v: float) -> str:
    s = f"{v:.3f}"
    return s.replace("0.", ".", 1) if s.lstrip("-").startswith("0.") else s


def cell_text(rho: float, p: float, stars: str) -> str:
    """Correlation cell in the ``.958(.000)*`` style."""
    return f"{_decimal3(rho)}({_decimal3(p)}){stars}"


def render_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in header]
    for r in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, r)]

    def line(cells):
        return "  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(cells, widths))).rstrip()

    out = [line(header), line(["-" * w for w in widths])]
    out.extend(line(r) for r in rows)
    return "\n".join(out) + "\n"


def render_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def indicators_output(rows: Sequence[IndicatorRow], form: str, precision: Optional[int] = DEFAULT_PRECISION) -> str:
    meta = _meta_keys(rows)
    header = ["entity_id", *INDICATOR_COLUMNS, *meta]
    if form == JSON:
        return json.dumps([r.as_dict() for r in rows], indent=2) + "\n"
    body = [
        [r.entity_id]
        + [fmt(getattr(r, c), precision) for c in INDICATOR_COLUMNS]
        + [fmt(r.metadata.get(k), precision) for k in meta]
        for r in rows
    ]
    return render_csv(header, body) if form == CSV else render_table(header, body)


def correlation_output(m: CorrelationMatrix, form: str) -> str:
    if form == JSON:
        doc = {
            "row_labels": list(m.row_labels),
            "col_labels": list(m.col_labels),
            "cells": [
                {"row": r, "col": c, "rho": cell.rho, "p_value": cell.p_value, "n": cell.n,
                 "significance": cell.significance}
                for r, cells in zip(m.row_labels, m.cells) for c, cell in zip(m.col_labels, cells)
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    if form == CSV:
        body = [
            [r, c, repr(cell.rho), repr(cell.p_value), f"{cell.p_value:.3f}", cell.significance, cell.n]
            for r, cells in zip(m.row_labels, m.cells) for c, cell in zip(m.col_labels, cells)
        ]
        return render_csv(["row", "col", "rho", "p_value", "p_3dp", "significance", "n"], body)
    body = [[r] + [cell_text(c.rho, c.p_value, c.stars) for c in cells] for r, cells in zip(m.row_labels, m.cells)]
    n = m.cells[0][0].n if m.cells and m.cells[0] else 0
    return (
        f"Spearman rho (two-tailed p), n = {n}\n"
        + render_table([""] + list(m.col_labels), body)
        + "* significant at the 0.01 level; ** significant at the 0.05 level\n"
    )


def ranking_output(rows: Sequence[IndicatorRow], by: str, form: str, precision: Optional[int] = DEFAULT_PRECISION) -> str:
    if form == JSON:
        return json.dumps(
            [{"rank": i, "entity_id": r.entity_id, by: r.get(by)} for i, r in enumerate(rows, 1)], indent=2
        ) + "\n"
    body = [[str(i), r.entity_id, fmt(r.get(by), precision)] for i, r in enumerate(rows, 1)]
    return render_csv(["rank", "entity_id", by], body) if form == CSV else render_table(["rank", "entity_id", by], body)


def comparison_output(
    a: str, b: str, verdict: Verdict, elements: Sequence[ElementComparison], form: str,
    precision: Optional[int] = DEFAULT_PRECISION, epsilon: float = 0.0,
) -> str:
    if form == JSON:
        doc = {
            "a": a, "b": b, "verdict": verdict.value, "epsilon": epsilon,
            "elements": [
                {"axis": e.axis, "indicator": e.indicator, "orientation": e.orientation,
                 "a": e.a, "b": e.b, "outcome": e.outcome}
                for e in elements
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    header = ["axis", "indicator", "orientation", "a", "b", "outcome"]
    body = [[e.axis or "", e.indicator, e.orientation, fmt(e.a, precision), fmt(e.b, precision), e.outcome] for e in elements]
    if form == CSV:
        return f"# {a} vs {b}: {verdict.value}\n" + render_csv(header, body)
    return f"{a} vs {b}: {verdict.value}\n" + render_table(header, body)
