"""Static SVG charts: rank distributions, per-entity bars, I3X/I3Y lines.

Output is plain SVG with no external references. Data-bearing elements carry
``class`` and ``data-*`` attributes so the files can be checked mechanically.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from typing import Sequence

from .core import CitationProfile, IndicatorRow, ValidationError, compute_h

WIDTH, HEIGHT = 720, 420
LEFT, RIGHT, TOP, BOTTOM = 70, 70, 40, 110
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b")


def _num(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    if hi <= lo:
        hi = lo + 1
    raw = (hi - lo) / n
    mag = 10 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    start = math.floor(lo / step) * step
    out, t = [], start
    while t <= hi + 1e-9 * step:
        out.append(round(t, 10))
        t += step
    return out


class _Canvas:
    def __init__(self, title: str, xlabel: str, ylabel: str, ymax: float, xmax: float):
        self.svg = ET.Element(
            "svg", xmlns="http://www.w3.org/2000/svg", width=str(WIDTH), height=str(HEIGHT),
            viewBox=f"0 0 {WIDTH} {HEIGHT}", **{"font-family": "sans-serif", "font-size": "11"},
        )
        ET.SubElement(self.svg, "rect", width=str(WIDTH), height=str(HEIGHT), fill="white")
        t = ET.SubElement(self.svg, "text", x=str(WIDTH / 2), y="22", **{"text-anchor": "middle", "font-size": "14"})
        t.text = title
        self.pw, self.ph = WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM
        self.xmax = xmax
        self.yticks = _ticks(0, ymax)
        self.ymax = self.yticks[-1]
        self._axes(xlabel, ylabel)

    def x(self, v: float) -> float:
        return LEFT + self.pw * v / self.xmax

    def y(self, v: float, ymax: float = None) -> float:
        return TOP + self.ph * (1 - v / (ymax or self.ymax))

    def _axes(self, xlabel: str, ylabel: str):
        g = ET.SubElement(self.svg, "g", {"class": "axes", "stroke": "black"})
        ET.SubElement(g, "line", x1=str(LEFT), y1=str(TOP + self.ph), x2=str(LEFT + self.pw), y2=str(TOP + self.ph))
        ET.SubElement(g, "line", x1=str(LEFT), y1=str(TOP), x2=str(LEFT), y2=str(TOP + self.ph))
        for tv in self.yticks:
            ty = _num(self.y(tv))
            ET.SubElement(g, "line", x1=str(LEFT - 4), y1=ty, x2=str(LEFT), y2=ty)
            lab = ET.SubElement(self.svg, "text", {"class": "ytick", "x": str(LEFT - 6), "y": ty, "text-anchor": "end", "dominant-baseline": "middle"})
            lab.text = f"{tv:g}"
        xl = ET.SubElement(self.svg, "text", x=str(LEFT + self.pw / 2), y=str(HEIGHT - 8), **{"text-anchor": "middle"})
        xl.text = xlabel
        yl = ET.SubElement(
            self.svg, "text", x="14", y=str(TOP + self.ph / 2),
            transform=f"rotate(-90 14 {TOP + self.ph / 2})", **{"text-anchor": "middle"},
        )
        yl.text = ylabel

    def right_axis(self, ymax: float, label: str) -> float:
        ticks = _ticks(0, ymax)
        top = ticks[-1]
        g = ET.SubElement(self.svg, "g", {"class": "axes-right", "stroke": "black"})
        xr = LEFT + self.pw
        ET.SubElement(g, "line", x1=str(xr), y1=str(TOP), x2=str(xr), y2=str(TOP + self.ph))
        for tv in ticks:
            ty = _num(self.y(tv, top))
            ET.SubElement(g, "line", x1=str(xr), y1=ty, x2=str(xr + 4), y2=ty)
            lab = ET.SubElement(self.svg, "text", {"class": "ytick-right", "x": str(xr + 6), "y": ty, "dominant-baseline": "middle"})
            lab.text = f"{tv:g}"
        yl = ET.SubElement(
            self.svg, "text", x=str(WIDTH - 10), y=str(TOP + self.ph / 2),
            transform=f"rotate(90 {WIDTH - 10} {TOP + self.ph / 2})", **{"text-anchor": "middle"},
        )
        yl.text = label
        return top

    def category_labels(self, names: Sequence[str], positions: Sequence[float]):
        for name, px in zip(names, positions):
            ty = TOP + self.ph + 8
            lab = ET.SubElement(
                self.svg, "text", {"class": "xtick", "x": _num(px), "y": str(ty), "text-anchor": "end",
                                   "transform": f"rotate(-60 {_num(px)} {ty})"},
            )
            lab.text = name

    def legend(self, entries: Sequence[tuple[str, str]]):
        for i, (name, colour) in enumerate(entries):
            y = TOP + 6 + 16 * i
            ET.SubElement(self.svg, "rect", x=str(LEFT + 10), y=str(y), width="10", height="10", fill=colour)
            t = ET.SubElement(self.svg, "text", {"class": "legend", "x": str(LEFT + 26), "y": str(y + 9)})
            t.text = name

    def tostring(self) -> str:
        ET.indent(self.svg)
        return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(self.svg, encoding="unicode") + "\n"


def rank_distribution(profiles: Sequence[CitationProfile]) -> str:
    """Citations against descending rank, one series per profile, with the h square marked."""
    if not profiles:
        raise ValidationError("no entities to plot", "non-empty input")
    for p in profiles:
        if not p.citations:
            raise ValidationError(f"entity {p.entity_id} has no publications", "non-empty entity")
    ranked = [sorted(p.citations, reverse=True) for p in profiles]
    xmax = max(len(r) for r in ranked) + 1
    ymax = max(max(r) for r in ranked) or 1
    cv = _Canvas("Citations by publication rank", "publication rank", "citations", ymax, xmax)
    entries = []
    for k, (p, r) in enumerate(zip(profiles, ranked)):
        colour = PALETTE[k % len(PALETTE)]
        h = compute_h(r)
        g = ET.SubElement(cv.svg, "g", {"class": "series", "data-entity": p.entity_id, "data-h": str(h)})
        pts = " ".join(f"{_num(cv.x(i))},{_num(cv.y(c))}" for i, c in enumerate(r, 1))
        ET.SubElement(g, "polyline", points=pts, fill="none", stroke=colour)
        for i, c in enumerate(r, 1):
            ET.SubElement(
                g, "circle", {"class": "point", "cx": _num(cv.x(i)), "cy": _num(cv.y(c)), "r": "2.5",
                              "fill": colour, "data-rank": str(i), "data-citations": str(c)},
            )
        # h square: ranks 0..h by citations 0..h
        ET.SubElement(
            g, "rect", {"class": "h-square", "x": _num(cv.x(0)), "y": _num(cv.y(h)),
                        "width": _num(cv.x(h) - cv.x(0)), "height": _num(cv.y(0) - cv.y(h)),
                        "fill": "none", "stroke": colour, "stroke-dasharray": "2 2"},
        )
        ET.SubElement(
            g, "line", {"class": "h-boundary", "data-rank": str(h), "x1": _num(cv.x(h)), "x2": _num(cv.x(h)),
                        "y1": str(TOP), "y2": str(TOP + cv.ph), "stroke": colour, "stroke-dasharray": "5 3"},
        )
        entries.append((f"{p.entity_id} (h={h})", colour))
    cv.legend(entries)
    return cv.tostring()


def indicator_bars(rows: Sequence[IndicatorRow], indicator: str) -> str:
    if not rows:
        raise ValidationError("no entities to plot", "non-empty input")
    try:
        values = [float(r.get(indicator)) for r in rows]
    except KeyError:
        raise ValidationError(f"indicator {indicator} missing", "indicator present") from None
    n = len(rows)
    cv = _Canvas(indicator, "", indicator, max(values) or 1, n)
    slot = cv.pw / n
    g = ET.SubElement(cv.svg, "g", {"class": "bars", "data-indicator": indicator})
    centres = []
    for i, (r, v) in enumerate(zip(rows, values)):
        x0 = LEFT + slot * i + slot * 0.15
        centres.append(x0 + slot * 0.35)
        ET.SubElement(
            g, "rect", {"class": "bar", "x": _num(x0), "y": _num(cv.y(v)), "width": _num(slot * 0.7),
                        "height": _num(cv.y(0) - cv.y(v)), "fill": PALETTE[0],
                        "data-entity": r.entity_id, "data-value": repr(v)},
        )
    cv.category_labels([r.entity_id for r in rows], centres)
    return cv.tostring()


def i3_lines(rows: Sequence[IndicatorRow]) -> str:
    """I3X (left axis) and I3Y (right axis) per entity."""
    if not rows:
        raise ValidationError("no entities to plot", "non-empty input")
    n = len(rows)
    xs = [r.I3X for r in rows]
    ys = [r.I3Y for r in rows]
    cv = _Canvas("I3X and I3Y", "", "I3X", max(xs) or 1, n)
    ytop = cv.right_axis(max(ys) or 1, "I3Y")
    slot = cv.pw / n
    centres = [LEFT + slot * (i + 0.5) for i in range(n)]
    for name, vals, top, colour in (("I3X", xs, cv.ymax, PALETTE[0]), ("I3Y", ys, ytop, PALETTE[1])):
        g = ET.SubElement(cv.svg, "g", {"class": "series", "data-series": name})
        pts = " ".join(f"{_num(cx)},{_num(cv.y(v, top))}" for cx, v in zip(centres, vals))
        ET.SubElement(g, "polyline", points=pts, fill="none", stroke=colour)
        for cx, v, r in zip(centres, vals, rows):
            ET.SubElement(
                g, "circle", {"class": "point", "cx": _num(cx), "cy": _num(cv.y(v, top)), "r": "2.5",
                              "fill": colour, "data-entity": r.entity_id, "data-value": repr(v)},
            )
    cv.category_labels([r.entity_id for r in rows], centres)
    cv.legend([("I3X", PALETTE[0]), ("I3Y", PALETTE[1])])
    return cv.tostring()
