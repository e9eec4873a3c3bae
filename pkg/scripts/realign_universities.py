"""Rebuild the realigned university vector files from the verbatim transcriptions.

In the source vector table the X/Y columns are listed in alphabetical
university order while the name and h columns are sorted by h. The separate
h/Y1 ranking table pairs each university with its h and its Y1 value, so each
vector row is assigned to the university whose Y1 matches it (to the 2-3
decimals printed in the ranking).

    python scripts/realign_universities.py [--check]

With --check, exits non-zero if the checked-in files differ from a rebuild.
"""

from __future__ import annotations

import argparse
import csv
import sys

from i3type.ingest import fixture_path, load_fixture

SHORT_TO_ISI = {
    "HARVARD": "HARVARD UNIV",
    "MIT": "MIT",
    "UC BERKELEY": "UNIV CALIF BERKELEY",
    "STANFORD": "STANFORD UNIV",
    "CAMBRIDGE": "UNIV CAMBRIDGE",
    "OXFORD": "UNIV OXFORD",
    "CHICAGO": "UNIV CHICAGO",
    "MICHIGAN": "UNIV MICHIGAN",
    "CALTECH": "CALTECH",
    "TORONTO": "UNIV TORONTO",
    "YALE": "YALE UNIV",
    "PRINCETON": "PRINCETON UNIV",
    "TSINGHUA": "TSINGHUA UNIV",
    "SYDNEY": "UNIV SYDNEY",
    "PEKING": "PEKING UNIV",
    "FUDAN": "FUDAN UNIV",
    "KYOTO": "KYOTO UNIV",
    "HONG KONG": "UNIV HONG KONG",
    "HUMBOLDT": "HUMBOLDT UNIV",
    "HAMBURG": "UNIV HAMBURG",
    "USTC": "UNIV SCI & TECHNOL CHINA",
    "NANJING": "NANJING UNIV",
    "SHANGHAI JIAO TONG": "SHANGHAI JIAO TONG UNIV",
    "ZHEJIANG": "ZHEJIANG UNIV",
    "NATL TAIWAN": "NATL TAIWAN UNIV",
}

HEADER = (
    "# Publication and citation vectors of 25 universities, WoS {period}.\n"
    "# Realigned: each vector row is attached to the university whose Y1 it carries\n"
    "# in the h/Y1 ranking table, and h comes from that table. Regenerate with\n"
    "# scripts/realign_universities.py.\n"
)


def ranking(period: str) -> list[dict]:
    with open(fixture_path("universities_h_y1_ranking.csv"), encoding="utf-8") as f:
        lines = [l for l in f if not l.startswith("#")]
    return [r for r in csv.DictReader(lines) if r["period"] == period]


def realign(period: str) -> str:
    tag = period.replace("-", "_")
    verbatim = load_fixture(f"universities_{tag}_verbatim.csv").entities
    ranked = ranking(period)
    out, used = [], set()
    for rank in ranked:
        y1 = float(rank["Y1"])
        matches = [r for r in verbatim if abs(r.Y1 - y1) < 0.01]
        if len(matches) != 1:
            raise SystemExit(f"{period} {rank['name']}: {len(matches)} vector rows match Y1={y1}")
        row = matches[0]
        if row.entity_id in used:
            raise SystemExit(f"{period}: vector row {row.entity_id} matched twice")
        used.add(row.entity_id)
        out.append((SHORT_TO_ISI[rank["name"]], int(rank["h"]), row))
    out.sort(key=lambda t: -t[1])
    lines = [HEADER.format(period=period), "entity_id,h,X1,X2,X3,Y1,Y2,Y3\n"]
    for name, h, r in out:
        vals = ",".join(repr(v) for v in (r.X1, r.X2, r.X3, r.Y1, r.Y2, r.Y3))
        lines.append(f"{name},{h},{vals}\n")
    return "".join(lines)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--check", action="store_true")
    args = p.parse_args(argv)
    stale = 0
    for period in ("2009-2013", "2011-2015"):
        path = fixture_path(f"universities_{period.replace('-', '_')}.csv")
        text = realign(period)
        if args.check:
            current = path.read_text(encoding="utf-8") if path.exists() else ""
            if current != text:
                print(f"stale: {path}")
                stale += 1
        else:
            path.write_text(text, encoding="utf-8")
            print(f"wrote {path}")
    return 1 if stale else 0


if __name__ == "__main__":
    sys.exit(main())
