"""Write the SVG figures for the bundled datasets.

    python scripts/make_figures.py --out figures/

The rank-distribution figure needs per-paper counts, which the fixtures do not
carry, so it plots a synthetic profile with the same P, C, Pz, Ch and h as
scholar_1 (the individual counts are invented).
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from i3type import charts, load_fixture
from i3type.core import CitationProfile, summarize
from i3type.stats import rank_entities


@dataclass(frozen=True)
class Config:
    out: Path = Path("figures")
    periods: tuple[str, ...] = ("2009_2013", "2011_2015")
    bar_indicators: tuple[str, ...] = ("Y1", "I3Y")


def synthetic_scholar() -> CitationProfile:
    cites = [69] * 24 + [68] * 11 + [14] * 34 + [13] * 61 + [0] * 15
    profile = CitationProfile("scholar_1 (synthetic)", tuple(cites))
    s = summarize(profile)
    assert (s.P, s.C, s.Pz, s.Ch, s.h) == (145, 3673, 15, 2404, 35)
    return profile


def build(cfg: Config) -> dict[str, str]:
    figs = {"rank_distribution_scholar.svg": charts.rank_distribution([synthetic_scholar()])}
    for period in cfg.periods:
        rows = load_fixture(f"universities_{period}.csv").indicator_rows()
        for ind in cfg.bar_indicators:
            figs[f"universities_{period}_{ind}.svg"] = charts.indicator_bars(rank_entities(rows, ind), ind)
        figs[f"universities_{period}_i3.svg"] = charts.i3_lines(rows)
    journals = rank_entities(load_fixture("ec_journals_2011_2015.csv").indicator_rows(), "I3Y")
    figs["ec_journals_i3.svg"] = charts.i3_lines(journals)
    return figs


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Config.out)
    args = ap.parse_args(argv)
    cfg = Config(out=args.out)
    cfg.out.mkdir(parents=True, exist_ok=True)
    for name, svg in build(cfg).items():
        (cfg.out / name).write_text(svg, encoding="utf-8")
        print(cfg.out / name)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
