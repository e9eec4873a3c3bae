"""Spearman rank correlation, significance, correlation grids and rankings."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np
from scipy import stats as _sps

from .core import IndicatorRow, ValidationError

EXACT_MAX_N = 9

LEVEL_1 = "1%"
LEVEL_5 = "5%"
NOT_SIGNIFICANT = "ns"


class UndefinedCorrelation(ValidationError):
    """One of the sequences has no rank variance."""


def significance(p: float) -> str:
    if p < 0.01:
        return LEVEL_1
    if p < 0.05:
        return LEVEL_5
    return NOT_SIGNIFICANT


@dataclass(frozen=True)
class CorrelationCell:
    rho: float
    p_value: float
    n: int

    @property
    def significance(self) -> str:
        return significance(self.p_value)

    @property
    def stars(self) -> str:
        return {LEVEL_1: "*", LEVEL_5: "**"}.get(self.significance, "")


@dataclass(frozen=True)
class CorrelationMatrix:
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    cells: tuple[tuple[CorrelationCell, ...], ...]

    def __post_init__(self):
        if len(self.cells) != len(self.row_labels) or any(
            len(r) != len(self.col_labels) for r in self.cells
        ):
            raise ValueError("cell grid does not match label counts")

    def cell(self, row: str, col: str) -> CorrelationCell:
        return self.cells[self.row_labels.index(row)][self.col_labels.index(col)]


def average_ranks(values: Sequence[float]) -> np.ndarray:
    """1-based ranks, tied values sharing the mean of their positions."""
    a = np.asarray(values, dtype=float)
    order = np.argsort(a, kind="stable")
    ranks = np.empty(len(a), dtype=float)
    i = 0
    while i < len(a):
        j = i
        while j + 1 < len(a) and a[order[j + 1]] == a[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2 + 1
        i = j + 1
    return ranks


def spearman_rho(xs: Sequence[float], ys: Sequence[float]) -> float:
    if len(xs) != len(ys):
        raise ValidationError(f"length mismatch: {len(xs)} vs {len(ys)}", "equal lengths")
    if len(xs) < 2:
        raise ValidationError(f"need at least 2 observations, got {len(xs)}", "n >= 2")
    if any(math.isnan(v) for v in itertools.chain(xs, ys)):
        raise ValidationError("missing value", "no missing values")
    rx = average_ranks(xs) - (len(xs) + 1) / 2
    ry = average_ranks(ys) - (len(ys) + 1) / 2
    sxx, syy = float(rx @ rx), float(ry @ ry)
    if sxx == 0 or syy == 0:
        raise UndefinedCorrelation("correlation undefined: zero rank variance", "rank variance > 0")
    rho = float(rx @ ry) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, rho))


@lru_cache(maxsize=None)
def _null_abs_rho(n: int) -> np.ndarray:
    """|rho| of every permutation of ranks 1..n against the identity, sorted."""
    base = np.arange(n)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    d2 = ((perms - base) ** 2).sum(axis=1)
    rho = 1.0 - 6.0 * d2 / (n * (n * n - 1))
    return np.sort(np.abs(rho))


def exact_p(rho: float, n: int) -> float:
    """Two-tailed permutation p: share of the n! orderings with |rho| at least as large."""
    null = _null_abs_rho(n)
    k = np.searchsorted(null, abs(rho) - 1e-12, side="left")
    return float(len(null) - k) / len(null)


def t_p(rho: float, n: int) -> float:
    if abs(rho) >= 1.0:
        return 0.0
    t = rho * math.sqrt((n - 2) / (1 - rho * rho))
    return float(2 * _sps.t.sf(abs(t), n - 2))


def spearman_p(rho: float, n: int) -> float:
    if n < 3:
        raise ValidationError(f"need at least 3 observations, got {n}", "n >= 3")
    if abs(rho) > 1 + 1e-12:
        raise ValidationError(f"|rho| = {abs(rho)} > 1", "|rho| <= 1")
    if n <= EXACT_MAX_N:
        return exact_p(rho, n)
    return t_p(rho, n)


def _column(rows: Sequence[IndicatorRow], name: str) -> list[float]:
    out = []
    for r in rows:
        try:
            out.append(float(r.get(name)))
        except KeyError:
            known = any(x.has(name) for x in rows)
            what = "missing for" if known else "unknown indicator, absent from"
            raise ValidationError(f"{name}: {what} entity {r.entity_id}", "indicator present") from None
    return out


def correlate(rows: Sequence[IndicatorRow], a: str, b: str) -> CorrelationCell:
    xs, ys = _column(rows, a), _column(rows, b)
    n = len(rows)
    if n < 3:
        raise ValidationError(f"need at least 3 entities, got {n}", "n >= 3")
    rho = spearman_rho(xs, ys)
    return CorrelationCell(rho=rho, p_value=spearman_p(rho, n), n=n)


def correlation_matrix(
    rows: Sequence[IndicatorRow], row_vars: Sequence[str], col_vars: Sequence[str]
) -> CorrelationMatrix:
    cells = tuple(tuple(correlate(rows, r, c) for c in col_vars) for r in row_vars)
    return CorrelationMatrix(tuple(row_vars), tuple(col_vars), cells)


def rank_entities(rows: Sequence[IndicatorRow], by: str, descending: bool = True) -> list[IndicatorRow]:
    """Rows sorted on one indicator; ties keep input order."""
    values = _column(rows, by)
    order = sorted(range(len(rows)), key=lambda i: -values[i] if descending else values[i])
    return [rows[i] for i in order]
