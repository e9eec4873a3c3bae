"""h-based I3-type indicators.

Citation profiles are reduced to five counts (P, C, Pz, Ch, h). Those counts
split the rank distribution into three publication classes (h-core, h-tail,
uncited) and three citation masses (the h square, the tail, the excess
citations above the square). Each class contributes ``size**2 / total`` to the
publication vector X or the citation vector Y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence


class ValidationError(ValueError):
    """Input violates a documented constraint.

    ``constraint`` names the violated rule and ``row`` is the 1-based line of
    the source file, when the value came from one.
    """

    def __init__(self, message: str, constraint: Optional[str] = None, row: Optional[int] = None):
        self.constraint = constraint
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class CitationProfile:
    entity_id: str
    citations: tuple[int, ...] = ()

    def __post_init__(self):
        counts = tuple(self.citations)
        for c in counts:
            if isinstance(c, bool) or not isinstance(c, int):
                raise ValidationError(f"citation count {c!r} is not an integer", "integer citations")
            if c < 0:
                raise ValidationError(f"citation count {c} is negative", "citations >= 0")
        object.__setattr__(self, "citations", counts)


@dataclass(frozen=True)
class SummaryStats:
    entity_id: str
    P: int
    C: int
    Pz: int
    Ch: int
    h: int
    metadata: Mapping[str, float] = field(default_factory=dict, compare=True)

    @property
    def Pt(self) -> int:
        return self.P - self.h - self.Pz

    def violations(self) -> list[str]:
        """Names of every violated invariant, empty when the row is consistent."""
        bad = []
        for name in ("P", "C", "Pz", "Ch", "h"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                return [f"{name} is an integer"]
            if v < 0:
                bad.append(f"{name} >= 0")
        if bad:
            return bad
        P, C, Pz, Ch, h = self.P, self.C, self.Pz, self.Ch, self.h
        if P == 0 and (C or Pz or Ch or h):
            bad.append("P = 0 implies C = Pz = Ch = h = 0")
        if h > P:
            bad.append("h <= P")
        if h + Pz > P:
            bad.append("h + Pz <= P")
        if Ch < h * h:
            bad.append("Ch >= h^2")
        if Ch > C:
            bad.append("Ch <= C")
        # every h-tail paper has between 1 and h citations
        Pt, Ct = P - h - Pz, C - Ch
        if Pt >= 0 and Ct >= 0:
            if Ct < Pt:
                bad.append("C - Ch >= P - h - Pz")
            if Ct > h * Pt:
                bad.append("C - Ch <= h * (P - h - Pz)")
        return bad

    def validate(self) -> "SummaryStats":
        bad = self.violations()
        if bad:
            raise ValidationError(
                f"{self.entity_id}: violates {', '.join(bad)}", constraint=bad[0]
            )
        return self


@dataclass(frozen=True)
class HPartition:
    Pc: int
    Pt: int
    Pz: int
    Cc: int
    Ct: int
    Ce: int
    Ch: int

    @property
    def P(self) -> int:
        return self.Pc + self.Pt + self.Pz

    @property
    def C(self) -> int:
        return self.Cc + self.Ct + self.Ce


@dataclass(frozen=True)
class PublicationVector:
    X1: float
    X2: float
    X3: float

    def __iter__(self):
        return iter((self.X1, self.X2, self.X3))


@dataclass(frozen=True)
class CitationVector:
    Y1: float
    Y2: float
    Y3: float

    def __iter__(self):
        return iter((self.Y1, self.Y2, self.Y3))


INDICATOR_COLUMNS = (
    "h", "X1", "X2", "X3", "Y1", "Y2", "Y3", "I3X", "I3Y", "e_index", "Yh_sum", "Yh_formula",
)


@dataclass(frozen=True)
class IndicatorRow:
    entity_id: str
    h: Optional[int]
    X1: float
    X2: float
    X3: float
    Y1: float
    Y2: float
    Y3: float
    I3X: float
    I3Y: float
    e_index: Optional[float]
    Yh_sum: float
    Yh_formula: float
    metadata: Mapping[str, float] = field(default_factory=dict)

    def get(self, name: str) -> float:
        """Value of a built-in indicator or metadata column.

        Raises KeyError for unknown names and for indicators this row lacks
        (e.g. ``h`` on a journal row loaded without an h column).
        """
        if name in INDICATOR_COLUMNS:
            v = getattr(self, name)
        elif name in self.metadata:
            v = self.metadata[name]
        else:
            raise KeyError(name)
        if v is None:
            raise KeyError(name)
        return v

    def has(self, name: str) -> bool:
        try:
            self.get(name)
        except KeyError:
            return False
        return True

    def as_dict(self) -> dict:
        d = {c: getattr(self, c) for c in ("entity_id",) + INDICATOR_COLUMNS}
        d["metadata"] = dict(self.metadata)
        return d


def compute_h(citations: Iterable[int]) -> int:
    """Largest k such that k entries are cited at least k times."""
    h = 0
    for rank, c in enumerate(sorted(citations, reverse=True), start=1):
        if c < rank:
            break
        h = rank
    return h


def _descending(citations: Sequence[int]) -> list[int]:
    # stable: equal counts keep input order
    order = sorted(range(len(citations)), key=lambda i: -citations[i])
    return [citations[i] for i in order]


def h_core(profile: CitationProfile) -> list[int]:
    """Citation counts of the h-core, most cited first."""
    ranked = _descending(profile.citations)
    return ranked[: compute_h(ranked)]


def partition(profile: CitationProfile) -> HPartition:
    ranked = _descending(profile.citations)
    h = compute_h(ranked)
    P, C = len(ranked), sum(ranked)
    Ch = sum(ranked[:h])
    Pz = sum(1 for c in ranked if c == 0)
    return HPartition(Pc=h, Pt=P - h - Pz, Pz=Pz, Cc=h * h, Ct=C - Ch, Ce=Ch - h * h, Ch=Ch)


def summarize(profile: CitationProfile) -> SummaryStats:
    part = partition(profile)
    return SummaryStats(
        entity_id=profile.entity_id, P=part.P, C=part.C, Pz=part.Pz, Ch=part.Ch, h=part.Pc
    )


def partition_from_summary(stats: SummaryStats) -> HPartition:
    stats.validate()
    h = stats.h
    return HPartition(
        Pc=h, Pt=stats.Pt, Pz=stats.Pz, Cc=h * h, Ct=stats.C - stats.Ch, Ce=stats.Ch - h * h, Ch=stats.Ch
    )


def vectors_from_summary(stats: SummaryStats) -> tuple[PublicationVector, CitationVector]:
    part = partition_from_summary(stats)
    P, C = part.P, part.C
    if P:
        x = PublicationVector(part.Pc**2 / P, part.Pt**2 / P, part.Pz**2 / P)
    else:
        x = PublicationVector(0.0, 0.0, 0.0)
    if C:
        y = CitationVector(part.Cc**2 / C, part.Ct**2 / C, part.Ce**2 / C)
    else:
        y = CitationVector(0.0, 0.0, 0.0)
    return x, y


def i3_scores(x: PublicationVector, y: CitationVector) -> tuple[float, float]:
    return x.X1 + x.X2 + x.X3, y.Y1 + y.Y2 + y.Y3


def e_index(stats: SummaryStats) -> float:
    excess = stats.Ch - stats.h * stats.h
    if excess < 0:
        raise ValidationError(f"{stats.entity_id}: Ch={stats.Ch} < h^2={stats.h**2}", "Ch >= h^2")
    return math.sqrt(excess)


def yh_scores(stats: SummaryStats) -> tuple[float, float]:
    """h-core citation score two ways: ``Y1 + Y3`` and ``Ch**2 / C``.

    The two agree only when the h square or the excess mass is empty, so
    both are reported.
    """
    if stats.C == 0:
        raise ValidationError(f"{stats.entity_id}: C = 0", "C > 0")
    cc = stats.h * stats.h
    ce = stats.Ch - cc
    return (cc * cc + ce * ce) / stats.C, stats.Ch * stats.Ch / stats.C


def indicator_row(stats: SummaryStats) -> IndicatorRow:
    x, y = vectors_from_summary(stats)
    i3x, i3y = i3_scores(x, y)
    yh_sum, yh_formula = yh_scores(stats) if stats.C else (0.0, 0.0)
    return IndicatorRow(
        entity_id=stats.entity_id,
        h=stats.h,
        X1=x.X1, X2=x.X2, X3=x.X3,
        Y1=y.Y1, Y2=y.Y2, Y3=y.Y3,
        I3X=i3x, I3Y=i3y,
        e_index=e_index(stats),
        Yh_sum=yh_sum,
        Yh_formula=yh_formula,
        metadata=dict(stats.metadata),
    )


def class_sizes_from_vectors(x: PublicationVector, y: CitationVector, P: float, C: float) -> dict[str, float]:
    """Invert the vectors: each class size is ``sqrt(component * total)``."""
    return {
        "Pc": math.sqrt(x.X1 * P), "Pt": math.sqrt(x.X2 * P), "Pz": math.sqrt(x.X3 * P),
        "Cc": math.sqrt(y.Y1 * C), "Ct": math.sqrt(y.Y2 * C), "Ce": math.sqrt(y.Y3 * C),
    }


def indicator_row_from_vectors(
    entity_id: str,
    x: PublicationVector,
    y: CitationVector,
    h: Optional[int] = None,
    e: Optional[float] = None,
    metadata: Optional[Mapping[str, float]] = None,
) -> IndicatorRow:
    """Build a row from published vectors, where raw counts are unavailable.

    ``Ch**2 / C`` equals ``(sqrt(Y1) + sqrt(Y3))**2`` so it needs no counts.
    The e-index needs C, recovered as ``h**4 / Y1`` when h is known.
    """
    for name, v in (("X1", x.X1), ("X2", x.X2), ("X3", x.X3), ("Y1", y.Y1), ("Y2", y.Y2), ("Y3", y.Y3)):
        if not v >= 0 or math.isinf(v):
            raise ValidationError(f"{entity_id}: {name}={v} is not a finite non-negative value", f"{name} >= 0")
    if e is None and h is not None:
        if h == 0:
            e = 0.0
        elif y.Y1 > 0:
            C = h**4 / y.Y1
            e = math.sqrt(math.sqrt(y.Y3 * C))
    i3x, i3y = i3_scores(x, y)
    return IndicatorRow(
        entity_id=entity_id,
        h=h,
        X1=x.X1, X2=x.X2, X3=x.X3,
        Y1=y.Y1, Y2=y.Y2, Y3=y.Y3,
        I3X=i3x, I3Y=i3y,
        e_index=e,
        Yh_sum=y.Y1 + y.Y3,
        Yh_formula=(math.sqrt(y.Y1) + math.sqrt(y.Y3)) ** 2,
        metadata=dict(metadata or {}),
    )


def i3_percentile(weights: Sequence[float], values: Sequence[float], normalized: bool = False) -> float:
    """Integrated impact ``sum(w_i * x_i)`` over percentile rank classes.

    ``weights`` are the class frequencies f(x_i). With ``normalized=True``
    they are first rescaled to sum to one.
    """
    if len(weights) != len(values):
        raise ValidationError(
            f"{len(weights)} weights for {len(values)} class values", "equal-length weights and values"
        )
    for w in weights:
        if w < 0:
            raise ValidationError(f"negative weight {w}", "weights >= 0")
    if normalized:
        total = math.fsum(weights)
        if total == 0:
            raise ValidationError("all weights are zero", "sum of weights > 0")
        weights = [w / total for w in weights]
    return math.fsum(w * v for w, v in zip(weights, values))
