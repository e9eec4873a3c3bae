"""Element-wise dominance between indicator matrices and stacked slices of them.

A dominates B when it is at least as good on every element and better on
one. Elements are made "higher is better" first by negating lower-better
indicators (X3 by default). Mixed outcomes stay incomparable; there is no
scalar tie-break.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional, Sequence

from .core import IndicatorRow, ValidationError

HIGHER = "higher"
LOWER = "lower"

DEFAULT_INDICATORS = ("X1", "X2", "X3", "Y1", "Y2", "Y3", "I3X", "I3Y", "h")
DEFAULT_LOWER = frozenset({"X3"})


class Verdict(str, Enum):
    STRICTLY_BETTER = "strictly-better"
    WEAKLY_BETTER = "weakly-better"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"
    WEAKLY_WORSE = "weakly-worse"
    STRICTLY_WORSE = "strictly-worse"

    def flipped(self) -> "Verdict":
        return _FLIP[self]

    @property
    def dominating(self) -> bool:
        return self in (Verdict.STRICTLY_BETTER, Verdict.WEAKLY_BETTER)


_FLIP = {
    Verdict.STRICTLY_BETTER: Verdict.STRICTLY_WORSE,
    Verdict.WEAKLY_BETTER: Verdict.WEAKLY_WORSE,
    Verdict.EQUAL: Verdict.EQUAL,
    Verdict.INCOMPARABLE: Verdict.INCOMPARABLE,
    Verdict.WEAKLY_WORSE: Verdict.WEAKLY_BETTER,
    Verdict.STRICTLY_WORSE: Verdict.STRICTLY_BETTER,
}


@dataclass(frozen=True)
class Orientation:
    """Per-indicator direction; names not overridden fall back to the defaults."""

    overrides: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        for name, d in self.overrides.items():
            if d not in (HIGHER, LOWER):
                raise ValidationError(f"orientation for {name} must be '{HIGHER}' or '{LOWER}', got {d!r}", "orientation")

    def of(self, name: str) -> str:
        if name in self.overrides:
            return self.overrides[name]
        return LOWER if name in DEFAULT_LOWER else HIGHER

    def with_override(self, name: str, direction: str) -> "Orientation":
        return Orientation({**self.overrides, name: direction})


@dataclass(frozen=True)
class IndicatorMatrix:
    entity_id: str
    values: Mapping[str, float]
    axis: Optional[str] = None

    @classmethod
    def from_row(cls, row: IndicatorRow, indicators: Sequence[str] = DEFAULT_INDICATORS, axis: Optional[str] = None):
        values = {}
        for name in indicators:
            try:
                values[name] = float(row.get(name))
            except KeyError:
                raise ValidationError(f"{row.entity_id} has no indicator {name}", "indicator present") from None
        return cls(row.entity_id, values, axis)


@dataclass(frozen=True)
class ElementComparison:
    axis: Optional[str]
    indicator: str
    orientation: str
    a: float
    b: float
    outcome: str  # "better", "worse" or "tie", from A's side


def compare_elements(
    A: IndicatorMatrix, B: IndicatorMatrix, orient: Optional[Orientation] = None, epsilon: float = 0.0
) -> list[ElementComparison]:
    orient = orient or Orientation()
    if set(A.values) != set(B.values):
        raise ValidationError(
            f"indicator sets differ: {sorted(set(A.values) ^ set(B.values))}", "matching indicator sets"
        )
    out = []
    for name in A.values:
        a, b = A.values[name], B.values[name]
        sign = -1.0 if orient.of(name) == LOWER else 1.0
        diff = sign * (a - b)
        outcome = "better" if diff > epsilon else "worse" if diff < -epsilon else "tie"
        out.append(ElementComparison(A.axis, name, orient.of(name), a, b, outcome))
    return out


def verdict_from(elements: Sequence[ElementComparison]) -> Verdict:
    """Fold element outcomes into one verdict.

    Ties within epsilon that hide a nonzero gap turn strictly-* into weakly-*,
    so tolerance-dependent conclusions are visible.
    """
    better = any(e.outcome == "better" for e in elements)
    worse = any(e.outcome == "worse" for e in elements)
    if better and worse:
        return Verdict.INCOMPARABLE
    if not better and not worse:
        return Verdict.EQUAL

    def gap(e):
        return (e.a - e.b) * (-1 if e.orientation == LOWER else 1)

    if better:
        soft = any(e.outcome == "tie" and gap(e) < 0 for e in elements)
        return Verdict.WEAKLY_BETTER if soft else Verdict.STRICTLY_BETTER
    soft = any(e.outcome == "tie" and gap(e) > 0 for e in elements)
    return Verdict.WEAKLY_WORSE if soft else Verdict.STRICTLY_WORSE


def dominates(
    A: IndicatorMatrix, B: IndicatorMatrix, orient: Optional[Orientation] = None, epsilon: float = 0.0
) -> Verdict:
    return verdict_from(compare_elements(A, B, orient, epsilon))


def compare_tensor(
    A: Sequence[IndicatorMatrix], B: Sequence[IndicatorMatrix], orient: Optional[Orientation] = None, epsilon: float = 0.0
) -> list[ElementComparison]:
    if len(A) != len(B):
        raise ValidationError(f"slice counts differ: {len(A)} vs {len(B)}", "equal slice counts")
    out = []
    for a, b in zip(A, B):
        if a.axis != b.axis:
            raise ValidationError(f"axis labels differ: {a.axis!r} vs {b.axis!r}", "matching axis labels")
        out.extend(compare_elements(a, b, orient, epsilon))
    return out


def dominates_tensor(
    A: Sequence[IndicatorMatrix], B: Sequence[IndicatorMatrix], orient: Optional[Orientation] = None, epsilon: float = 0.0
) -> Verdict:
    return verdict_from(compare_tensor(A, B, orient, epsilon))


def pareto_front(
    rows: Sequence[IndicatorMatrix], orient: Optional[Orientation] = None, epsilon: float = 0.0
) -> list[IndicatorMatrix]:
    """Entities no other entity dominates, in input order."""
    return [
        r for i, r in enumerate(rows)
        if not any(dominates(o, r, orient, epsilon).dominating for j, o in enumerate(rows) if j != i)
    ]
