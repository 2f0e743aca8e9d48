"""Discrete linear time: instants, proper intervals, endpoint images, and
reified temporal constraints together with their satisfaction rules.

Time is a line of unitless integer ticks; fixture files document what one
tick means (minutes, days, years). Intervals are proper (begin < end), so
instantaneous happenings are modelled as one-tick intervals.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

Instant = int


class TemporalError(ValueError):
    """Malformed temporal value (improper interval, bad endpoint image)."""


class UnsupportedRelationError(ValueError):
    """Allen relation with no constraint-tree translation."""


class PredicateArityError(ValueError):
    """Interval predicate applied to the wrong number of intervals."""


@dataclass(frozen=True, order=True)
class Interval:
    begin: Instant
    end: Instant

    def __post_init__(self) -> None:
        if self.begin >= self.end:
            raise TemporalError(
                f"improper interval [{self.begin},{self.end}]: begin must be < end"
            )

    def __str__(self) -> str:
        return f"[{self.begin},{self.end}]"


@dataclass(frozen=True)
class TimePointImage:
    """A point relative to an interval: its begin (B), its end (E), or an
    integer displacement of either."""

    base: str  # "B" or "E"
    offset: int = 0

    def __post_init__(self) -> None:
        if self.base not in ("B", "E"):
            raise TemporalError(f"endpoint base must be B or E, got {self.base!r}")

    def __str__(self) -> str:
        if self.offset == 0:
            return self.base
        return f"tdisp({self.base},{self.offset})"


B = TimePointImage("B")
E = TimePointImage("E")


def tdisp(point: TimePointImage, amount: int) -> TimePointImage:
    """Displace an endpoint image; repeated displacements accumulate."""
    return TimePointImage(point.base, point.offset + amount)


def resolve_tpi(point: TimePointImage, iv: Interval) -> Instant:
    """Map an endpoint image onto a concrete interval. The result may lie
    outside the interval; that is legal."""
    anchor = iv.begin if point.base == "B" else iv.end
    return anchor + point.offset


class TemporalConstraint:
    """Reified boolean tree of endpoint comparisons. The left side of every
    basic comparison resolves against the action interval, the right side
    against the situation interval."""

    __slots__ = ()


_REL_OPS = {
    "eq": operator.eq,
    "ge": operator.ge,
    "gt": operator.gt,
    "le": operator.le,
    "lt": operator.lt,
}


@dataclass(frozen=True)
class Basic(TemporalConstraint):
    rel: str
    left: TimePointImage
    right: TimePointImage

    def __post_init__(self) -> None:
        if self.rel not in _REL_OPS:
            raise TemporalError(f"unknown comparison {self.rel!r}")


@dataclass(frozen=True)
class And(TemporalConstraint):
    left: TemporalConstraint
    right: TemporalConstraint


@dataclass(frozen=True)
class Or(TemporalConstraint):
    left: TemporalConstraint
    right: TemporalConstraint


@dataclass(frozen=True)
class Not(TemporalConstraint):
    inner: TemporalConstraint


def eq(left: TimePointImage, right: TimePointImage) -> Basic:
    return Basic("eq", left, right)


def ge(left: TimePointImage, right: TimePointImage) -> Basic:
    return Basic("ge", left, right)


def gt(left: TimePointImage, right: TimePointImage) -> Basic:
    return Basic("gt", left, right)


def le(left: TimePointImage, right: TimePointImage) -> Basic:
    return Basic("le", left, right)


def lt(left: TimePointImage, right: TimePointImage) -> Basic:
    return Basic("lt", left, right)


def and_(left: TemporalConstraint, right: TemporalConstraint) -> And:
    return And(left, right)


def or_(left: TemporalConstraint, right: TemporalConstraint) -> Or:
    return Or(left, right)


def not_(inner: TemporalConstraint) -> Not:
    return Not(inner)


def eval_constraint(j: Interval, k: Interval, tc: TemporalConstraint) -> bool:
    """Decide whether the ordered pair (j, k) satisfies tc; j is the action
    interval, k the situation interval."""
    if isinstance(tc, Basic):
        return _REL_OPS[tc.rel](resolve_tpi(tc.left, j), resolve_tpi(tc.right, k))
    if isinstance(tc, And):
        return eval_constraint(j, k, tc.left) and eval_constraint(j, k, tc.right)
    if isinstance(tc, Or):
        return eval_constraint(j, k, tc.left) or eval_constraint(j, k, tc.right)
    if isinstance(tc, Not):
        return not eval_constraint(j, k, tc.inner)
    raise TypeError(f"not a temporal constraint: {tc!r}")


def basic_atoms(tc: TemporalConstraint) -> Iterator[Basic]:
    """All basic comparisons in the tree, left to right."""
    if isinstance(tc, Basic):
        yield tc
    elif isinstance(tc, (And, Or)):
        yield from basic_atoms(tc.left)
        yield from basic_atoms(tc.right)
    elif isinstance(tc, Not):
        yield from basic_atoms(tc.inner)
    else:
        raise TypeError(f"not a temporal constraint: {tc!r}")


class AllenRelation(Enum):
    BEFORE = "Before"
    AFTER = "After"
    MEETS = "Meets"
    MET_BY = "MetBy"
    OVERLAPS = "Overlaps"
    OVERLAPPED_BY = "OverlappedBy"
    STARTS = "Starts"
    STARTED_BY = "StartedBy"
    DURING = "During"
    CONTAINS = "Contains"
    FINISHES = "Finishes"
    FINISHED_BY = "FinishedBy"
    EQUALS = "Equals"


def allen_relation(j: Interval, k: Interval) -> AllenRelation:
    """The unique base or inverse relation between two proper intervals."""
    if j.end < k.begin:
        return AllenRelation.BEFORE
    if j.end == k.begin:
        return AllenRelation.MEETS
    if k.end < j.begin:
        return AllenRelation.AFTER
    if k.end == j.begin:
        return AllenRelation.MET_BY
    # interiors intersect from here on
    if j.begin == k.begin:
        if j.end == k.end:
            return AllenRelation.EQUALS
        return AllenRelation.STARTS if j.end < k.end else AllenRelation.STARTED_BY
    if j.end == k.end:
        return AllenRelation.FINISHES if j.begin > k.begin else AllenRelation.FINISHED_BY
    if j.begin < k.begin:
        return AllenRelation.CONTAINS if j.end > k.end else AllenRelation.OVERLAPS
    return AllenRelation.DURING if j.end < k.end else AllenRelation.OVERLAPPED_BY


# Constraint-tree translations for the base relations. Overlaps needs the
# gt(E,B) conjunct: lt(B,B) with lt(E,E) alone also admits disjoint pairs.
_ALLEN_TC: dict[AllenRelation, TemporalConstraint] = {
    AllenRelation.BEFORE: lt(E, B),
    AllenRelation.OVERLAPS: and_(lt(B, B), and_(gt(E, B), lt(E, E))),
    AllenRelation.CONTAINS: and_(lt(B, B), gt(E, E)),
    AllenRelation.STARTS: and_(eq(B, B), lt(E, E)),
    AllenRelation.FINISHES: and_(gt(B, B), eq(E, E)),
    AllenRelation.MEETS: eq(E, B),
    AllenRelation.EQUALS: and_(eq(B, B), eq(E, E)),
}


def allen_to_tc(rel: AllenRelation) -> TemporalConstraint:
    """Translate a base Allen relation (or Equals) into a constraint tree.
    Inverse relations have no translation and are rejected."""
    try:
        return _ALLEN_TC[rel]
    except KeyError:
        raise UnsupportedRelationError(
            f"no constraint translation for {rel.value}"
        ) from None


_WITHIN = frozenset(
    {AllenRelation.STARTS, AllenRelation.DURING, AllenRelation.FINISHES}
)


def interval_pred(name: str, intervals: Sequence[Interval]) -> bool:
    """Derived interval predicates: within, subinterval (improper), cover."""
    pred = name.lower()
    if pred == "within":
        _expect_arity(pred, intervals, 2)
        return allen_relation(intervals[0], intervals[1]) in _WITHIN
    if pred == "subinterval":
        _expect_arity(pred, intervals, 2)
        rel = allen_relation(intervals[0], intervals[1])
        return rel in _WITHIN or rel is AllenRelation.EQUALS
    if pred == "cover":
        _expect_arity(pred, intervals, 3)
        j, k, m = intervals
        return (
            allen_relation(j, m) is AllenRelation.STARTS
            and allen_relation(k, m) is AllenRelation.FINISHES
            and allen_relation(j, k) is AllenRelation.MEETS
        )
    raise ValueError(f"unknown interval predicate {name!r}")


def _expect_arity(pred: str, intervals: Sequence[Interval], n: int) -> None:
    if len(intervals) != n:
        raise PredicateArityError(
            f"{pred} takes {n} intervals, got {len(intervals)}"
        )
