"""Occurrences of a subword inside a host word, and how two of them relate.

An occurrence is recorded as a placement: the subword together with the
one-hole context it was cut out of, so that plugging the subword back into
the context recovers the host.  Placements in a common host correspond
one-to-one with index intervals, and any two of them stand in exactly one
of three relations:

  separated     the intervals are disjoint
  nested        one interval contains the other (equality included)
  intersecting  the intervals overlap properly on both sides

Each relation comes with a constructive witness (a context with two holes,
a connector, or an overlap split) whose defining equations can be replayed
by :func:`verify_word_witness`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import ClassVar, Literal, Union

from .words import Star, Word, concat, is_star_word, is_word, splice, substitute


class LocationError(ValueError):
    """An index interval that does not address a placement in the host."""


@dataclass(frozen=True)
class Location:
    """A 1-based inclusive index interval ``start .. end``."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start < 1 or self.end < self.start:
            raise LocationError(f"bad interval {self.start}..{self.end}")

    def __str__(self) -> str:
        return f"{self.start}..{self.end}"


@dataclass(frozen=True)
class WordPlacement:
    """A nonempty subword together with the one-hole context around it."""

    subword: Word
    context: tuple

    def __post_init__(self) -> None:
        if not self.subword or not is_word(self.subword):
            raise ValueError("subword must be a nonempty plain word")
        if not is_star_word(self.context, 1):
            raise ValueError("context must have exactly one hole *1")

    @cached_property
    def host(self) -> Word:
        return substitute(self.context, (self.subword,))


class RelationKind(str, Enum):
    SEPARATED = "separated"
    NESTED = "nested"
    INTERSECTING = "intersecting"


Side = Literal["first", "second"]


@dataclass(frozen=True)
class Separated:
    """Witness for disjoint occurrences: a two-hole context.

    Hole ``*1`` stands for the first placement's subword and ``*2`` for the
    second's; ``order`` says which of the two sits further left in the host.
    """

    kind: ClassVar[RelationKind] = RelationKind.SEPARATED
    context: object
    order: Side


@dataclass(frozen=True)
class Nested:
    """Witness for containment: a one-hole connector.

    The inner placement's context equals the outer one's with the connector
    plugged into its hole; ``direction`` names the inner placement.  Equal
    placements are nested with the bare-hole connector.
    """

    kind: ClassVar[RelationKind] = RelationKind.NESTED
    connector: object
    direction: Side


@dataclass(frozen=True)
class Intersecting:
    """Witness for proper overlap: a context plus the three-way split.

    The host region covered by the union of the two occurrences splits as
    ``a b c`` with all parts nonempty; the left occurrence covers ``a b``
    and the right covers ``b c``.  ``orientation`` says which placement is
    the left one.
    """

    kind: ClassVar[RelationKind] = RelationKind.INTERSECTING
    context: object
    a: object
    b: object
    c: object
    orientation: Side


Relation = Union[Separated, Nested, Intersecting]


def placements_of(u: Word, w: Word) -> list[WordPlacement]:
    """All placements of ``u`` in ``w``, ordered by start index."""
    if not u:
        raise ValueError("subword must be nonempty")
    hole = (Star(1),)
    out = []
    for j in range(len(w) - len(u) + 1):
        if w[j:j + len(u)] == u:
            out.append(WordPlacement(u, w[:j] + hole + w[j + len(u):]))
    return out


def location_of(pl: WordPlacement) -> Location:
    """The index interval that ``pl`` occupies in its host."""
    j = next(i for i, t in enumerate(pl.context) if isinstance(t, Star))
    return Location(j + 1, j + len(pl.subword))


def placement_from_location(w: Word, loc: Location) -> WordPlacement:
    """The placement of ``w[start..end]`` at that interval."""
    if loc.end > len(w):
        raise LocationError(f"interval {loc} exceeds host length {len(w)}")
    u = w[loc.start - 1:loc.end]
    return WordPlacement(u, w[:loc.start - 1] + (Star(1),) + w[loc.end:])


def classify_intervals(i: Location, j: Location) -> RelationKind:
    """Relation tag for two intervals, with no witness attached."""
    if i.end < j.start or j.end < i.start:
        return RelationKind.SEPARATED
    if (j.start <= i.start and i.end <= j.end) or \
            (i.start <= j.start and j.end <= i.end):
        return RelationKind.NESTED
    return RelationKind.INTERSECTING


def classify_word_placements(pl1: WordPlacement, pl2: WordPlacement) -> Relation:
    """Classify two placements in a common host and build the witness.

    Returns one canonical witness; ties (equal intervals) are resolved with
    the first placement as the inner one.  Raises ValueError when the hosts
    differ.
    """
    w = pl1.host
    if w != pl2.host:
        raise ValueError("placements live in different hosts")
    one, two = location_of(pl1), location_of(pl2)
    j1, k1, j2, k2 = one.start, one.end, two.start, two.end
    kind = classify_intervals(one, two)

    if kind is RelationKind.SEPARATED:
        if k1 < j2:
            ctx = w[:j1 - 1] + (Star(1),) + w[k1:j2 - 1] + (Star(2),) + w[k2:]
            return Separated(ctx, "first")
        ctx = w[:j2 - 1] + (Star(2),) + w[k2:j1 - 1] + (Star(1),) + w[k1:]
        return Separated(ctx, "second")

    if kind is RelationKind.NESTED:
        if j2 <= j1 and k1 <= k2:
            # first placement inside the second (covers the equal case)
            conn = w[j2 - 1:j1 - 1] + (Star(1),) + w[k1:k2]
            return Nested(conn, "first")
        conn = w[j1 - 1:j2 - 1] + (Star(1),) + w[k2:k1]
        return Nested(conn, "second")

    if j1 < j2:
        ctx = w[:j1 - 1] + (Star(1),) + w[k2:]
        return Intersecting(ctx, w[j1 - 1:j2 - 1], w[j2 - 1:k1], w[k1:k2], "first")
    ctx = w[:j2 - 1] + (Star(1),) + w[k1:]
    return Intersecting(ctx, w[j2 - 1:j1 - 1], w[j1 - 1:k2], w[k2:k1], "second")


def verify_word_witness(pl1: WordPlacement, pl2: WordPlacement,
                        rel: Relation) -> bool:
    """Replay the defining equations of ``rel`` against the two placements.

    Nothing is recomputed from intervals; the claimed witness either
    satisfies the equations of its relation or it does not.
    """
    if pl1.host != pl2.host:
        return False
    w = pl1.host
    u1, p1 = pl1.subword, pl1.context
    u2, p2 = pl2.subword, pl2.context

    if isinstance(rel, Separated):
        p = rel.context
        if not is_star_word(p, 2):
            return False
        stars = [t.index for t in p if isinstance(t, Star)]
        if rel.order != ("first" if stars == [1, 2] else "second"):
            return False
        return (substitute(p, (u1, u2)) == w
                and p1 == splice(p, {2: u2})
                and splice(p2, {1: (Star(2),)}) == splice(p, {1: u1}))

    if isinstance(rel, Nested):
        q = rel.connector
        if not is_star_word(q, 1):
            return False
        if rel.direction == "first":
            return p1 == splice(p2, {1: q})
        return p2 == splice(p1, {1: q})

    if isinstance(rel, Intersecting):
        p, a, b, c = rel.context, rel.a, rel.b, rel.c
        if not is_star_word(p, 1):
            return False
        if not (a and b and c and is_word(a) and is_word(b) and is_word(c)):
            return False
        if substitute(p, (concat(a, b, c),)) != w:
            return False
        left = splice(p, {1: (Star(1),) + c})
        right = splice(p, {1: a + (Star(1),)})
        if rel.orientation == "first":
            return u1 == a + b and u2 == b + c and p1 == left and p2 == right
        return u2 == a + b and u1 == b + c and p2 == left and p1 == right

    return False
