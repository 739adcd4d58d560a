"""Occurrences of a bracketed subword and the relation between two of them.

A placement is again subword plus one-hole context, with the hole allowed
at any depth.  Everything positional happens on the flattened token
strings: occurrences of the subword correspond exactly to occurrences of
its token string inside the host's token string (cutting a balanced factor
out of a balanced word always leaves a balanced one-hole context), so
locations are token intervals of the flattening.  Classification runs on
the token strings and the witnesses are decoded back; crucially the cut
pieces of balanced factors are balanced again, so every decoded witness is
a genuine bracketed word.  Verification replays the defining equations on
the trees themselves, without ever flattening.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .bracketed import (BracketedWord, is_plain_bracketed, is_star_bracketed,
                        product, splice_bracketed, substitute_bracketed)
from .motzkin import (decode, decode_star, encode, encode_star, is_motzkin,
                      is_star_motzkin, motzkin_violation)
from .placements import (Intersecting, Location, LocationError, Nested,
                         Relation, Separated, WordPlacement,
                         classify_word_placements, location_of)
from .words import Star


@dataclass(frozen=True)
class BracketedPlacement:
    """A nonempty bracketed subword and the one-hole context around it."""

    subword: BracketedWord
    context: BracketedWord

    def __post_init__(self) -> None:
        if not self.subword.atoms or not is_plain_bracketed(self.subword):
            raise ValueError("subword must be nonempty and hole-free")
        if not is_star_bracketed(self.context, 1):
            raise ValueError("context must have exactly one hole *1")

    @cached_property
    def host(self) -> BracketedWord:
        return substitute_bracketed(self.context, (self.subword,))


def _word_view(pl: BracketedPlacement) -> WordPlacement:
    return WordPlacement(encode(pl.subword), encode_star(pl.context, 1))


def bracketed_placements_of(s: BracketedWord,
                            f: BracketedWord) -> list[BracketedPlacement]:
    """All placements of ``s`` in ``f``, ordered by start token index."""
    if not s.atoms:
        raise ValueError("subword must be nonempty")
    ms, mf = encode(s), encode(f)
    out = []
    for j in range(len(mf) - len(ms) + 1):
        if mf[j:j + len(ms)] == ms:
            ctx = mf[:j] + (Star(1),) + mf[j + len(ms):]
            assert is_star_motzkin(ctx, 1)
            out.append(BracketedPlacement(s, decode_star(ctx, 1)))
    return out


def bracketed_location_of(pl: BracketedPlacement) -> Location:
    """The token interval of the flattened host that ``pl`` occupies."""
    return location_of(_word_view(pl))


def bracketed_placement_from_location(f: BracketedWord,
                                      loc: Location) -> BracketedPlacement:
    """The placement at a token interval of the flattened host.

    The interval must cut out a balanced factor; anything else does not
    address a subword and raises LocationError.
    """
    mf = encode(f)
    if loc.end > len(mf):
        raise LocationError(f"interval {loc} exceeds token length {len(mf)}")
    factor = mf[loc.start - 1:loc.end]
    if motzkin_violation(factor) is not None:
        raise LocationError(f"interval {loc} does not cut a balanced factor")
    ctx = mf[:loc.start - 1] + (Star(1),) + mf[loc.end:]
    assert is_star_motzkin(ctx, 1)
    return BracketedPlacement(decode(factor), decode_star(ctx, 1))


def classify_bracketed_placements(pl1: BracketedPlacement,
                                  pl2: BracketedPlacement) -> Relation:
    """Classify two placements in a common host and build the witness.

    The token strings are classified first and the witness parts decoded;
    the asserts record that every part of a token-level witness between
    balanced factors is itself balanced.
    """
    if pl1.host != pl2.host:
        raise ValueError("placements live in different hosts")
    rel = classify_word_placements(_word_view(pl1), _word_view(pl2))
    if isinstance(rel, Separated):
        assert is_star_motzkin(rel.context, 2)
        return Separated(decode_star(rel.context, 2), rel.order)
    if isinstance(rel, Nested):
        assert is_star_motzkin(rel.connector, 1)
        return Nested(decode_star(rel.connector, 1), rel.direction)
    assert is_star_motzkin(rel.context, 1)
    assert is_motzkin(rel.a) and is_motzkin(rel.b) and is_motzkin(rel.c)
    return Intersecting(decode_star(rel.context, 1), decode(rel.a),
                        decode(rel.b), decode(rel.c), rel.orientation)


def verify_bracketed_witness(pl1: BracketedPlacement, pl2: BracketedPlacement,
                             rel: Relation) -> bool:
    """Replay the defining equations of ``rel`` on the trees themselves."""
    if pl1.host != pl2.host:
        return False
    f = pl1.host
    s1, q1 = pl1.subword, pl1.context
    s2, q2 = pl2.subword, pl2.context

    if isinstance(rel, Separated):
        big = rel.context
        if not isinstance(big, BracketedWord) or not is_star_bracketed(big, 2):
            return False
        stars = [t.index for t in encode_star(big, 2) if isinstance(t, Star)]
        if rel.order != ("first" if stars == [1, 2] else "second"):
            return False
        return (substitute_bracketed(big, (s1, s2)) == f
                and q1 == splice_bracketed(big, {2: s2})
                and splice_bracketed(q2, {1: BracketedWord((Star(2),))})
                == splice_bracketed(big, {1: s1}))

    if isinstance(rel, Nested):
        conn = rel.connector
        if not isinstance(conn, BracketedWord) or not is_star_bracketed(conn, 1):
            return False
        if rel.direction == "first":
            return q1 == splice_bracketed(q2, {1: conn})
        return q2 == splice_bracketed(q1, {1: conn})

    if isinstance(rel, Intersecting):
        ctx, a, b, c = rel.context, rel.a, rel.b, rel.c
        if not all(isinstance(x, BracketedWord) for x in (ctx, a, b, c)):
            return False
        if not is_star_bracketed(ctx, 1):
            return False
        if not all(x.atoms and is_plain_bracketed(x) for x in (a, b, c)):
            return False
        if substitute_bracketed(ctx, (product(a, b, c),)) != f:
            return False
        hole = BracketedWord((Star(1),))
        left = splice_bracketed(ctx, {1: product(hole, c)})
        right = splice_bracketed(ctx, {1: product(a, hole)})
        if rel.orientation == "first":
            return (s1 == product(a, b) and s2 == product(b, c)
                    and q1 == left and q2 == right)
        return (s2 == product(a, b) and s1 == product(b, c)
                and q2 == left and q1 == right)

    return False
