"""Brute-force back-stops for the placement classifiers.

The oracles know nothing about intervals.  They enumerate every candidate
witness a relation could possibly have (every way of cutting the host into
the shape the defining equations talk about) and keep the ones that pass
the equations verbatim.  That makes them slow and obviously complete, which
is the point: the fast classifiers are checked against them pair by pair,
and :func:`exhaustive_trichotomy_check` grinds through every placement pair
of every host up to a size bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Callable, Iterable

from .bracketed_placements import (BracketedPlacement, bracketed_location_of,
                                   bracketed_placement_from_location,
                                   classify_bracketed_placements,
                                   verify_bracketed_witness)
from .motzkin import (decode, decode_star, encode, enumerate_motzkin,
                      motzkin_violation)
from .placements import (Intersecting, Location, Nested, Relation,
                         RelationKind, Separated, WordPlacement,
                         classify_intervals, classify_word_placements,
                         location_of, placement_from_location,
                         verify_word_witness)
from .words import Star, Symbol


def _note(found: dict, rel: Relation) -> None:
    lst = found.setdefault(rel.kind, [])
    if rel not in lst:
        lst.append(rel)


def oracle_word_relation(pl1: WordPlacement,
                         pl2: WordPlacement) -> dict[RelationKind, tuple]:
    """Every relation the two placements satisfy, with all witnesses found.

    Candidates are enumerated from index splits of the host alone; a cheap
    length comparison prunes splits that could not satisfy the equations
    for any content.  Returns only the tags that have a witness.
    """
    if pl1.host != pl2.host:
        raise ValueError("placements live in different hosts")
    w = pl1.host
    n = len(w)
    hole = (Star(1),)
    found: dict[RelationKind, list] = {}

    # separated: a two-hole cut of the host, either hole order
    total = len(pl1.subword) + len(pl2.subword)
    for j1 in range(1, n + 1):
        for k1 in range(j1, n + 1):
            for j2 in range(k1 + 1, n + 1):
                for k2 in range(j2, n + 1):
                    if (k1 - j1 + 1) + (k2 - j2 + 1) != total:
                        continue
                    left, mid, right = w[:j1 - 1], w[k1:j2 - 1], w[k2:]
                    for order, s, t in (("first", 1, 2), ("second", 2, 1)):
                        cand = Separated(
                            left + (Star(s),) + mid + (Star(t),) + right, order)
                        if verify_word_witness(pl1, pl2, cand):
                            _note(found, cand)

    # nested: a one-hole connector built from two factors of the host
    len1, len2 = len(pl1.context), len(pl2.context)
    for i1 in range(n + 1):
        for i2 in range(i1, n + 1):
            x = w[i1:i2]
            for i3 in range(n + 1):
                for i4 in range(i3, n + 1):
                    y = w[i3:i4]
                    qlen = len(x) + len(y) + 1
                    if qlen == len1 - len2 + 1:
                        cand = Nested(x + hole + y, "first")
                        if verify_word_witness(pl1, pl2, cand):
                            _note(found, cand)
                    if qlen == len2 - len1 + 1:
                        cand = Nested(x + hole + y, "second")
                        if verify_word_witness(pl1, pl2, cand):
                            _note(found, cand)

    # intersecting: host = x a b c y with a, b, c nonempty
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                for m in range(k + 1, n + 1):
                    ctx = w[:i] + hole + w[m:]
                    a, b, c = w[i:j], w[j:k], w[k:m]
                    for orient in ("first", "second"):
                        cand = Intersecting(ctx, a, b, c, orient)
                        if verify_word_witness(pl1, pl2, cand):
                            _note(found, cand)

    return {kind: tuple(lst) for kind, lst in found.items()}


def oracle_bracketed_relation(pl1: BracketedPlacement,
                              pl2: BracketedPlacement) -> dict[RelationKind, tuple]:
    """Bracketed counterpart of :func:`oracle_word_relation`.

    Candidates are cut from the flattened host and only balanced cuts are
    decoded (an unbalanced cut cannot be the flattening of any bracketed
    value); the equations are then replayed on the trees.
    """
    if pl1.host != pl2.host:
        raise ValueError("placements live in different hosts")
    w = encode(pl1.host)
    n = len(w)
    hole = (Star(1),)
    found: dict[RelationKind, list] = {}

    total = len(encode(pl1.subword)) + len(encode(pl2.subword))
    for j1 in range(1, n + 1):
        for k1 in range(j1, n + 1):
            for j2 in range(k1 + 1, n + 1):
                for k2 in range(j2, n + 1):
                    if (k1 - j1 + 1) + (k2 - j2 + 1) != total:
                        continue
                    left, mid, right = w[:j1 - 1], w[k1:j2 - 1], w[k2:]
                    for order, s, t in (("first", 1, 2), ("second", 2, 1)):
                        toks = left + (Star(s),) + mid + (Star(t),) + right
                        if motzkin_violation(toks) is not None:
                            continue
                        cand = Separated(decode_star(toks, 2), order)
                        if verify_bracketed_witness(pl1, pl2, cand):
                            _note(found, cand)

    len1 = n - len(encode(pl1.subword)) + 1
    len2 = n - len(encode(pl2.subword)) + 1
    for i1 in range(n + 1):
        for i2 in range(i1, n + 1):
            x = w[i1:i2]
            for i3 in range(n + 1):
                for i4 in range(i3, n + 1):
                    y = w[i3:i4]
                    toks = x + hole + y
                    if len(toks) not in (len1 - len2 + 1, len2 - len1 + 1):
                        continue
                    if motzkin_violation(toks) is not None:
                        continue
                    conn = decode_star(toks, 1)
                    if len(toks) == len1 - len2 + 1:
                        cand = Nested(conn, "first")
                        if verify_bracketed_witness(pl1, pl2, cand):
                            _note(found, cand)
                    if len(toks) == len2 - len1 + 1:
                        cand = Nested(conn, "second")
                        if verify_bracketed_witness(pl1, pl2, cand):
                            _note(found, cand)

    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                for m in range(k + 1, n + 1):
                    pieces = (w[i:j], w[j:k], w[k:m])
                    ctx = w[:i] + hole + w[m:]
                    if any(motzkin_violation(p) is not None for p in pieces):
                        continue
                    if motzkin_violation(ctx) is not None:
                        continue
                    a, b, c = (decode(p) for p in pieces)
                    dctx = decode_star(ctx, 1)
                    for orient in ("first", "second"):
                        cand = Intersecting(dctx, a, b, c, orient)
                        if verify_bracketed_witness(pl1, pl2, cand):
                            _note(found, cand)

    return {kind: tuple(lst) for kind, lst in found.items()}


@dataclass(frozen=True)
class Violation:
    """One broken fact from the exhaustive sweep."""

    host: object
    first: object
    second: object
    message: str


def _check_pair(host, pl1, pl2, oracle: Callable, classify: Callable,
                verify: Callable, locate: Callable) -> list[Violation]:
    problems = []

    def bad(message: str) -> None:
        problems.append(Violation(host, pl1, pl2, message))

    expected = classify_intervals(locate(pl1), locate(pl2))
    tags = oracle(pl1, pl2)
    fast = classify(pl1, pl2)
    if set(tags) != {expected}:
        bad(f"oracle tags {sorted(t.value for t in tags)}, "
            f"intervals say {expected.value}")
    if fast.kind is not expected:
        bad(f"classifier says {fast.kind.value}, intervals say {expected.value}")
    if not verify(pl1, pl2, fast):
        bad("canonical witness fails its defining equations")
    if expected in tags and fast not in tags[expected]:
        bad("canonical witness not found by the oracle enumeration")
    return problems


def exhaustive_trichotomy_check(alphabet: Iterable[Symbol], max_len: int, *,
                                bracketed: bool = False) -> list[Violation]:
    """Sweep every placement pair of every host up to ``max_len``.

    For every pair the oracle must find exactly one relation, the fast
    classifier must name that relation, its witness must pass the defining
    equations and must be among the oracle's witnesses.  ``max_len`` bounds
    the host length (token length of the flattening in bracketed mode).
    Returns all violations found, so an empty list is a clean sweep.
    """
    letters = sorted(set(alphabet), key=lambda s: s.name)
    out: list[Violation] = []

    if bracketed:
        for size in range(1, max_len + 1):
            for m in enumerate_motzkin(size, letters):
                f = decode(m)
                pls = []
                for j in range(1, size + 1):
                    for k in range(j, size + 1):
                        if motzkin_violation(m[j - 1:k]) is None:
                            pls.append(bracketed_placement_from_location(
                                f, Location(j, k)))
                for pl1 in pls:
                    for pl2 in pls:
                        out.extend(_check_pair(
                            f, pl1, pl2, oracle_bracketed_relation,
                            classify_bracketed_placements,
                            verify_bracketed_witness, bracketed_location_of))
        return out

    for size in range(1, max_len + 1):
        for tokens in cartesian(letters, repeat=size):
            w = tuple(tokens)
            pls = [placement_from_location(w, Location(j, k))
                   for j in range(1, size + 1) for k in range(j, size + 1)]
            for pl1 in pls:
                for pl2 in pls:
                    out.extend(_check_pair(
                        w, pl1, pl2, oracle_word_relation,
                        classify_word_placements, verify_word_witness,
                        location_of))
    return out
