"""Motzkin words: bracket sequences that close everything they open.

A Motzkin word is a token string over symbols plus the two bracket tokens,
with as many ``[`` as ``]`` and with no prefix closing more than it has
opened.  These are exactly the strings obtained by flattening a bracketed
word, and :func:`encode` / :func:`decode` realize that correspondence in
both directions.  Reading ``[`` as an up step, ``]`` as a down step and a
symbol as a level step turns a Motzkin word into a lattice path that stays
on or above the axis and ends on it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

from .bracketed import BracketedWord, is_plain_bracketed, is_star_bracketed
from .words import Star, Symbol, splice, star_counts


class Bracket(Enum):
    OPEN = "["
    CLOSE = "]"

    def __str__(self) -> str:
        return self.value


OPEN = Bracket.OPEN
CLOSE = Bracket.CLOSE

MotzkinToken = Union[Symbol, Star, Bracket]


class MotzkinError(ValueError):
    """A token string that fails one of the two Motzkin conditions."""

    def __init__(self, reason: str, position: int):
        # reason: "unbalanced" (an open bracket never closed, position is
        # the earliest such) or "prefix" (a close with nothing open).
        super().__init__(f"{reason} bracket at position {position}")
        self.reason = reason
        self.position = position


def motzkin_violation(tokens: Sequence) -> Optional[tuple[str, int]]:
    """First balance violation in ``tokens``, or None when it is Motzkin.

    Returns ``(reason, position)`` with a 1-based position: ``"prefix"``
    points at the close bracket that has nothing to close, ``"unbalanced"``
    at the earliest open bracket that never closes.
    """
    opens: list[int] = []
    for i, t in enumerate(tokens, 1):
        if t is OPEN:
            opens.append(i)
        elif t is CLOSE:
            if not opens:
                return ("prefix", i)
            opens.pop()
    if opens:
        return ("unbalanced", opens[0])
    return None


def is_motzkin(tokens: Sequence) -> bool:
    """True for a balanced token string of symbols and brackets, no stars."""
    return (all(isinstance(t, Symbol) or isinstance(t, Bracket) for t in tokens)
            and motzkin_violation(tokens) is None)


def is_star_motzkin(tokens: Sequence, k: int, *,
                    at_most_once: bool = False) -> bool:
    """Balanced, and carrying the holes ``*1 .. *k`` exactly once each."""
    if k < 0:
        return False
    if motzkin_violation(tokens) is not None:
        return False
    for t in tokens:
        if not isinstance(t, (Symbol, Star, Bracket)):
            return False
        if isinstance(t, Star) and not 1 <= t.index <= k:
            return False
    counts = star_counts(tokens)
    if any(n > 1 for n in counts.values()):
        return False
    if at_most_once:
        return True
    return all(i in counts for i in range(1, k + 1))


def flatten(t: BracketedWord) -> tuple:
    """Token string of a bracketed word, stars kept, nothing validated."""
    out: list = []

    def walk(node: BracketedWord) -> None:
        for a in node.atoms:
            if isinstance(a, BracketedWord):
                out.append(OPEN)
                walk(a)
                out.append(CLOSE)
            else:
                out.append(a)

    walk(t)
    return tuple(out)


def encode(f: BracketedWord) -> tuple:
    """Flatten a star-free bracketed word to its Motzkin token string."""
    if not is_plain_bracketed(f):
        raise ValueError("word carries star holes; use encode_star")
    return flatten(f)


def encode_star(q: BracketedWord, k: int, *, at_most_once: bool = False) -> tuple:
    """Flatten a bracketed word carrying holes ``*1 .. *k``."""
    if not is_star_bracketed(q, k, at_most_once=at_most_once):
        raise ValueError(f"expected holes *1 .. *{k}, each exactly once")
    return flatten(q)


def _parse(tokens: Sequence) -> BracketedWord:
    stack: list[list] = [[]]
    opens: list[int] = []
    for i, t in enumerate(tokens, 1):
        if t is OPEN:
            stack.append([])
            opens.append(i)
        elif t is CLOSE:
            if len(stack) == 1:
                raise MotzkinError("prefix", i)
            body = BracketedWord(tuple(stack.pop()))
            opens.pop()
            stack[-1].append(body)
        elif isinstance(t, (Symbol, Star)):
            stack[-1].append(t)
        else:
            raise ValueError(f"bad token {t!r}")
    if opens:
        raise MotzkinError("unbalanced", opens[0])
    return BracketedWord(tuple(stack[0]))


def decode(m: Sequence) -> BracketedWord:
    """Rebuild the bracketed word whose flattening is ``m``.

    Raises MotzkinError when ``m`` is not a Motzkin word, with the position
    of the offending bracket.
    """
    f = _parse(m)
    if not is_plain_bracketed(f):
        raise ValueError("token string carries star holes; use decode_star")
    return f


def decode_star(m: Sequence, k: int, *, at_most_once: bool = False) -> BracketedWord:
    """Rebuild a holed bracketed word from its flattening."""
    q = _parse(m)
    if not is_star_bracketed(q, k, at_most_once=at_most_once):
        raise ValueError(f"expected holes *1 .. *{k}, each exactly once")
    return q


def substitute_motzkin(p: Sequence, values: Sequence[Sequence], *,
                       at_most_once: bool = False) -> tuple:
    """Plug Motzkin words into the holes of a holed Motzkin word.

    Balance is preserved by construction, and the result is asserted to be
    Motzkin rather than re-validated by the caller.
    """
    k = len(values)
    if not is_star_motzkin(p, k, at_most_once=at_most_once):
        raise ValueError(f"expected a balanced string with holes *1 .. *{k}")
    for v in values:
        if not is_motzkin(v):
            raise ValueError("replacement values must be Motzkin words")
    out = splice(p, {i + 1: values[i] for i in range(k)})
    assert is_motzkin(out)
    return out


class Slope(Enum):
    UP = "U"
    DOWN = "D"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Level:
    """A level step of the path, remembering which symbol it came from."""

    symbol: Symbol

    def __str__(self) -> str:
        return self.symbol.name


Step = Union[Slope, Level]


def to_path(m: Sequence) -> tuple:
    """The lattice path of a Motzkin word: up for ``[``, down for ``]``."""
    if not is_motzkin(m):
        raise ValueError("not a Motzkin word")
    steps: list = []
    for t in m:
        if t is OPEN:
            steps.append(Slope.UP)
        elif t is CLOSE:
            steps.append(Slope.DOWN)
        else:
            steps.append(Level(t))
    return tuple(steps)


def from_path(steps: Sequence) -> tuple:
    """Rebuild the Motzkin word of a path, checking it never dips below
    the axis and ends back on it."""
    tokens: list = []
    for s in steps:
        if s is Slope.UP:
            tokens.append(OPEN)
        elif s is Slope.DOWN:
            tokens.append(CLOSE)
        elif isinstance(s, Level):
            tokens.append(s.symbol)
        else:
            raise ValueError(f"bad step {s!r}")
    bad = motzkin_violation(tokens)
    if bad is not None:
        raise MotzkinError(*bad)
    return tuple(tokens)


def enumerate_motzkin(n: int, alphabet: Iterable[Symbol]) -> list[tuple]:
    """All Motzkin words of length ``n``, in lexicographic order.

    Tokens are ordered with the alphabet first (by symbol name), then ``[``,
    then ``]``.  Generate-and-filter over all token strings; the point is
    being obviously right, not fast.
    """
    letters = sorted(set(alphabet), key=lambda s: s.name)
    pool: list = list(letters) + [OPEN, CLOSE]
    return [w for w in itertools.product(pool, repeat=n) if is_motzkin(w)]
