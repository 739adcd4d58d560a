"""The shared text format for words, starred words and bracket strings.

Symbols are single lowercase letters, ``[`` and ``]`` are the bracket
tokens, ``*`` is a hole (``*1``, ``*2``, ... when numbered; a bare ``*``
means ``*1``).  Whitespace never matters.  The keyword ``eps``, as the
entire operand, is the empty word.

Rendering is the inverse: canonical text has no whitespace, writes the
hole of a one-hole word as a bare ``*``, and writes the empty word as
``eps``.  One corner: the three-letter word e p s would collide with the
keyword, so it alone is rendered with spaces.
"""

from __future__ import annotations

import re
import string

from .bracketed import BracketedWord
from .motzkin import Bracket, MotzkinError, decode, decode_star, flatten, motzkin_violation
from .placements import Location
from .words import Star, Symbol, star_counts

_LETTERS = set(string.ascii_lowercase)


class ParseError(ValueError):
    """Malformed operand text; position is the 1-based character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (column {position})")
        self.position = position


def _scan(text: str) -> list:
    """Token list for any operand, each paired with its 1-based column."""
    if text.strip() == "eps":
        return []
    out: list = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in _LETTERS:
            out.append((Symbol(c), i + 1))
            i += 1
            continue
        if c == "[":
            out.append((Bracket.OPEN, i + 1))
            i += 1
            continue
        if c == "]":
            out.append((Bracket.CLOSE, i + 1))
            i += 1
            continue
        if c == "*":
            m = re.match(r"\*(\d*)", text[i:])
            digits = m.group(1)
            index = int(digits) if digits else 1
            if index < 1:
                raise ParseError("star index must be at least 1", i + 1)
            out.append((Star(index), i + 1))
            i += 1 + len(digits)
            continue
        raise ParseError(f"unexpected character {c!r}", i + 1)
    return out


def tokenize(text: str) -> list:
    """Token list for any operand: symbols, brackets and stars."""
    return [t for t, _ in _scan(text)]


def _without(pairs: list, kinds: tuple, what: str) -> tuple:
    for t, pos in pairs:
        if isinstance(t, kinds):
            raise ParseError(f"{what} may not contain {t}", pos)
    return tuple(t for t, _ in pairs)


def parse_word(text: str) -> tuple:
    """A plain word: symbols only."""
    return _without(_scan(text), (Star, Bracket), "a plain word")


def parse_star_word(text: str, k: int | None = None) -> tuple:
    """A word with holes ``*1 .. *k`` (``k`` inferred when omitted)."""
    tokens = _without(_scan(text), (Bracket,), "a star word")
    counts = star_counts(tokens)
    arity = k if k is not None else max(counts, default=0)
    missing = [i for i in range(1, arity + 1) if counts.get(i, 0) != 1]
    if missing or any(i > arity for i in counts):
        raise ParseError(f"expected each of *1 .. *{arity} exactly once", 1)
    return tokens


def parse_motzkin(text: str) -> tuple:
    """A bracket-string operand; balance is deliberately not checked here."""
    return _without(_scan(text), (Star,), "a motzkin word")


def parse_bracketed(text: str) -> BracketedWord:
    """A bracketed word; imbalance raises MotzkinError, not ParseError."""
    return decode(parse_motzkin(text))


def parse_star_bracketed(text: str, k: int) -> BracketedWord:
    """A bracketed word with holes ``*1 .. *k``."""
    tokens = tokenize(text)
    return decode_star(tuple(tokens), k)


def render(tokens) -> str:
    """Canonical text of a token sequence; inverse of :func:`tokenize`."""
    if not tokens:
        return "eps"
    plain_hole = set(star_counts(tokens)) == {1}
    parts = []
    for t in tokens:
        if isinstance(t, Star):
            parts.append("*" if plain_hole else f"*{t.index}")
        else:
            parts.append(str(t))
    out = "".join(parts)
    # the one word whose compact text would read as the eps keyword
    return "e p s" if out == "eps" else out


def render_bracketed(t: BracketedWord) -> str:
    return render(flatten(t))


def render_path(steps) -> str:
    return "".join(str(s) for s in steps)


def parse_location(text: str) -> Location:
    """An interval operand ``j..k``; range sanity is checked by Location."""
    m = re.fullmatch(r"\s*(\d+)\.\.(\d+)\s*", text)
    if m is None:
        raise ParseError(f"expected an interval like 2..6, got {text!r}", 1)
    return Location(int(m.group(1)), int(m.group(2)))
