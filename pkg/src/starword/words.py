"""Words over an alphabet, and words with numbered star holes.

A word is a tuple of :class:`Symbol` values; the empty tuple is the empty
word.  A star word of arity k is a token tuple that additionally contains
each hole ``*1 .. *k`` exactly once.  Substitution plugs a word (or another
token sequence) into a hole, which is the basic move everything else in
this package is built from.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union


@dataclass(frozen=True)
class Symbol:
    """A single letter of the alphabet."""

    name: str

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("symbol name must be nonempty")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Star:
    """The numbered hole ``*i``; index is 1-based."""

    index: int = 1

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError("star index must be >= 1")

    def __str__(self) -> str:
        return f"*{self.index}"


Word = tuple[Symbol, ...]
# Token tuples mix symbols and stars; bracket tokens are added in motzkin.py.
Token = Union[Symbol, Star]
Tokens = tuple[Token, ...]

EMPTY: Word = ()


def word(letters: Iterable[str]) -> Word:
    """Build a word from an iterable of symbol names."""
    return tuple(Symbol(c) for c in letters)


def concat(*parts: Sequence) -> tuple:
    """Concatenate token sequences (the free-monoid product)."""
    out: list = []
    for part in parts:
        out.extend(part)
    return tuple(out)


def star_counts(tokens: Sequence) -> dict[int, int]:
    """Map each star index occurring in ``tokens`` to its multiplicity."""
    counts: dict[int, int] = {}
    for t in tokens:
        if isinstance(t, Star):
            counts[t.index] = counts.get(t.index, 0) + 1
    return counts


def is_word(tokens: Sequence) -> bool:
    """True when no token is a star.

    The letter set is deliberately open: everything here also runs over
    words whose letters are bracket tokens, which is how the bracketed
    layer reuses this module.
    """
    return not any(isinstance(t, Star) for t in tokens)


def is_star_word(tokens: Sequence, k: int, *, at_most_once: bool = False) -> bool:
    """Check that ``tokens`` is a star word of arity ``k``.

    Star indices must lie in ``1 .. k`` and each index must occur exactly
    once; every other token counts as a letter.  With ``at_most_once=True``
    an index may also be absent, the relaxed variant used by one-sided
    checks.
    """
    if k < 0:
        return False
    counts = star_counts(tokens)
    if any(not 1 <= i <= k for i in counts):
        return False
    if any(n > 1 for n in counts.values()):
        return False
    if at_most_once:
        return True
    return all(i in counts for i in range(1, k + 1))


def splice(tokens: Sequence, mapping: Mapping[int, Sequence]) -> tuple:
    """Replace each star whose index is in ``mapping`` by the given sequence.

    Stars with unmapped indices are kept, so this covers partial
    substitution (plug some holes, keep the rest) as well as composition
    (plug a starred sequence into a hole).  No arity checking is done here.
    """
    out: list = []
    for t in tokens:
        if isinstance(t, Star) and t.index in mapping:
            out.extend(mapping[t.index])
        else:
            out.append(t)
    return tuple(out)


def substitute(p: Sequence, values: Sequence[Sequence], *,
               at_most_once: bool = False) -> tuple:
    """Plug ``values[i-1]`` into hole ``*i`` of ``p`` and return the result.

    ``p`` must be a star word of arity ``len(values)``; in the relaxed mode
    holes may be absent and the corresponding values are dropped.  Raises
    ValueError on an arity mismatch.
    """
    k = len(values)
    if not is_star_word(p, k, at_most_once=at_most_once):
        raise ValueError(f"expected a star word with holes *1 .. *{k}")
    return splice(p, {i + 1: values[i] for i in range(k)})
