"""Bracketed words: words whose letters may also be bracketed subwords.

A bracketed word is a flat sequence of atoms, where an atom is a symbol, a
star hole, or another bracketed word wrapped in the bracket operator.  An
atom that is itself a :class:`BracketedWord` denotes the bracketed factor
``[u]``; the sequence as a whole is the product of its atoms.  These values
form the free monoid generated by symbols together with all brackets, and
substitution plugs a bracketed word into a star hole at whatever depth the
hole sits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .words import Star, Symbol


@dataclass(frozen=True)
class BracketedWord:
    """A sequence of atoms; a BracketedWord atom is a bracketed factor."""

    atoms: tuple = ()

    def __post_init__(self) -> None:
        for a in self.atoms:
            if not isinstance(a, (Symbol, Star, BracketedWord)):
                raise ValueError(f"bad atom {a!r}")

    def __len__(self) -> int:
        return len(self.atoms)


EMPTY_BRACKETED = BracketedWord(())


def product(*parts: BracketedWord) -> BracketedWord:
    """Concatenate bracketed words (the monoid product)."""
    atoms: list = []
    for part in parts:
        atoms.extend(part.atoms)
    return BracketedWord(tuple(atoms))


def bracket(t: BracketedWord) -> BracketedWord:
    """Apply the bracket operator: the one-atom word ``[t]``."""
    return BracketedWord((t,))


def depth(t: BracketedWord) -> int:
    """Nesting depth: 0 for bracket-free words, else 1 + deepest factor."""
    d = 0
    for a in t.atoms:
        if isinstance(a, BracketedWord):
            d = max(d, 1 + depth(a))
    return d


def width(t: BracketedWord) -> int:
    """Largest atom count of any node, the top level included."""
    w = len(t.atoms)
    for a in t.atoms:
        if isinstance(a, BracketedWord):
            w = max(w, width(a))
    return w


def star_counts_bracketed(t: BracketedWord) -> dict[int, int]:
    """Multiplicity of each star index, at any depth."""
    counts: dict[int, int] = {}

    def walk(node: BracketedWord) -> None:
        for a in node.atoms:
            if isinstance(a, Star):
                counts[a.index] = counts.get(a.index, 0) + 1
            elif isinstance(a, BracketedWord):
                walk(a)

    walk(t)
    return counts


def is_plain_bracketed(t: BracketedWord) -> bool:
    """True when no star occurs at any depth."""
    return not star_counts_bracketed(t)


def is_star_bracketed(t: BracketedWord, k: int, *,
                      at_most_once: bool = False) -> bool:
    """Check that ``t`` carries the holes ``*1 .. *k``, each exactly once.

    With ``at_most_once=True`` a hole may also be absent; indices outside
    ``1 .. k`` or repeated indices always fail.
    """
    if k < 0:
        return False
    counts = star_counts_bracketed(t)
    if any(not 1 <= i <= k or n > 1 for i, n in counts.items()):
        return False
    if at_most_once:
        return True
    return all(i in counts for i in range(1, k + 1))


def splice_bracketed(t: BracketedWord,
                     mapping: Mapping[int, BracketedWord]) -> BracketedWord:
    """Replace mapped star holes, wherever they sit, by the given words.

    The replacement's atoms are inlined at the hole's position; unmapped
    holes are kept.  No arity checking here.
    """
    out: list = []
    for a in t.atoms:
        if isinstance(a, Star) and a.index in mapping:
            out.extend(mapping[a.index].atoms)
        elif isinstance(a, BracketedWord):
            out.append(splice_bracketed(a, mapping))
        else:
            out.append(a)
    return BracketedWord(tuple(out))


def substitute_bracketed(q: BracketedWord, values: Sequence[BracketedWord], *,
                         at_most_once: bool = False) -> BracketedWord:
    """Plug ``values[i-1]`` into hole ``*i`` of ``q``.

    ``q`` must carry holes ``*1 .. *len(values)`` exactly once each (or at
    most once in relaxed mode).  Raises ValueError on an arity mismatch.
    """
    k = len(values)
    if not is_star_bracketed(q, k, at_most_once=at_most_once):
        raise ValueError(f"expected holes *1 .. *{k}, each exactly once")
    return splice_bracketed(q, {i + 1: values[i] for i in range(k)})
