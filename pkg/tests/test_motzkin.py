"""Balance checking, the encode/decode pair and the path view.

The expected counts come from the recurrence
T(n+1) = m*T(n) + sum_k T(k)*T(n-1-k) over an m-letter alphabet, computed
here independently of the enumerator (which is generate-and-filter).
"""

from itertools import product as cartesian

import pytest
from hypothesis import given
from hypothesis import strategies as st

from starword.bracketed import BracketedWord, bracket, product
from starword.grammar import parse_bracketed, parse_motzkin, render, render_path
from starword.motzkin import (CLOSE, OPEN, Level, MotzkinError, Slope, decode,
                              decode_star, encode, encode_star,
                              enumerate_motzkin, from_path, is_motzkin,
                              is_star_motzkin, motzkin_violation,
                              substitute_motzkin, to_path)
from starword.words import Star, Symbol, word


def mz(text):
    return parse_motzkin(text)


def counts_by_recurrence(n, m):
    t = [1]
    for i in range(n):
        t.append(m * t[i] + sum(t[k] * t[i - 1 - k] for k in range(i)))
    return t


def motzkin_upto(n, letters):
    return [m for size in range(n + 1) for m in enumerate_motzkin(size, letters)]


def test_validation_trio():
    assert is_motzkin(mz("[[x][y]]z"))
    assert motzkin_violation(mz("[x][yz")) == ("unbalanced", 4)
    assert motzkin_violation(mz("x][y[z]")) == ("prefix", 2)


def test_violation_positions():
    assert motzkin_violation(mz("]")) == ("prefix", 1)
    assert motzkin_violation(mz("[")) == ("unbalanced", 1)
    assert motzkin_violation(mz("][")) == ("prefix", 1)
    assert motzkin_violation(mz("[]x[")) == ("unbalanced", 4)
    assert motzkin_violation(mz("[[]")) == ("unbalanced", 1)
    assert motzkin_violation(()) is None


def test_is_motzkin_rejects_stars():
    assert not is_motzkin((Star(1),))
    assert is_star_motzkin((Star(1),), 1)
    assert not is_star_motzkin((OPEN, Star(1)), 1)
    assert is_star_motzkin((OPEN, Star(1), CLOSE, Star(2)), 2)
    assert not is_star_motzkin((Star(1), Star(1)), 1)
    assert is_star_motzkin(mz("[x]"), 0)


def test_encode_golden():
    f = parse_bracketed("[[abc]ab]")
    assert encode(f) == mz("[[abc]ab]")
    assert render(encode(f)) == "[[abc]ab]"
    assert encode(BracketedWord()) == ()


def test_encode_rejects_holes_and_encode_star_accepts_them():
    q = decode_star(mz("[") + (Star(1),) + mz("ab]"), 1)
    with pytest.raises(ValueError):
        encode(q)
    assert encode_star(q, 1) == (OPEN, Star(1), Symbol("a"), Symbol("b"), CLOSE)
    with pytest.raises(ValueError):
        encode_star(q, 2)


def test_decode_golden_and_errors():
    assert decode(mz("[[abc]ab]")) == parse_bracketed("[[abc]ab]")
    assert decode(()) == BracketedWord()
    with pytest.raises(MotzkinError) as err:
        decode(mz("[x"))
    assert (err.value.reason, err.value.position) == ("unbalanced", 1)
    with pytest.raises(MotzkinError) as err:
        decode(mz("x]"))
    assert (err.value.reason, err.value.position) == ("prefix", 2)


def test_decode_star_checks_balance_then_arity():
    with pytest.raises(MotzkinError):
        decode_star(mz("x]") + (Star(1),), 1)
    with pytest.raises(ValueError):
        decode_star(mz("xy"), 1)
    q = decode_star((Star(1),) + mz("y"), 1)
    assert encode_star(q, 1) == (Star(1), Symbol("y"))


def test_round_trips_exhaustively():
    for m in motzkin_upto(6, word("x")):
        assert encode(decode(m)) == m


def test_decode_is_a_homomorphism():
    words = motzkin_upto(4, word("x"))
    for m1 in words:
        for m2 in words:
            assert decode(m1 + m2) == product(decode(m1), decode(m2))
    for m in words:
        assert decode((OPEN,) + m + (CLOSE,)) == bracket(decode(m))
        assert encode(bracket(decode(m))) == (OPEN,) + m + (CLOSE,)


def test_substitute_motzkin_golden():
    p = (Star(1),) + mz("yxy")
    assert substitute_motzkin(p, (mz("xyx"),)) == mz("xyxyxy")
    two = (OPEN, Star(1), CLOSE, Star(2))
    assert substitute_motzkin(two, (mz("x"), mz("[]"))) == mz("[x][]")


def test_substitute_motzkin_validation():
    with pytest.raises(ValueError):
        substitute_motzkin(mz("xy"), (mz("x"),))
    with pytest.raises(ValueError):
        substitute_motzkin((Star(1),), (mz("x"), mz("y")))
    with pytest.raises(ValueError):
        substitute_motzkin((Star(1),), (mz("[x"),))
    out = substitute_motzkin((Star(2), Symbol("z")), (mz("a"), mz("b")),
                             at_most_once=True)
    assert out == mz("bz")


def test_substitution_preserves_balance_on_a_sweep():
    values = motzkin_upto(3, word("x"))
    contexts = [(Star(1),) + m for m in values] + \
               [m + (Star(1),) for m in values] + \
               [(OPEN, Star(1), CLOSE)]
    for p in contexts:
        for v in values:
            assert is_motzkin(substitute_motzkin(p, (v,)))


def test_path_golden():
    steps = to_path(mz("[[x][y]]z"))
    assert steps == (Slope.UP, Slope.UP, Level(Symbol("x")), Slope.DOWN,
                     Slope.UP, Level(Symbol("y")), Slope.DOWN, Slope.DOWN,
                     Level(Symbol("z")))
    assert render_path(steps) == "UUxDUyDDz"
    assert from_path(steps) == mz("[[x][y]]z")


def test_path_round_trip_exhaustively():
    for m in motzkin_upto(5, word("xy")):
        assert from_path(to_path(m)) == m


def test_bad_paths_are_rejected():
    with pytest.raises(ValueError):
        to_path(mz("[x"))
    with pytest.raises(MotzkinError) as err:
        from_path((Slope.DOWN, Slope.UP))
    assert err.value.reason == "prefix"
    with pytest.raises(MotzkinError) as err:
        from_path((Slope.UP, Level(Symbol("x"))))
    assert err.value.reason == "unbalanced"
    with pytest.raises(ValueError):
        from_path(("U",))


def test_enumerate_golden_order():
    x = word("x")
    assert [render(m) for m in enumerate_motzkin(2, x)] == ["xx", "[]"]
    assert [render(m) for m in enumerate_motzkin(3, x)] == \
        ["xxx", "x[]", "[x]", "[]x"]
    assert [render(m) for m in enumerate_motzkin(2, word("yx"))] == \
        ["xx", "xy", "yx", "yy", "[]"]
    assert enumerate_motzkin(0, x) == [()]


def test_counts_match_recurrence():
    expected = counts_by_recurrence(7, 1)
    assert expected[:5] == [1, 1, 2, 4, 9]
    got = [len(enumerate_motzkin(n, word("x"))) for n in range(8)]
    assert got == expected
    two = counts_by_recurrence(6, 2)
    got = [len(enumerate_motzkin(n, word("xy"))) for n in range(7)]
    assert got == two


_atom = st.recursive(
    st.sampled_from(word("xy")),
    lambda inner: st.builds(lambda xs: BracketedWord(tuple(xs)),
                            st.lists(inner, max_size=3)),
    max_leaves=8,
)
_tree = st.builds(lambda xs: BracketedWord(tuple(xs)), st.lists(_atom, max_size=4))


@given(_tree)
def test_any_tree_flattens_to_a_motzkin_word_and_back(t):
    m = encode(t)
    assert is_motzkin(m)
    assert decode(m) == t
