from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mcgjohnson.words import (ADMISSIBLE, LONGITUDE, X_ONLY, ReducedWord, WordError, boundary_word, commutator,
                              conjugate, generators, reduce_letters)

G = 3
letters = st.integers(1, 2 * G).flatmap(lambda k: st.sampled_from([k, -k]))
words = st.lists(letters, max_size=12).map(lambda ls: ReducedWord(tuple(ls), G))


def naive_reduce(ls):
    """Repeatedly cancel the first adjacent inverse pair (slow, obviously correct)."""
    ls = list(ls)
    changed = True
    while changed:
        changed = False
        for i in range(len(ls) - 1):
            if ls[i] == -ls[i + 1]:
                del ls[i:i + 2]
                changed = True
                break
    return tuple(ls)


@given(st.lists(letters, max_size=20))
def test_reduction_matches_naive(ls):
    assert reduce_letters(ls) == naive_reduce(ls)


@given(words, words, words)
def test_group_laws(a, b, c):
    e = ReducedWord.identity(G)
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == e
    assert (a * b).inverse() == b.inverse() * a.inverse()
    assert a ** 3 == a * a * a
    assert a ** -2 == a.inverse() * a.inverse()


@given(words)
def test_parse_round_trip(w):
    assert ReducedWord.parse(str(w), G) == w


@given(words, words)
def test_exponent_sums_are_a_homomorphism(a, b):
    s = [u + v for u, v in zip(a.exponent_sums(), b.exponent_sums())]
    assert list((a * b).exponent_sums()) == s
    assert commutator(a, b).exponent_sums() == (0,) * (2 * G)


@given(words, words)
def test_substitution_is_a_homomorphism(a, b):
    imgs = [ReducedWord.x(1, G) * g for g in generators(G)]
    assert (a * b).substitute(imgs) == a.substitute(imgs) * b.substitute(imgs)


def test_parse_examples_and_errors():
    w = ReducedWord.parse("x1 y2^-1 y2 x1^-1", 2)
    assert not w and len(w) == 0
    assert str(ReducedWord.parse("y1 x2^-1", 2)) == "y1 x2^-1"
    with pytest.raises(WordError):
        ReducedWord.parse("x3", 2)
    with pytest.raises(WordError):
        ReducedWord.parse("z1", 2)
    with pytest.raises(WordError):
        ReducedWord.parse("y1", 2, X_ONLY)
    with pytest.raises(WordError):
        ReducedWord.x(1, 2) * ReducedWord.x(1, 3)


def test_conjugate_and_commutator_conventions():
    x1, y1 = ReducedWord.x(1, 1), ReducedWord.y(1, 1)
    assert str(conjugate(x1, y1)) == "y1 x1 y1^-1"
    assert str(commutator(x1, y1)) == "x1 y1 x1^-1 y1^-1"


def test_boundary_words():
    assert str(boundary_word(2, ADMISSIBLE)) == "x1 y1 x1^-1 y1^-1 x2 y2 x2^-1 y2^-1"
    assert str(boundary_word(2, LONGITUDE)) == "x2^-1 x1^-1 y1 x1 y1^-1 y2 x2 y2^-1"
    for g in (1, 2, 3):
        for conv in (ADMISSIBLE, LONGITUDE):
            assert boundary_word(g, conv).exponent_sums() == (0,) * (2 * g)
    with pytest.raises(WordError):
        boundary_word(2, "other")
