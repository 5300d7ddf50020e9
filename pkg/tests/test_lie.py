from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcgjohnson.lattice import IntegerLattice, rank
from mcgjohnson.lie import (HTensorLie, LieVector, NotLieError, bracket, bracketing, filtration_Fmr, filtration_Lmr,
                            htensor_in_Fmr, letter_names, lie_class, lyndon_basis, lyndon_words,
                            map_b_matrix, to_associative, to_lyndon, witt, x_count)
from mcgjohnson.words import ReducedWord, commutator


def brute_lyndon(k, n):
    """Words strictly smaller than all their proper rotations, by exhaustive search."""
    return [w for w in product(range(k), repeat=n) if all(w < w[i:] + w[:i] for i in range(1, n))]


@pytest.mark.parametrize("k,n", [(k, n) for k in range(1, 5) for n in range(1, 6)])
def test_witt_counts_lyndon_words(k, n):
    words = lyndon_words(k, n)
    assert list(words) == brute_lyndon(k, n)
    assert witt(k, n) == len(words)


def test_witt_known_values():
    assert [witt(2, n) for n in range(1, 7)] == [2, 1, 2, 3, 6, 9]
    assert witt(4, 2) == 6 and witt(6, 3) == 70


def left_normed(word):
    """Associative expansion of [..[[a1,a2],a3],..,am]."""
    poly = {(word[0],): 1}
    for a in word[1:]:
        out = {}
        for m, c in poly.items():
            out[m + (a,)] = out.get(m + (a,), 0) + c
            out[(a,) + m] = out.get((a,) + m, 0) - c
        poly = {m: c for m, c in out.items() if c}
    return poly


def monomial_lattice(polys, size, m):
    idx = {w: i for i, w in enumerate(product(range(size), repeat=m))}
    return IntegerLattice.span([{idx[w]: c for w, c in p.items()} for p in polys if p], size ** m)


@pytest.mark.parametrize("g,m", [(1, 2), (1, 3), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)])
def test_filtration_matches_bracket_span(g, m):
    """L_m^r equals the span of all left-normed brackets with at least r letters from L."""
    size = 2 * g
    basis = lyndon_basis(size, m)
    for r in range(m + 1):
        brackets = [left_normed(w) for w in product(range(size), repeat=m) if x_count(w, g) >= r]
        expected = monomial_lattice(brackets, size, m)
        lat = filtration_Lmr(g, m, r)
        ours = monomial_lattice([to_associative({basis.words[b.index(1)]: 1}) for b in lat.basis], size, m)
        assert ours == expected
        assert lat.rank == expected.rank


lyndon_coords = st.integers(1, 4).flatmap(
    lambda n: st.dictionaries(st.sampled_from(lyndon_words(3, n)), st.integers(-3, 3), max_size=4)
    .map(lambda d, n=n: LieVector(3, n, d)))


@settings(max_examples=60, deadline=None)
@given(lyndon_coords)
def test_lyndon_round_trip(v):
    assert to_lyndon(v.associative()) == v.coords


@settings(max_examples=40, deadline=None)
@given(lyndon_coords, lyndon_coords, lyndon_coords)
def test_bracket_is_a_lie_bracket(u, v, w):
    assert (bracket(u, v) + bracket(v, u)).is_zero()
    jacobi = bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v))
    assert jacobi.is_zero()


def test_non_lie_polynomial_is_rejected():
    with pytest.raises(NotLieError):
        to_lyndon({(0, 1): 1})


def test_lie_class_of_commutators():
    g = 2
    x1, y1 = ReducedWord.x(1, g), ReducedWord.y(1, g)
    c = lie_class(commutator(x1, y1), 2)
    assert c.coords == {(0, 2): 1}
    assert c.format(g) == "1*[x1,y1]"
    cc = lie_class(commutator(commutator(x1, y1), x1), 3)
    assert cc.coords == {(0, 0, 2): -1}
    assert bracketing((0, 0, 2), letter_names(4)) == "[x1,[x1,y1]]"


@pytest.mark.parametrize("g,n", [(2, 2), (2, 3), (3, 2), (3, 3), (3, 4), (4, 3)])
def test_b_is_onto_so_kernel_rank_is_a_witt_difference(g, n):
    for restricted, size in ((True, g), (False, 2 * g)):
        M = map_b_matrix(g, n, restricted)
        assert rank(M) == witt(size, n + 1)
        assert M.ncols - rank(M) == size * witt(size, n) - witt(size, n + 1)


def test_apply_b_and_filtration_membership():
    g, size = 2, 4
    t = HTensorLie.from_pairs(size, 2, [(0, LieVector(size, 2, {(1, 2): 1}))])
    assert t.apply_b() == bracket(LieVector.generator(size, 0), LieVector(size, 2, {(1, 2): 1}))
    assert not t.in_lagrangian_part(g)
    # one L letter in the Lie part and an L letter in front: in F_2^2 but not F_2^3
    assert htensor_in_Fmr(t, g, 2) and not htensor_in_Fmr(t, g, 3)
    lat = filtration_Fmr(g, 2, 2)
    assert t.vector() in lat
    assert t.vector() not in filtration_Fmr(g, 2, 3)
