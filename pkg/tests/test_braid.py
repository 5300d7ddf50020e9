from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcgjohnson import braid as br
from mcgjohnson import exterior as ext
from mcgjohnson import mcg
from mcgjohnson.lie import witt
from mcgjohnson.words import X_ONLY, ReducedWord, commutator


def xw(text, g):
    return ReducedWord.parse(text, g, X_ONLY)


def test_A12_longitudes_and_action():
    a = br.artin_generator(2, 1, 2)
    assert [str(l) for l in a.longitudes] == ["x2^-1", "x2^-1 x1^-1 x2"]
    # Artin action of sigma_1^2, written out by hand
    assert [str(w) for w in a.images()] == ["x2^-1 x1 x2", "x2^-1 x1^-1 x2 x1 x2"]
    assert a.act(xw("x1 x2", 2)) == xw("x1 x2", 2)
    assert a.linking_matrix() == [[0, -1], [-1, 0]]


@pytest.mark.parametrize("g", [2, 3, 4])
def test_artin_generators_fix_outer_strands_and_product(g):
    prod = xw(" ".join(f"x{i}" for i in range(1, g + 1)), g)
    for a in br.artin_generators(g):
        i, j = int(a.name[1]), int(a.name[2])
        assert a.act(prod) == prod
        for k in range(1, g + 1):
            if k < i or k > j:
                assert a.images()[k - 1] == xw(f"x{k}", g)
        A = a.linking_matrix()
        assert A[i - 1][j - 1] == A[j - 1][i - 1] == -1
        assert sum(map(abs, sum(A, []))) == 2


def test_identity_and_inverse():
    e = br.PureBraid.identity(3)
    assert e.is_identity() and e.linking_matrix() == [[0] * 3] * 3
    for a in br.artin_generators(3):
        assert br.compose(a, br.inverse(a)).is_identity()
        assert br.compose(br.inverse(a), a).is_identity()


def test_framings_and_invalid_longitudes():
    f = br.framing_braid(3, [1, 0, 0])
    assert [row[i] for i, row in enumerate(f.linking_matrix())] == [1, 0, 0]
    with pytest.raises(br.BraidError):
        br.PureBraid(2, (xw("x2", 2), xw("", 2)))


braid_words = st.lists(st.tuples(st.sampled_from(["A12", "A13", "A23"]), st.sampled_from(["", "^-1"])),
                       min_size=1, max_size=4).map(lambda ts: " ".join(a + e for a, e in ts))


@settings(max_examples=25, deadline=None)
@given(braid_words, braid_words)
def test_homomorphism_properties(u, v):
    g = 3
    a, b = br.parse_braid_word(u, g), br.parse_braid_word(v, g)
    ab = br.compose(a, b)
    La, Lb, Lab = a.linking_matrix(), b.linking_matrix(), ab.linking_matrix()
    assert Lab == [[La[i][j] + Lb[i][j] for j in range(g)] for i in range(g)]
    assert br.psi(ab).images == mcg.compose(br.psi(a), br.psi(b)).images
    assert br.kappa(ab).images == mcg.compose(br.kappa(a), br.kappa(b)).images
    assert ab.act(xw("x1", g)) == a.act(b.act(xw("x1", g)))


@settings(max_examples=25, deadline=None)
@given(braid_words)
def test_psi_matrix_and_extension(u):
    g = 3
    a = br.parse_braid_word(u, g)
    p = br.psi(a)
    A = a.linking_matrix()
    assert mcg.symplectic_matrix(p) == ext.Bg_embed([[-c for c in row] for row in A])
    assert mcg.is_in_Lbar(p)
    assert mcg.cal_J_is_zero(mcg.cal_J(p))


def test_json_forms():
    a = br.artin_generator(3, 1, 3)
    assert br.PureBraid.from_json(a.to_json()) == a
    b = br.PureBraid.from_json({"strands": 3, "word": "A12 A13^-1", "framings": [1, 0, 2]})
    assert b.framings == (1, 0, 2)
    assert b.longitudes == br.compose(br.parse_braid_word("A12 A13^-1", 3),
                                      br.framing_braid(3, [1, 0, 2])).longitudes
    with pytest.raises(br.BraidError):
        br.PureBraid.from_json({"word": "A12"})
    with pytest.raises(br.BraidError):
        br.parse_braid_word("B12", 3)


def test_delta_examples():
    g = 2
    assert str(br.delta(xw("x1", g))) == "x1 y1 x1^-1 y1^-1"
    d = br.delta(xw("x1 x2^-1", g))
    x1, y1, x2, y2 = (ReducedWord.x(1, g), ReducedWord.y(1, g), ReducedWord.x(2, g), ReducedWord.y(2, g))
    assert d == commutator(x1, y1) * commutator(x2, y2).inverse()


@pytest.mark.parametrize("g,n", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_delta_is_injective_on_graded_quotients(g, n):
    rep = br.delta_star_rank(g, n)
    assert rep["rank"] == witt(g, n)
    assert rep["injective"]


def test_kappa_image_properties():
    a = br.artin_generator(3, 1, 2)
    k = br.kappa(a)
    assert mcg.is_torelli(k) and mcg.johnson_tau(k).is_zero()
    assert mcg.weight_degree(k, 3).at_least(2)
    assert mcg.johnson_morita(k, 2) == br.kappa_J_formula(a, 1)


def test_kappa_depth_doubles_on_commutators():
    rng = random.Random(5)
    jet = br.random_commutator_jet(3, 2, rng, 5)
    assert jet.weight_degree().at_least(2)
    kj = br.kappa_jet(jet)
    assert mcg.weight_degree(kj, 5).at_least(4)
    assert mcg.johnson_morita(kj, 4) == br.kappa_J_formula(jet, 2)


def test_jets_agree_with_words():
    a, b = br.artin_generator(3, 1, 2), br.artin_generator(3, 2, 3)
    c = br.commutator(a, b)
    jc = br.jet_commutator(br.BraidJet.from_braid(a, 4), br.BraidJet.from_braid(b, 4))
    assert jc.longitudes == br.BraidJet.from_braid(c, 4).longitudes
    assert br.psi_jet(jc).images == mcg.EndoJet.from_endo(br.psi(c), 4).images
    assert br.kappa_jet(br.BraidJet.from_braid(a, 4)).images == mcg.EndoJet.from_endo(br.kappa(a), 4).images


def test_J_b_examples():
    assert br.J_b(br.PureBraid.identity(3)).is_zero()
    a12, a13, a23 = br.artin_generators(3)
    c = br.commutator(a12, a13)
    value = br.J_b(c)
    assert not value.is_zero()
    d = br.commutator(a13, a23)
    assert br.J_b(br.compose(c, d)) == value + br.J_b(d)
    with pytest.raises(br.BraidError):
        br.J_b(a12)


def test_psi_in_kernel_iff_depth_three():
    a12, a13, a23 = br.artin_generators(3)
    depth2 = br.commutator(a12, a13)
    depth3 = br.commutator(depth2, a23)
    assert not mcg.johnson_tau(br.psi(depth2)).is_zero()
    assert br.braid_weight_degree(depth3, 4).at_least(3)
    assert mcg.johnson_tau(br.psi(depth3)).is_zero()


def test_rank_function():
    assert br.rank_r(4, 2) == 4
    assert br.rank_r(3, 3) == witt(1, 3) + witt(2, 3) == 2
    assert [br.rank_r(g, 1, framed=True) for g in range(1, 6)] == [g * (g + 1) // 2 for g in range(1, 6)]
    assert [br.rank_r(g, 2) for g in range(1, 7)] == [0, 0, 1, 4, 10, 20]
