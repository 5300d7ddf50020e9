from __future__ import annotations

from itertools import permutations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcgjohnson import exterior as ext
from mcgjohnson.lattice import IntMatrix, kernel_lattice
from mcgjohnson.lie import witt

x, y, w3 = ext.x, ext.y, ext.w3


def perm_sign(p):
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inversions % 2 else 1


def test_wedge_antisymmetry():
    for p in permutations((0, 2, 3)):
        assert ext.WedgeVector.wedge(4, *p) == perm_sign(p) * ext.WedgeVector.wedge(4, 0, 2, 3)
    assert ext.WedgeVector.wedge(4, 1, 1, 3).is_zero()


@pytest.mark.parametrize("dim", [2, 4, 6, 8])
def test_exact_sequence(dim):
    rep = ext.exact_sequence_check(dim)
    assert rep.ok, rep.details
    assert rep.details["rank_image"] == comb(dim, 3)
    # theta is onto the degree-3 Lie part, so its kernel has this rank
    assert kernel_lattice(ext.theta_matrix(dim)).rank == dim * comb(dim, 2) - witt(dim, 3)


def test_K_is_zero_at_genus_1():
    assert ext.kernel_K(1).rank == 0


@pytest.mark.parametrize("g", [2, 3, 4])
def test_rank_of_K(g):
    # from genus 2 on, p and c together are onto the third power of H/L plus H/L
    assert ext.kernel_K(g).rank == comb(2 * g, 3) - comb(g, 3) - g


@pytest.mark.parametrize("g", [2, 3, 4])
def test_Km_ranks_count_triples(g):
    for m in range(5):
        expected = sum(comb(g, j) * comb(g, 3 - j) for j in range(m, 4))
        assert ext.Km_lattice(g, m).rank == expected


def test_contraction_examples():
    g = 2
    assert ext.contract_c(w3(g, x(1, g), y(1, g), x(2, g)), g) == {x(2, g): 1}
    assert ext.contract_c_mod_L(w3(g, x(1, g), y(1, g), x(2, g)), g) == {}
    assert ext.contract_c_mod_L(w3(g, x(1, g), y(1, g), y(2, g)), g) == {1: 1}
    assert ext.proj_p(w3(3, y(1, 3), y(2, 3), y(3, 3)), 3).coords == {(0, 1, 2): 1}
    assert ext.proj_p(w3(3, x(1, 3), y(2, 3), y(3, 3)), 3).is_zero()


@pytest.mark.parametrize("g", [2, 3, 4])
def test_K_generators_and_Km_generation(g):
    rep = ext.K_generators_check(g)
    assert rep.ok, rep.details
    for m in (2, 3):
        rep = ext.Km_generation_check(g, m)
        assert rep.ok, rep.details


def test_filtration_strict_at_genus_3():
    g = 3
    K1, K, K2 = ext.Km_lattice(g, 1), ext.kernel_K(g), ext.Km_lattice(g, 2)
    assert K2 < K < K1
    assert K2.witness_outside(K) is None
    assert K1.witness_outside(K) is not None and K.witness_outside(K2) is not None


def test_K_equals_K2_at_genus_2():
    assert ext.kernel_K(2) == ext.Km_lattice(2, 2)


symmetric = st.integers(1, 3).flatmap(
    lambda g: st.lists(st.integers(-2, 2), min_size=g * (g + 1) // 2, max_size=g * (g + 1) // 2).map(
        lambda vals, g=g: _sym(g, vals)))


def _sym(g, vals):
    A = [[0] * g for _ in range(g)]
    it = iter(vals)
    for i in range(g):
        for j in range(i, g):
            A[i][j] = A[j][i] = next(it)
    return A


@settings(max_examples=40, deadline=None)
@given(symmetric, symmetric)
def test_Bg_embedding_is_a_homomorphism_into_Bg(A, B):
    if len(A) != len(B):
        return
    g = len(A)
    SA, SB = ext.Bg_embed(A), ext.Bg_embed(B)
    assert ext.is_Bg(SA, g)
    C = [[A[i][j] + B[i][j] for j in range(g)] for i in range(g)]
    assert SA @ SB == ext.Bg_embed(C)


@settings(max_examples=30, deadline=None)
@given(symmetric, st.data())
def test_third_power_action_is_functorial_and_respects_K(A, data):
    g = len(A)
    if g < 2:
        return
    S = ext.Bg_embed(A)
    K = ext.kernel_K(g)
    coefs = data.draw(st.lists(st.integers(-2, 2), min_size=K.rank, max_size=K.rank))
    v = [sum(c * b[k] for c, b in zip(coefs, K.basis)) for k in range(K.ambient_rank)]
    w = ext.WedgeVector.from_vector(2 * g, 3, v)
    assert ext.sp3_action(S @ S, w, g) == ext.sp3_action(S, ext.sp3_action(S, w, g), g)
    assert ext.sp3_action(IntMatrix.identity(2 * g), w, g) == w
    assert ext.sp3_action(S, w, g).vector() in K


def test_pairing_is_symplectic():
    g = 3
    assert ext.pairing(x(1, g), y(1, g), g) == 1
    assert ext.pairing(y(1, g), x(1, g), g) == -1
    assert ext.pairing(x(1, g), y(2, g), g) == 0
    assert ext.is_symplectic(IntMatrix.identity(2 * g), g)
    with pytest.raises(ext.ExteriorError):
        ext.Bg_embed([[0, 1], [2, 0]])


def test_eta_expansion_of_a_basis_wedge():
    g = 2
    x1, x2, y1 = x(1, g), x(2, g), y(1, g)
    expected = {(x1, (x2, y1)): 1, (x2, (x1, y1)): -1, (y1, (x1, x2)): 1}  # x2 (x) (y1^x1) = -x2 (x) (x1^y1)
    assert ext.eta(w3(g, x1, x2, y1)) == expected
    assert ext.eta(ext.WedgeVector.zero(4, 3)) == {}
    assert ext.theta({(x1, (x1, y1)): 1}, 4).coords == {(0, 0, 2): 1}


def test_contraction_sign_and_lagrangian_vanishing():
    g = 3
    assert ext.contract_c(w3(g, x(1, g), x(2, g), y(1, g)), g) == {x(2, g): -1}
    assert ext.contract_c(w3(g, x(1, g), x(2, g), x(3, g)), g) == {}
    assert ext.contract_c(w3(g, x(1, g), y(1, g), y(2, g)), g) == {y(2, g): 1}


def test_family_two_alone_does_not_generate_K():
    g = 3
    fam2 = ext.span(ext.K_families(g)["family2"], 2 * g)
    K = ext.kernel_K(g)
    assert fam2 < K
    assert any(d != 1 for d in K.quotient_invariants(fam2))


def _transvection(g, pairs):
    """Symplectic matrix with y_a -> y_a + x_b for each (a, b) in pairs."""
    rows = [[int(r == c) for c in range(2 * g)] for r in range(2 * g)]
    for a, b in pairs:
        rows[x(b, g)][y(a, g)] += 1
    return IntMatrix.from_rows(rows)


def test_minus_one_action_examples():
    g = 3
    i, j, k = 1, 2, 3
    S = _transvection(g, [(k, k)])
    assert ext.sp3_minus_one(S, w3(g, x(i, g), x(j, g), y(k, g)), g) == w3(g, x(i, g), x(j, g), x(k, g))
    S = _transvection(g, [(i, j), (j, i)])
    assert ext.is_Bg(S, g)
    lhs = ext.sp3_minus_one(S, w3(g, y(i, g), y(j, g), y(k, g)), g)
    rhs = (w3(g, y(i, g), x(i, g), y(k, g)) + w3(g, x(j, g), y(j, g), y(k, g))
           + w3(g, x(j, g), x(i, g), y(k, g)))
    assert lhs == rhs
