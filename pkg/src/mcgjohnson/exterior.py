"""Exterior algebra of the symplectic module H = Z^{2g} and the maps built on it.

Basis indices are 0-based: 0..g-1 are x_1..x_g (the Lagrangian L) and
g..2g-1 are y_1..y_g. The pairing is x_i.y_j = delta_ij = -y_j.x_i, zero on
L and on span{y}. The quotient H/L has basis ybar_1..ybar_g, indexed 0..g-1.

Wedge vectors are sparse dicts over strictly increasing index tuples. Symplectic
matrices act on column vectors: column j of S is the image of basis vector j.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from .lattice import IntMatrix, IntegerLattice, kernel_lattice, image_lattice
from .lie import LieVector, bracket, lyndon_basis

Tuple = tuple[int, ...]


class ExteriorError(ValueError):
    pass


# -- wedge vectors -------------------------------------------------------------

def sort_with_sign(indices: Sequence[int]) -> tuple[int, Tuple]:
    """Sign and sorted order of a wedge of basis vectors (sign 0 on repeats)."""
    idx = list(indices)
    if len(set(idx)) < len(idx):
        return 0, ()
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, tuple(idx)


@dataclass(frozen=True)
class WedgeVector:
    """Element of the k-th exterior power of a free module of rank ``dim``.

    ``ambient`` is a label ("H", "H/L" or "V") used for display and for
    guarding against mixing the full module with the quotient.
    """

    dim: int
    degree: int
    coords: Mapping[Tuple, int]
    ambient: str = "H"

    def __post_init__(self):
        clean = {}
        for t, c in self.coords.items():
            if len(t) != self.degree or any(a >= b for a, b in zip(t, t[1:])):
                raise ExteriorError(f"index tuple {t} is not strictly increasing of length {self.degree}")
            if t and not 0 <= t[0] <= t[-1] < self.dim:
                raise ExteriorError(f"index tuple {t} outside rank {self.dim}")
            if c:
                clean[t] = c
        object.__setattr__(self, "coords", clean)

    @classmethod
    def zero(cls, dim: int, degree: int, ambient: str = "H") -> WedgeVector:
        return cls(dim, degree, {}, ambient)

    @classmethod
    def wedge(cls, dim: int, *indices: int, coef: int = 1, ambient: str = "H") -> WedgeVector:
        sign, t = sort_with_sign(indices)
        return cls(dim, len(indices), {t: sign * coef} if sign else {}, ambient)

    @classmethod
    def from_vector(cls, dim: int, degree: int, v: Sequence[int], ambient: str = "H") -> WedgeVector:
        basis = wedge_basis(dim, degree)
        if len(v) != len(basis):
            raise ExteriorError("vector length does not match exterior power rank")
        return cls(dim, degree, {t: c for t, c in zip(basis, v) if c}, ambient)

    def _check(self, other: WedgeVector) -> None:
        if (self.dim, self.degree, self.ambient) != (other.dim, other.degree, other.ambient):
            raise ExteriorError("wedge vectors live in different modules")

    def __add__(self, other: WedgeVector) -> WedgeVector:
        self._check(other)
        out = dict(self.coords)
        for t, c in other.coords.items():
            out[t] = out.get(t, 0) + c
        return WedgeVector(self.dim, self.degree, out, self.ambient)

    def __neg__(self) -> WedgeVector:
        return WedgeVector(self.dim, self.degree, {t: -c for t, c in self.coords.items()}, self.ambient)

    def __sub__(self, other: WedgeVector) -> WedgeVector:
        return self + (-other)

    def __rmul__(self, k: int) -> WedgeVector:
        return WedgeVector(self.dim, self.degree, {t: k * c for t, c in self.coords.items()}, self.ambient)

    def is_zero(self) -> bool:
        return not self.coords

    def vector(self) -> list[int]:
        basis = wedge_basis(self.dim, self.degree)
        index = {t: i for i, t in enumerate(basis)}
        v = [0] * len(basis)
        for t, c in self.coords.items():
            v[index[t]] = c
        return v

    def format(self, genus: int | None = None) -> str:
        if not self.coords:
            return "0"
        names = basis_names(self.dim, genus, self.ambient)
        return " + ".join(f"{c}*" + "^".join(names[i] for i in t) for t, c in sorted(self.coords.items()))


def basis_names(dim: int, genus: int | None = None, ambient: str = "H") -> list[str]:
    if ambient == "H/L":
        return [f"ybar{i + 1}" for i in range(dim)]
    if ambient == "V":
        return [f"v{i + 1}" for i in range(dim)]
    g = genus if genus is not None else dim // 2
    return [f"x{i + 1}" if i < g else f"y{i - g + 1}" for i in range(dim)]


def wedge_basis(dim: int, degree: int) -> list[Tuple]:
    return list(combinations(range(dim), degree))


def x(i: int, genus: int) -> int:
    """Basis index of x_i (1-based i)."""
    return i - 1


def y(i: int, genus: int) -> int:
    """Basis index of y_i (1-based i)."""
    return genus + i - 1


def w3(genus: int, a: int, b: int, c: int, coef: int = 1) -> WedgeVector:
    """Convenience constructor for a basis wedge in the third power of H."""
    return WedgeVector.wedge(2 * genus, a, b, c, coef=coef)


# -- symplectic module ---------------------------------------------------------

def pairing(a: int, b: int, genus: int) -> int:
    """Intersection pairing of basis vectors a and b of H."""
    if a < genus <= b and b - genus == a:
        return 1
    if b < genus <= a and a - genus == b:
        return -1
    return 0


def pairing_matrix(genus: int) -> IntMatrix:
    n = 2 * genus
    return IntMatrix.from_rows([[pairing(a, b, genus) for b in range(n)] for a in range(n)])


def in_lagrangian(v: Mapping[int, int], genus: int) -> bool:
    return all(i < genus for i, c in v.items() if c)


# -- the maps eta, theta, c, p -------------------------------------------------

TensorKey = tuple[int, tuple[int, int]]


def eta(w: WedgeVector) -> dict[TensorKey, int]:
    """h1^h2^h3 -> h1(x)(h2^h3) + h2(x)(h3^h1) + h3(x)(h1^h2), as {(h, pair): coef}."""
    if w.degree != 3:
        raise ExteriorError("eta is defined on the third exterior power")
    out: dict[TensorKey, int] = {}
    for (a, b, c), coef in w.coords.items():
        for h, p, q in ((a, b, c), (b, c, a), (c, a, b)):
            s, pair = sort_with_sign((p, q))
            out[(h, pair)] = out.get((h, pair), 0) + s * coef
    return {k: v for k, v in out.items() if v}


def eta_preimage(t: Mapping[TensorKey, int], dim: int, ambient: str = "H") -> WedgeVector | None:
    """The unique w with eta(w) = t, or None if t is not in the image."""
    coords = {}
    for (h, (p, q)), c in t.items():
        if c and h < p:
            coords[(h, p, q)] = c
    w = WedgeVector(dim, 3, coords, ambient)
    clean = {k: v for k, v in t.items() if v}
    return w if eta(w) == clean else None


def tensor_basis(dim: int) -> list[TensorKey]:
    return [(h, pair) for h in range(dim) for pair in combinations(range(dim), 2)]


def tensor_vector(t: Mapping[TensorKey, int], dim: int) -> list[int]:
    index = {k: i for i, k in enumerate(tensor_basis(dim))}
    v = [0] * len(index)
    for k, c in t.items():
        v[index[k]] += c
    return v


def eta_matrix(dim: int) -> IntMatrix:
    index = {k: i for i, k in enumerate(tensor_basis(dim))}
    cols = []
    for t in wedge_basis(dim, 3):
        img = eta(WedgeVector(dim, 3, {t: 1}, "V"))
        cols.append({index[k]: c for k, c in img.items()})
    return IntMatrix.from_sparse_columns(len(index), cols)


def theta(t: Mapping[TensorKey, int], dim: int) -> LieVector:
    """v1(x)(v2^v3) -> [v1,[v2,v3]] in the Lyndon basis of the degree-3 Lie part."""
    out = LieVector.zero(dim, 3)
    for (h, (p, q)), c in t.items():
        inner = LieVector(dim, 2, {(p, q): 1})
        out = out + c * bracket(LieVector.generator(dim, h), inner)
    return out


def theta_matrix(dim: int) -> IntMatrix:
    target = lyndon_basis(dim, 3)
    cols = []
    for key in tensor_basis(dim):
        img = theta({key: 1}, dim)
        cols.append({target.index[w]: c for w, c in img.coords.items()})
    return IntMatrix.from_sparse_columns(len(target), cols)


def contract_c(w: WedgeVector, genus: int) -> dict[int, int]:
    """(h1.h2)h3 + (h2.h3)h1 + (h3.h1)h2, as a sparse vector on the basis of H."""
    if w.degree != 3:
        raise ExteriorError("the contraction is defined on the third exterior power")
    out: dict[int, int] = {}
    for (a, b, c), coef in w.coords.items():
        for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
            s = pairing(p, q, genus)
            if s:
                out[r] = out.get(r, 0) + s * coef
    return {k: v for k, v in out.items() if v}


def mod_L(v: Mapping[int, int], genus: int) -> dict[int, int]:
    """Reduce an H vector to H/L, indexing ybar_i by i-1."""
    return {k - genus: c for k, c in v.items() if c and k >= genus}


def contract_c_mod_L(w: WedgeVector, genus: int) -> dict[int, int]:
    return mod_L(contract_c(w, genus), genus)


def proj_p(w: WedgeVector, genus: int) -> WedgeVector:
    """Projection to the third exterior power of H/L: drop wedges with an x."""
    coords = {tuple(i - genus for i in t): c for t, c in w.coords.items() if t[0] >= genus}
    return WedgeVector(genus, w.degree, coords, "H/L")


def _sparse(v: Mapping[int, int], offset: int = 0) -> dict[int, int]:
    return {k + offset: c for k, c in v.items() if c}


def p_matrix(genus: int) -> IntMatrix:
    target = {t: i for i, t in enumerate(wedge_basis(genus, 3))}
    cols = []
    for t in wedge_basis(2 * genus, 3):
        img = proj_p(WedgeVector(2 * genus, 3, {t: 1}), genus)
        cols.append({target[s]: c for s, c in img.coords.items()})
    return IntMatrix.from_sparse_columns(len(target), cols)


def p_c_matrix(genus: int) -> IntMatrix:
    """Stacked matrix of p and (c followed by reduction mod L)."""
    n3 = len(wedge_basis(genus, 3))
    cols = []
    for t in wedge_basis(2 * genus, 3):
        w = WedgeVector(2 * genus, 3, {t: 1})
        col = {}
        img = proj_p(w, genus)
        target = {s: i for i, s in enumerate(wedge_basis(genus, 3))}
        for s, c in img.coords.items():
            col[target[s]] = c
        col.update(_sparse(contract_c_mod_L(w, genus), n3))
        cols.append(col)
    return IntMatrix.from_sparse_columns(n3 + genus, cols)


# -- the subgroups K_m and K ---------------------------------------------------

def x_letters(t: Tuple, genus: int) -> int:
    return sum(1 for i in t if i < genus)


def Km_lattice(genus: int, m: int) -> IntegerLattice:
    """Span of basis wedges with at least m factors in L."""
    if not 0 <= m <= 4:
        raise ExteriorError("m must lie in 0..4")
    basis = wedge_basis(2 * genus, 3)
    return IntegerLattice.coordinate([i for i, t in enumerate(basis) if x_letters(t, genus) >= m], len(basis))


def kernel_K(genus: int) -> IntegerLattice:
    return kernel_lattice(p_c_matrix(genus))


def K_families(genus: int, restricted: bool = True) -> dict[str, list[WedgeVector]]:
    """The four generator families of K.

    Family 2 (x_i^x_j^y_k) is listed with i < j, which covers every pair with
    i != j up to sign; ``restricted=False`` lists all ordered triples instead,
    including degenerate ones that vanish.
    """
    g = genus
    rng = range(1, g + 1)
    fam1, fam2, fam3, fam4 = [], [], [], []
    for i, j, k in product(rng, repeat=3):
        a = w3(g, x(i, g), x(j, g), x(k, g))
        if not a.is_zero():
            fam1.append(a)
        if (i < j) if restricted else True:
            b = w3(g, x(i, g), x(j, g), y(k, g))
            if not b.is_zero():
                fam2.append(b)
        if len({i, j, k}) == 3:
            fam3.append(w3(g, x(i, g), y(j, g), y(k, g)))
            fam4.append(w3(g, y(i, g), x(i, g), y(k, g)) + w3(g, x(j, g), y(j, g), y(k, g)))
    return {"family1": fam1, "family2": fam2, "family3": fam3, "family4": fam4}


def span(vectors: Iterable[WedgeVector], dim: int, degree: int = 3) -> IntegerLattice:
    return IntegerLattice.span([v.vector() for v in vectors], len(wedge_basis(dim, degree)))


@dataclass
class LatticeReport:
    name: str
    ok: bool
    details: dict = field(default_factory=dict)


def K_generators_check(genus: int) -> LatticeReport:
    """Compare the lattice generated by the four families with ker(p + c)."""
    fams = K_families(genus)
    dim = 2 * genus
    generated = span((v for vs in fams.values() for v in vs), dim)
    K = kernel_K(genus)
    details = {
        "rank_K": K.rank,
        "rank_generated": generated.rank,
        "family_sizes": {k: len(v) for k, v in fams.items()},
        "family2_alone_rank": span(fams["family2"], dim).rank,
    }
    ok = generated == K
    if not ok and generated <= K:
        details["quotient_invariants"] = K.quotient_invariants(generated)
    return LatticeReport(f"K generators g={genus}", ok, details)


# -- symplectic action ---------------------------------------------------------

def _square(S: IntMatrix, genus: int) -> None:
    if S.nrows != S.ncols or S.nrows != 2 * genus:
        raise ExteriorError(f"expected a {2 * genus}x{2 * genus} matrix, got {S.nrows}x{S.ncols}")


def is_symplectic(S: IntMatrix, genus: int) -> bool:
    _square(S, genus)
    omega = pairing_matrix(genus)
    return S.transpose() @ omega @ S == omega


def is_Bg(S: IntMatrix, genus: int) -> bool:
    """Symplectic and the identity on L."""
    if not is_symplectic(S, genus):
        return False
    n = 2 * genus
    return all(S[r, c] == (1 if r == c else 0) for c in range(genus) for r in range(n))


def Bg_embed(A: Sequence[Sequence[int]]) -> IntMatrix:
    """Block matrix (I A; 0 I) for a symmetric integer matrix A."""
    g = len(A)
    if any(len(row) != g for row in A):
        raise ExteriorError("A must be square")
    if any(A[i][j] != A[j][i] for i in range(g) for j in range(g)):
        raise ExteriorError("A must be symmetric")
    rows = []
    for r in range(2 * g):
        row = [0] * (2 * g)
        row[r] = 1
        if r < g:
            for j in range(g):
                row[g + j] = A[r][j]
        rows.append(row)
    return IntMatrix.from_rows(rows)


def sp3_action(S: IntMatrix, w: WedgeVector, genus: int) -> WedgeVector:
    """Third exterior power of S applied to w."""
    _square(S, genus)
    cols = [{r: S[r, c] for r in range(S.nrows) if S[r, c]} for c in range(S.ncols)]
    out: dict[Tuple, int] = {}
    for (a, b, c), coef in w.coords.items():
        for (i, ci), (j, cj), (k, ck) in product(cols[a].items(), cols[b].items(), cols[c].items()):
            s, t = sort_with_sign((i, j, k))
            if s:
                out[t] = out.get(t, 0) + s * coef * ci * cj * ck
    return WedgeVector(w.dim, 3, out, w.ambient)


def sp3_minus_one(S: IntMatrix, w: WedgeVector, genus: int) -> WedgeVector:
    return sp3_action(S, w, genus) - w


def elementary_symmetric(genus: int) -> list[list[list[int]]]:
    """E_ii and E_ij + E_ji, the standard generators of symmetric matrices."""
    out = []
    for i in range(genus):
        for j in range(i, genus):
            A = [[0] * genus for _ in range(genus)]
            A[i][j] = A[j][i] = 1
            out.append(A)
    return out


def Km_generation_check(genus: int, m: int) -> LatticeReport:
    """Check (S-1)K_{m-1} <= K_m over B_g generators, and that these images with K_{m+1} span K_m."""
    if not 2 <= m <= 3:
        raise ExteriorError("m must be 2 or 3")
    dim = 2 * genus
    prev = [WedgeVector(dim, 3, {t: 1}) for t in wedge_basis(dim, 3) if x_letters(t, genus) >= m - 1]
    Km = Km_lattice(genus, m)
    images = []
    inclusion = True
    for A in elementary_symmetric(genus):
        S = Bg_embed(A)
        for w in prev:
            d = sp3_minus_one(S, w, genus)
            if d.vector() not in Km:
                inclusion = False
            images.append(d)
    generated = span(images, dim) + Km_lattice(genus, m + 1)
    ok = inclusion and generated == Km
    details = {"inclusion": inclusion, "rank_Km": Km.rank, "rank_generated": generated.rank}
    return LatticeReport(f"K_{m} generation g={genus}", ok, details)


def exact_sequence_check(dim: int) -> LatticeReport:
    """theta o eta = 0 and image(eta) = ker(theta) for a free module of rank dim."""
    E, T = eta_matrix(dim), theta_matrix(dim)
    composite_zero = (T @ E).is_zero()
    im, ker = image_lattice(E), kernel_lattice(T)
    ok = composite_zero and im == ker and im.rank == len(wedge_basis(dim, 3))
    details = {"composite_zero": composite_zero, "rank_image": im.rank, "rank_kernel": ker.rank,
               "rank_wedge3": len(wedge_basis(dim, 3))}
    return LatticeReport(f"exact sequence dim={dim}", ok, details)
