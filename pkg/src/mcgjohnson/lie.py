"""The graded free Lie ring over Z in the Lyndon basis.

Letters are 0-based ints ordered by value. For the surface alphabet of genus g
the letters 0..g-1 are x_1..x_g (spanning the Lagrangian L) and g..2g-1 are
y_1..y_g; the x-only alphabet of size g shares the same indices, so an element
of the free Lie ring on L is literally an element on H with x letters only.

A Lyndon word w with standard factorization w = uv (v the longest proper
Lyndon suffix) gives the basis element P_w = [P_u, P_v]. Its associative
expansion is w plus lexicographically larger words, which is what makes
conversion from associative polynomials a triangular elimination.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .lattice import IntMatrix, IntegerLattice
from .magnus import homogeneous_part
from .words import ReducedWord

Word = tuple[int, ...]


class NotLieError(ValueError):
    """An associative polynomial was expected to be a Lie element and is not."""


# -- Lyndon words --------------------------------------------------------------

def _mobius(n: int) -> int:
    result, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


def witt(k: int, n: int) -> int:
    """Rank of the degree-n part of the free Lie ring on k generators."""
    if k < 1 or n < 1:
        raise ValueError("alphabet size and degree must be positive")
    total = sum(_mobius(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def is_lyndon(w: Word) -> bool:
    return bool(w) and all(w < w[i:] + w[:i] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def lyndon_words(k: int, n: int) -> tuple[Word, ...]:
    """All Lyndon words of length n over range(k), in increasing lex order (Duval)."""
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == n:
            out.append(tuple(w))
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    return tuple(out)


@lru_cache(maxsize=None)
def standard_factorization(w: Word) -> tuple[Word, Word]:
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"{w} has no standard factorization")


@lru_cache(maxsize=None)
def lyndon_expansion(w: Word) -> tuple[tuple[Word, int], ...]:
    """Associative expansion of P_w as sorted (monomial, coefficient) pairs."""
    if len(w) == 1:
        return ((w, 1),)
    u, v = standard_factorization(w)
    out: dict[Word, int] = {}
    for a, ca in lyndon_expansion(u):
        for b, cb in lyndon_expansion(v):
            out[a + b] = out.get(a + b, 0) + ca * cb
            out[b + a] = out.get(b + a, 0) - ca * cb
    return tuple(sorted((m, c) for m, c in out.items() if c))


def bracketing(w: Word, names: Iterable[str] | None = None) -> str:
    """Human-readable standard bracketing, e.g. [x1,[x1,y1]]."""
    names = list(names) if names is not None else None
    if len(w) == 1:
        return names[w[0]] if names else str(w[0])
    u, v = standard_factorization(w)
    return f"[{bracketing(u, names)},{bracketing(v, names)}]"


def letter_names(size: int, genus: int | None = None) -> list[str]:
    """x1..xg, y1..yg for a surface alphabet (or x-only if size == genus)."""
    g = genus if genus is not None else size // 2
    return [f"x{i + 1}" if i < g else f"y{i - g + 1}" for i in range(size)]


@dataclass(frozen=True)
class LyndonBasis:
    size: int
    degree: int
    words: tuple[Word, ...]
    index: Mapping[Word, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.words)


@lru_cache(maxsize=None)
def lyndon_basis(size: int, degree: int) -> LyndonBasis:
    words = lyndon_words(size, degree)
    return LyndonBasis(size, degree, words, {w: i for i, w in enumerate(words)})


def x_count(w: Word, genus: int) -> int:
    return sum(1 for a in w if a < genus)


# -- associative <-> Lyndon ----------------------------------------------------

def to_lyndon(poly: Mapping[Word, int]) -> dict[Word, int]:
    """Write a homogeneous associative Lie polynomial in the Lyndon basis.

    Repeatedly takes the smallest monomial, which must be a Lyndon word, and
    subtracts the matching multiple of its basis element. Raises NotLieError
    when the smallest monomial is not Lyndon.
    """
    rem = {m: c for m, c in poly.items() if c}
    heap = list(rem)
    heapq.heapify(heap)
    out: dict[Word, int] = {}
    while heap:
        m = heapq.heappop(heap)
        c = rem.pop(m, 0)
        if not c:
            continue
        if not is_lyndon(m):
            raise NotLieError(f"monomial {m} with coefficient {c} is not a Lie leading term")
        out[m] = c
        for mon, coef in lyndon_expansion(m)[1:]:
            new = rem.get(mon, 0) - c * coef
            if mon not in rem:
                heapq.heappush(heap, mon)
            if new:
                rem[mon] = new
            else:
                rem[mon] = 0
    return out


def to_associative(coords: Mapping[Word, int]) -> dict[Word, int]:
    out: dict[Word, int] = {}
    for w, c in coords.items():
        for m, e in lyndon_expansion(w):
            out[m] = out.get(m, 0) + c * e
    return {m: c for m, c in out.items() if c}


# -- Lie vectors ---------------------------------------------------------------

def _clean(d: Mapping) -> dict:
    return {k: v for k, v in d.items() if v}


@dataclass(frozen=True)
class LieVector:
    """Homogeneous element of the free Lie ring, coordinates over Lyndon words."""

    size: int
    degree: int
    coords: Mapping[Word, int]

    def __post_init__(self):
        object.__setattr__(self, "coords", _clean(self.coords))
        for w in self.coords:
            if len(w) != self.degree:
                raise ValueError(f"word {w} does not have degree {self.degree}")

    @classmethod
    def zero(cls, size: int, degree: int) -> LieVector:
        return cls(size, degree, {})

    @classmethod
    def generator(cls, size: int, letter: int) -> LieVector:
        return cls(size, 1, {(letter,): 1})

    def is_zero(self) -> bool:
        return not self.coords

    def _check(self, other: LieVector) -> None:
        if (self.size, self.degree) != (other.size, other.degree):
            raise ValueError("Lie vectors live in different graded pieces")

    def __add__(self, other: LieVector) -> LieVector:
        self._check(other)
        out = dict(self.coords)
        for w, c in other.coords.items():
            out[w] = out.get(w, 0) + c
        return LieVector(self.size, self.degree, out)

    def __neg__(self) -> LieVector:
        return LieVector(self.size, self.degree, {w: -c for w, c in self.coords.items()})

    def __sub__(self, other: LieVector) -> LieVector:
        return self + (-other)

    def __rmul__(self, k: int) -> LieVector:
        return LieVector(self.size, self.degree, {w: k * c for w, c in self.coords.items()})

    def vector(self) -> list[int]:
        basis = lyndon_basis(self.size, self.degree)
        v = [0] * len(basis)
        for w, c in self.coords.items():
            v[basis.index[w]] = c
        return v

    def associative(self) -> dict[Word, int]:
        return to_associative(self.coords)

    def min_x_count(self, genus: int) -> int | None:
        """Fewest x letters over the support (None for the zero vector)."""
        return min((x_count(w, genus) for w in self.coords), default=None)

    def format(self, genus: int | None = None) -> str:
        if not self.coords:
            return "0"
        names = letter_names(self.size, genus)
        return " + ".join(f"{c}*{bracketing(w, names)}" for w, c in sorted(self.coords.items()))


def bracket(u: LieVector, v: LieVector) -> LieVector:
    if u.size != v.size:
        raise ValueError("alphabet size mismatch")
    a, b = u.associative(), v.associative()
    prod: dict[Word, int] = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            prod[m1 + m2] = prod.get(m1 + m2, 0) + c1 * c2
            prod[m2 + m1] = prod.get(m2 + m1, 0) - c1 * c2
    return LieVector(u.size, u.degree + v.degree, to_lyndon(prod))


def lie_class(w: ReducedWord, n: int) -> LieVector:
    """Class of w in the n-th graded quotient of the lower central series.

    The caller guarantees w lies in the n-th term; the degree-n part of its
    Magnus expansion is then a Lie element, which is checked during conversion.
    """
    part = homogeneous_part(w, n)
    return LieVector(w.size, n, to_lyndon(part))


# -- H tensor Lie --------------------------------------------------------------

@dataclass(frozen=True)
class HTensorLie:
    """Element of H (x) L_n(H): coordinates keyed by (letter h, Lyndon word)."""

    size: int
    degree: int
    coords: Mapping[tuple[int, Word], int]

    def __post_init__(self):
        object.__setattr__(self, "coords", _clean(self.coords))

    @classmethod
    def from_pairs(cls, size: int, degree: int, pairs: Iterable[tuple[int, LieVector]]) -> HTensorLie:
        out: dict[tuple[int, Word], int] = {}
        for h, vec in pairs:
            if vec.degree != degree:
                raise ValueError("degree mismatch in tensor")
            for w, c in vec.coords.items():
                out[(h, w)] = out.get((h, w), 0) + c
        return cls(size, degree, out)

    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other: HTensorLie) -> HTensorLie:
        out = dict(self.coords)
        for key, c in other.coords.items():
            out[key] = out.get(key, 0) + c
        return HTensorLie(self.size, self.degree, out)

    def __neg__(self) -> HTensorLie:
        return HTensorLie(self.size, self.degree, {k: -c for k, c in self.coords.items()})

    def __sub__(self, other: HTensorLie) -> HTensorLie:
        return self + (-other)

    def vector(self) -> list[int]:
        basis = lyndon_basis(self.size, self.degree)
        n = len(basis)
        v = [0] * (self.size * n)
        for (h, w), c in self.coords.items():
            v[h * n + basis.index[w]] = c
        return v

    def apply_b(self) -> LieVector:
        """b(h (x) a) = [h, a]."""
        out = LieVector.zero(self.size, self.degree + 1)
        by_letter: dict[int, dict[Word, int]] = {}
        for (h, w), c in self.coords.items():
            by_letter.setdefault(h, {})[w] = c
        for h, coords in by_letter.items():
            out = out + bracket(LieVector.generator(self.size, h), LieVector(self.size, self.degree, coords))
        return out

    def in_lagrangian_part(self, genus: int) -> bool:
        """True iff the element lies in L (x) L_n(L)."""
        return all(h < genus and x_count(w, genus) == len(w) for h, w in self.coords)

    def format(self, genus: int | None = None) -> str:
        if not self.coords:
            return "0"
        names = letter_names(self.size, genus)
        return " + ".join(
            f"{c}*{names[h]}(x){bracketing(w, names)}" for (h, w), c in sorted(self.coords.items())
        )


def map_b_matrix(genus: int, n: int, restricted_to_L: bool = False) -> IntMatrix:
    """Matrix of h (x) a -> [h, a] from H (x) L_n(H) to L_{n+1}(H).

    With ``restricted_to_L`` the domain is L (x) L_n(L) and the codomain
    L_{n+1}(L), using the x-only alphabet. Columns follow the basis order
    (h major, Lyndon word minor).
    """
    size = genus if restricted_to_L else 2 * genus
    basis = lyndon_basis(size, n)
    target = lyndon_basis(size, n + 1)
    columns = []
    for h in range(size):
        gen = LieVector.generator(size, h)
        for w in basis.words:
            img = bracket(gen, LieVector(size, n, {w: 1}))
            columns.append({target.index[m]: c for m, c in img.coords.items()})
    return IntMatrix.from_sparse_columns(len(target), columns)


def filtration_Lmr(genus: int, m: int, r: int) -> IntegerLattice:
    """Lyndon elements of degree m with at least r letters from L."""
    if not 0 <= r:
        raise ValueError("r must be nonnegative")
    basis = lyndon_basis(2 * genus, m)
    idx = [i for i, w in enumerate(basis.words) if x_count(w, genus) >= r]
    return IntegerLattice.coordinate(idx, len(basis))


def filtration_Fmr(genus: int, m: int, r: int) -> IntegerLattice:
    """(L (x) L_m^{r-1}(H)) + (H (x) L_m^r(H)) inside H (x) L_m(H)."""
    if not 0 <= r:
        raise ValueError("r must be nonnegative")
    basis = lyndon_basis(2 * genus, m)
    n = len(basis)
    idx = []
    for h in range(2 * genus):
        need = r - 1 if h < genus else r
        idx.extend(h * n + i for i, w in enumerate(basis.words) if x_count(w, genus) >= need)
    return IntegerLattice.coordinate(idx, 2 * genus * n)


def htensor_in_Fmr(t: HTensorLie, genus: int, r: int) -> bool:
    """Membership in the F_m^r filtration, read off coordinates directly."""
    for h, w in t.coords:
        need = r - 1 if h < genus else r
        if x_count(w, genus) < need:
            return False
    return True
