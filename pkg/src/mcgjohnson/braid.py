"""Framed pure braids as automorphisms of the free group F' on x_1..x_g.

A pure braid acts by x_i -> lambda_i x_i lambda_i^-1 with product
lambda_1 x_1 lambda_1^-1 ... lambda_g x_g lambda_g^-1 = x_1 ... x_g. The
longitude lambda_i is only defined up to right multiplication by powers of
x_i; we fix it by requiring its x_i exponent sum to equal the framing s_i of
strand i. Framings therefore live inside the longitudes.

Braids compose like their automorphisms: ``compose(a, b)`` acts as
phi_a o phi_b, so the longitudes of the product are phi_a(mu_i) lambda_i
where mu_i are those of b. With that order psi and kappa are homomorphisms.
"""
from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import exterior as ext
from .exterior import WedgeVector
from .lattice import IntMatrix, rank
from .lie import HTensorLie, LieVector, bracket, lie_class, lyndon_basis, standard_factorization, to_lyndon, witt
from .magnus import (Depth, TruncatedSeries, embed_series, expand_letters, magnus_expand, series_inverse,
                     substitute, word_degree)
from .mcg import EndoJet, FreeEndo, lie2_to_wedge
from .words import LONGITUDE, ADMISSIBLE, X_ONLY, ReducedWord, commutator as word_commutator

DEFAULT_CUTOFF = 8


class BraidError(ValueError):
    pass


def _x(i: int, g: int) -> ReducedWord:
    return ReducedWord((i,), g, X_ONLY)


def _product_of_conjugates(longitudes: Sequence[ReducedWord]) -> ReducedWord:
    g = len(longitudes)
    out = ReducedWord.identity(g, X_ONLY)
    for i, lam in enumerate(longitudes, start=1):
        out = out * lam * _x(i, g) * lam.inverse()
    return out


def _product_of_generators(g: int) -> ReducedWord:
    return ReducedWord(tuple(range(1, g + 1)), g, X_ONLY)


@dataclass(frozen=True)
class PureBraid:
    strands: int
    longitudes: tuple[ReducedWord, ...]
    inverse_longitudes: tuple[ReducedWord, ...] | None = None
    name: str = ""
    # Products and inverses of verified braids carry a correct witness by construction.
    verify_inverse: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        g = self.strands
        for lams in (self.longitudes, self.inverse_longitudes):
            if lams is None:
                continue
            if len(lams) != g:
                raise BraidError(f"need {g} longitudes, got {len(lams)}")
            for lam in lams:
                if lam.genus != g or lam.alphabet != X_ONLY:
                    raise BraidError("longitudes must be x-only words on the braid's strands")
            if _product_of_conjugates(lams) != _product_of_generators(g):
                raise BraidError("longitude equation fails")
        A = self.linking_matrix(check=False)
        if any(A[i][j] != A[j][i] for i in range(g) for j in range(g)):
            raise BraidError("linking matrix is not symmetric")
        if self.inverse_longitudes is not None and self.verify_inverse:
            back = _compose_longitudes(self.longitudes, self.inverse_longitudes)
            if any(back):
                raise BraidError("inverse witness does not compose to the identity braid")

    @property
    def framings(self) -> tuple[int, ...]:
        return tuple(lam.exponent_sums()[i] for i, lam in enumerate(self.longitudes))

    def images(self) -> list[ReducedWord]:
        """phi(x_i) = lambda_i x_i lambda_i^-1."""
        g = self.strands
        return [lam * _x(i, g) * lam.inverse() for i, lam in enumerate(self.longitudes, start=1)]

    def act(self, w: ReducedWord) -> ReducedWord:
        return w.substitute(self.images())

    def linking_matrix(self, check: bool = True) -> list[list[int]]:
        """a_ij is the x_j exponent sum of lambda_i; the diagonal holds the framings."""
        A = [list(lam.exponent_sums()) for lam in self.longitudes]
        if check and any(A[i][j] != A[j][i] for i in range(self.strands) for j in range(self.strands)):
            raise BraidError("linking matrix is not symmetric")
        return A

    def is_identity(self) -> bool:
        return not any(self.longitudes)

    def label(self) -> str:
        return self.name or "braid"

    def to_json(self) -> dict:
        out = {"strands": self.strands, "longitudes": [str(l) for l in self.longitudes],
               "framings": list(self.framings)}
        if self.inverse_longitudes is not None:
            out["inverse_longitudes"] = [str(l) for l in self.inverse_longitudes]
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def identity(cls, g: int) -> PureBraid:
        empty = tuple(ReducedWord.identity(g, X_ONLY) for _ in range(g))
        return cls(g, empty, empty, "1")

    @classmethod
    def from_longitudes(cls, longitudes: Sequence[ReducedWord], framings: Sequence[int] | None = None,
                        inverse_longitudes: Sequence[ReducedWord] | None = None, name: str = "") -> PureBraid:
        """Normalize each longitude so its own-strand exponent sum is the framing."""
        lams = _normalize(longitudes, framings)
        inv = None
        if inverse_longitudes is not None:
            inv_framings = [-s for s in (framings or [0] * len(lams))]
            inv = _normalize(inverse_longitudes, inv_framings)
        return cls(len(lams), lams, inv, name)

    @classmethod
    def from_json(cls, data: Mapping | str) -> PureBraid:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            g = int(data["strands"])
            framings = data.get("framings")
            if "word" in data:
                braid = parse_braid_word(data["word"], g)
                if framings:
                    braid = compose(braid, framing_braid(g, framings))
                return braid
            lams = [ReducedWord.parse(s, g, X_ONLY) for s in data["longitudes"]]
            inv = data.get("inverse_longitudes")
            inv = [ReducedWord.parse(s, g, X_ONLY) for s in inv] if inv is not None else None
        except (KeyError, TypeError) as exc:
            raise BraidError(f"invalid braid record: {exc}") from exc
        return cls.from_longitudes(lams, framings, inv, data.get("name", ""))


def _normalize(longitudes: Sequence[ReducedWord], framings: Sequence[int] | None) -> tuple[ReducedWord, ...]:
    g = len(longitudes)
    framings = list(framings) if framings is not None else [0] * g
    out = []
    for i, lam in enumerate(longitudes, start=1):
        shift = framings[i - 1] - lam.exponent_sums()[i - 1]
        out.append(lam * (_x(i, g) ** shift))
    return tuple(out)


def _compose_longitudes(outer: Sequence[ReducedWord], inner: Sequence[ReducedWord]) -> tuple[ReducedWord, ...]:
    """Longitudes of phi_outer o phi_inner: phi_outer(mu_i) lambda_i."""
    g = len(outer)
    images = [lam * _x(i, g) * lam.inverse() for i, lam in enumerate(outer, start=1)]
    return tuple(mu.substitute(images) * lam for mu, lam in zip(inner, outer))


def compose(a: PureBraid, b: PureBraid, name: str | None = None) -> PureBraid:
    if a.strands != b.strands:
        raise BraidError("strand count mismatch")
    lams = _compose_longitudes(a.longitudes, b.longitudes)
    inv = None
    if a.inverse_longitudes is not None and b.inverse_longitudes is not None:
        inv = _compose_longitudes(b.inverse_longitudes, a.inverse_longitudes)
    if name is None:
        name = f"{a.name}*{b.name}" if a.name and b.name else ""
    return PureBraid(a.strands, lams, inv, name, verify_inverse=False)


def compose_all(*braids: PureBraid) -> PureBraid:
    out = braids[0]
    for b in braids[1:]:
        out = compose(out, b)
    return out


def inverse(a: PureBraid) -> PureBraid:
    if a.inverse_longitudes is None:
        raise BraidError(f"{a.label()} carries no inverse witness")
    name = a.name[:-3] if a.name.endswith("^-1") else (f"{a.name}^-1" if a.name else "")
    return PureBraid(a.strands, a.inverse_longitudes, a.longitudes, name, verify_inverse=False)


def commutator(a: PureBraid, b: PureBraid) -> PureBraid:
    name = f"[{a.name},{b.name}]" if a.name and b.name else ""
    return compose(compose(a, b), compose(inverse(a), inverse(b)), name)


# -- Artin generators ----------------------------------------------------------

def _sigma_images(g: int, k: int, sign: int) -> list[ReducedWord]:
    """Artin action of sigma_k^{sign} on F'."""
    imgs = [_x(i, g) for i in range(1, g + 1)]
    a, b = _x(k, g), _x(k + 1, g)
    if sign > 0:
        imgs[k - 1] = b
        imgs[k] = b.inverse() * a * b
    else:
        imgs[k - 1] = a * b * a.inverse()
        imgs[k] = a
    return imgs


def _apply_sigmas(g: int, sigmas: Sequence[tuple[int, int]]) -> list[ReducedWord]:
    """Images of the composite phi_{s_1} o phi_{s_2} o ... of the listed sigma powers."""
    imgs = [_x(i, g) for i in range(1, g + 1)]
    for k, sign in sigmas:
        step = _sigma_images(g, k, sign)
        imgs = [w.substitute(imgs) for w in step]
    return imgs


def _longitudes_from_images(images: Sequence[ReducedWord]) -> tuple[ReducedWord, ...]:
    g = len(images)
    lams = []
    for i, w in enumerate(images, start=1):
        n = len(w.letters)
        mid = n // 2
        if n % 2 == 0 or w.letters[mid] != i:
            raise BraidError(f"image of x{i} is not a conjugate of x{i}")
        u = ReducedWord(w.letters[:mid], g, X_ONLY)
        if ReducedWord(w.letters[mid + 1:], g, X_ONLY) != u.inverse():
            raise BraidError(f"image of x{i} is not a conjugate of x{i}")
        lams.append(u)
    return _normalize(lams, None)


def artin_generator(g: int, i: int, j: int) -> PureBraid:
    """A_ij = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1."""
    if not 1 <= i < j <= g:
        raise BraidError(f"need 1 <= i < j <= {g}, got ({i}, {j})")
    word = [(k, 1) for k in range(j - 1, i, -1)] + [(i, 1), (i, 1)] + [(k, -1) for k in range(i + 1, j)]
    inv_word = [(k, -s) for k, s in reversed(word)]
    lams = _longitudes_from_images(_apply_sigmas(g, word))
    inv = _longitudes_from_images(_apply_sigmas(g, inv_word))
    return PureBraid(g, lams, inv, f"A{i}{j}")


def framing_braid(g: int, framings: Sequence[int]) -> PureBraid:
    """The central framing element: lambda_i = x_i^{s_i}."""
    if len(framings) != g:
        raise BraidError(f"need {g} framings")
    lams = tuple(_x(i, g) ** s for i, s in enumerate(framings, start=1))
    inv = tuple(_x(i, g) ** -s for i, s in enumerate(framings, start=1))
    return PureBraid(g, lams, inv, "F(" + ",".join(map(str, framings)) + ")")


def parse_braid_word(text: str, g: int) -> PureBraid:
    """Parse "A12 A13^-1 ..." (A<i><j> or A<i>_<j>, optional ^-1 or ^n)."""
    out = PureBraid.identity(g)
    for tok in text.split():
        m = re.fullmatch(r"A(\d)(\d)(?:\^(-?\d+))?|A(\d+)_(\d+)(?:\^(-?\d+))?", tok)
        if not m:
            raise BraidError(f"bad braid token {tok!r}")
        i, j, e = (m.group(1), m.group(2), m.group(3)) if m.group(1) else (m.group(4), m.group(5), m.group(6))
        gen = artin_generator(g, int(i), int(j))
        power = int(e) if e is not None else 1
        piece = gen if power > 0 else inverse(gen)
        for _ in range(abs(power)):
            out = compose(out, piece)
    if text.strip():
        out = PureBraid(out.strands, out.longitudes, out.inverse_longitudes, text.strip(), verify_inverse=False)
    return out


def artin_generators(g: int) -> list[PureBraid]:
    return [artin_generator(g, i, j) for i in range(1, g + 1) for j in range(i + 1, g + 1)]


# -- maps into the mapping class group -----------------------------------------

def _full(w: ReducedWord) -> ReducedWord:
    return w.to_full()


def _psi_images(longitudes: Sequence[ReducedWord]) -> tuple[ReducedWord, ...]:
    g = len(longitudes)
    xs, ys = [], []
    for i, lam in enumerate(longitudes, start=1):
        L = _full(lam)
        xs.append(L * ReducedWord.x(i, g) * L.inverse())
        ys.append(ReducedWord.y(i, g) * L.inverse())
    return tuple(xs + ys)


def psi(a: PureBraid) -> FreeEndo:
    """x_i -> lambda_i x_i lambda_i^-1, y_i -> y_i lambda_i^-1 (longitude boundary)."""
    inv = _psi_images(a.inverse_longitudes) if a.inverse_longitudes is not None else None
    # psi is a homomorphism, so the image of the inverse witness is an inverse witness.
    return FreeEndo(a.strands, _psi_images(a.longitudes), LONGITUDE, inv, f"psi({a.name})" if a.name else "",
                    verify_inverse=False)


def delta(w: ReducedWord) -> ReducedWord:
    """The homomorphism F' -> F with x_i -> [x_i, y_i]."""
    g = w.genus
    images = [word_commutator(ReducedWord.x(i, g), ReducedWord.y(i, g)) for i in range(1, g + 1)]
    return w.substitute(images)


def _kappa_images(longitudes: Sequence[ReducedWord]) -> tuple[ReducedWord, ...]:
    g = len(longitudes)
    xs, ys = [], []
    for i, lam in enumerate(longitudes, start=1):
        D = delta(lam)
        xs.append(D * ReducedWord.x(i, g) * D.inverse())
        ys.append(D * ReducedWord.y(i, g) * D.inverse())
    return tuple(xs + ys)


def kappa(a: PureBraid) -> FreeEndo:
    """x_i -> d x_i d^-1, y_i -> d y_i d^-1 with d = delta(lambda_i) (admissible boundary)."""
    inv = _kappa_images(a.inverse_longitudes) if a.inverse_longitudes is not None else None
    # kappa is a homomorphism, so the image of the inverse witness is an inverse witness.
    return FreeEndo(a.strands, _kappa_images(a.longitudes), ADMISSIBLE, inv, f"kappa({a.name})" if a.name else "",
                    verify_inverse=False)


# -- filtrations and ranks -----------------------------------------------------

def braid_weight_degree(a: PureBraid, cutoff: int = DEFAULT_CUTOFF) -> Depth:
    """Smallest lower-central-series depth among the longitudes."""
    degs = [word_degree(lam, cutoff) for lam in a.longitudes]
    if all(d.identity for d in degs):
        return Depth(cutoff + 1, exact=False, identity=True)
    exact = [d.value for d in degs if d.exact]
    return Depth(min(exact)) if exact else Depth(cutoff + 1, exact=False)


def rank_r(g: int, n: int, framed: bool = False) -> int:
    """Rank of the n-th graded quotient of the lower central series of the pure braid group."""
    if g < 1 or n < 1:
        raise BraidError("g and n must be positive")
    r = 0
    for k in range(1, g):
        r += witt(k, n)
    if framed and n == 1:
        r += g
    return r


def J_b(a: PureBraid) -> WedgeVector:
    """sum_i x_i (x) l_i pulled back to the third exterior power of L, l_i the degree-2 class of lambda_i."""
    g = a.strands
    d = braid_weight_degree(a, 2)
    if not d.at_least(2):
        raise BraidError(f"{a.label()} has longitudes outside the commutator subgroup")
    tensor: dict = {}
    for i, lam in enumerate(a.longitudes):
        l2 = lie2_to_wedge(lie_class(lam, 2))
        for pair, c in l2.coords.items():
            tensor[(i, pair)] = tensor.get((i, pair), 0) + c
    if not ext.theta(tensor, g).is_zero():
        raise BraidError(f"bracket image of J_b({a.label()}) is nonzero")
    value = ext.eta_preimage(tensor, g, "V")
    if value is None:
        raise BraidError(f"J_b({a.label()}) is not in the image of eta")
    return value


def lagrangian_wedge_to_H(w: WedgeVector, g: int) -> WedgeVector:
    """Include the third exterior power of L (x_i indexed 0..g-1) into that of H."""
    return WedgeVector(2 * g, w.degree, dict(w.coords), "H")


def bracket_word(w: tuple[int, ...], g: int) -> ReducedWord:
    """Group commutator realizing the standard bracketing of a Lyndon word (0-based letters)."""
    if len(w) == 1:
        return _x(w[0] + 1, g)
    u, v = standard_factorization(w)
    return word_commutator(bracket_word(u, g), bracket_word(v, g))


def delta_star_rank(g: int, n: int, cutoff: int | None = None) -> dict:
    """Rank of the matrix of degree-2n classes of delta applied to a basis of F'_n / F'_{n+1}."""
    cutoff = 2 * n if cutoff is None else cutoff
    if 2 * n > cutoff:
        raise BraidError("cutoff must be at least 2n")
    target = lyndon_basis(2 * g, 2 * n)
    rows = []
    order_preserved = True
    prev_lead = None
    for w in lyndon_basis(g, n).words:
        v = lie_class(delta(bracket_word(w, g)), 2 * n)
        row = [0] * len(target)
        for m, c in v.coords.items():
            row[target.index[m]] = c
        rows.append(row)
        lead = min(v.coords) if v.coords else None
        if prev_lead is not None and (lead is None or lead <= prev_lead):
            order_preserved = False
        prev_lead = lead
    r = rank(IntMatrix.from_rows(rows, len(target))) if rows else 0
    expected = witt(g, n)
    return {"g": g, "n": n, "rank": r, "witt": expected, "injective": r == expected,
            "leading_terms_increasing": order_preserved}


# -- truncated Magnus representations ---------------------------------------------

@dataclass(frozen=True)
class BraidJet:
    """A pure braid known through the Magnus expansions of its longitudes.

    Braid words for iterated commutators grow geometrically with depth (a
    depth-4 commutator of Artin generators at three strands has longitudes of
    about 600k letters), while their expansions up to a fixed degree stay
    small. Composition follows the longitude rule phi_a(mu_i) lambda_i.
    """

    strands: int
    cutoff: int
    longitudes: tuple[TruncatedSeries, ...]
    inverse_longitudes: tuple[TruncatedSeries, ...]
    name: str = ""

    @classmethod
    def from_braid(cls, a: PureBraid, cutoff: int) -> BraidJet:
        if a.inverse_longitudes is None:
            raise BraidError(f"{a.label()} carries no inverse witness")
        def expand(ws):
            return tuple(magnus_expand(w, cutoff) for w in ws)
        return cls(a.strands, cutoff, expand(a.longitudes), expand(a.inverse_longitudes), a.name)

    def images(self) -> list[TruncatedSeries]:
        g = self.strands
        return [lam * expand_letters((i,), g, self.cutoff) * series_inverse(lam)
                for i, lam in enumerate(self.longitudes, start=1)]

    def inverse(self) -> BraidJet:
        name = self.name[:-3] if self.name.endswith("^-1") else (f"{self.name}^-1" if self.name else "")
        return BraidJet(self.strands, self.cutoff, self.inverse_longitudes, self.longitudes, name)

    def weight_degree(self) -> Depth:
        """Smallest lower-central-series depth among the longitudes, up to the cutoff."""
        lows = [lam.lowest_nontrivial_degree() for lam in self.longitudes]
        exact = [k for k in lows if k is not None]
        return Depth(min(exact)) if exact else Depth(self.cutoff + 1, exact=False)


def _jet_longitudes(outer: BraidJet, inner_longitudes) -> tuple[TruncatedSeries, ...]:
    images = outer.images()
    return tuple(substitute(mu, images) * lam for mu, lam in zip(inner_longitudes, outer.longitudes))


def jet_compose(a: BraidJet, b: BraidJet, name: str | None = None) -> BraidJet:
    """Jet of compose(a, b), acting as phi_a o phi_b."""
    if a.strands != b.strands:
        raise BraidError("strand count mismatch")
    lams = _jet_longitudes(a, b.longitudes)
    inv = _jet_longitudes(b.inverse(), a.inverse_longitudes)
    if name is None:
        name = f"{a.name}*{b.name}" if a.name and b.name else ""
    return BraidJet(a.strands, min(a.cutoff, b.cutoff), lams, inv, name)


def jet_commutator(a: BraidJet, b: BraidJet) -> BraidJet:
    name = f"[{a.name},{b.name}]" if a.name and b.name else ""
    return jet_compose(jet_compose(a, b), jet_compose(a.inverse(), b.inverse()), name)


def random_commutator_jet(g: int, depth: int, rng: random.Random, cutoff: int) -> BraidJet:
    """Jet of a left-normed commutator of ``depth`` random Artin generators or inverses."""
    gens = artin_generators(g)
    out, last = None, None
    for _ in range(depth):
        choices = [a for a in gens if a.name != last] or gens
        a = rng.choice(choices)
        last = a.name
        piece = BraidJet.from_braid(a if rng.random() < 0.5 else inverse(a), cutoff)
        out = piece if out is None else jet_commutator(out, piece)
    return out


def _full_series(lam: TruncatedSeries, g: int) -> TruncatedSeries:
    return embed_series(lam, 2 * g)


def _psi_jet_images(longitudes, g: int, cutoff: int) -> tuple[TruncatedSeries, ...]:
    xs, ys = [], []
    for i, lam in enumerate(longitudes, start=1):
        L = _full_series(lam, g)
        Linv = series_inverse(L)
        xs.append(L * expand_letters((i,), 2 * g, cutoff) * Linv)
        ys.append(expand_letters((g + i,), 2 * g, cutoff) * Linv)
    return tuple(xs + ys)


def psi_jet(a: BraidJet) -> EndoJet:
    """Jet of psi(a) in the longitude basis."""
    g, N = a.strands, a.cutoff
    return EndoJet(g, N, _psi_jet_images(a.longitudes, g, N), _psi_jet_images(a.inverse_longitudes, g, N),
                   LONGITUDE, f"psi({a.name})" if a.name else "")


def _delta_images(g: int, cutoff: int) -> list[TruncatedSeries]:
    return [expand_letters((i, g + i, -i, -(g + i)), 2 * g, cutoff) for i in range(1, g + 1)]


def delta_series(lam: TruncatedSeries, g: int) -> TruncatedSeries:
    """Expansion of delta(w) from the expansion of w."""
    return substitute(lam, _delta_images(g, lam.cutoff))


def _kappa_jet_images(longitudes, g: int, cutoff: int) -> tuple[TruncatedSeries, ...]:
    xs, ys = [], []
    for i, lam in enumerate(longitudes, start=1):
        D = delta_series(lam, g)
        Dinv = series_inverse(D)
        xs.append(D * expand_letters((i,), 2 * g, cutoff) * Dinv)
        ys.append(D * expand_letters((g + i,), 2 * g, cutoff) * Dinv)
    return tuple(xs + ys)


def kappa_jet(a: BraidJet) -> EndoJet:
    """Jet of kappa(a) in the admissible basis."""
    g, N = a.strands, a.cutoff
    return EndoJet(g, N, _kappa_jet_images(a.longitudes, g, N), _kappa_jet_images(a.inverse_longitudes, g, N),
                   ADMISSIBLE, f"kappa({a.name})" if a.name else "")


def kappa_J_formula(a: PureBraid | BraidJet, n: int) -> HTensorLie:
    """sum_i x_i (x) [d_i, y_i] - y_i (x) [d_i, x_i], d_i the degree-2n class of delta(lambda_i).

    Requires every longitude to lie in the n-th lower central series term.
    """
    g = a.strands
    if isinstance(a, PureBraid):
        lams = [magnus_expand(lam, 2 * n) for lam in a.longitudes]
    else:
        lams = list(a.longitudes)
    size = 2 * g
    pairs = []
    for i, lam in enumerate(lams):
        low = lam.lowest_nontrivial_degree()
        if low is not None and low < n:
            raise BraidError(f"longitude {i + 1} has depth {low}, below {n}")
        d = LieVector(size, 2 * n, to_lyndon(delta_series(lam, g).degree_part(2 * n)))
        pairs.append((i, bracket(d, LieVector.generator(size, g + i))))
        pairs.append((g + i, -bracket(d, LieVector.generator(size, i))))
    return HTensorLie.from_pairs(size, 2 * n + 1, pairs)


# -- samplers -------------------------------------------------------------------

def random_product(g: int, length: int, rng: random.Random) -> PureBraid:
    gens = artin_generators(g)
    out = PureBraid.identity(g)
    for _ in range(length):
        a = rng.choice(gens)
        out = compose(out, a if rng.random() < 0.5 else inverse(a))
    return out


def iterated_commutator(braids: Sequence[PureBraid]) -> PureBraid:
    """Left-normed [[b1, b2], b3] ..."""
    out = braids[0]
    for b in braids[1:]:
        out = commutator(out, b)
    return out


def random_iterated_commutator(g: int, depth: int, rng: random.Random) -> PureBraid:
    """A left-normed commutator of ``depth`` random Artin generators (or their inverses)."""
    gens = artin_generators(g)
    picks: list[PureBraid] = []
    last = None
    for _ in range(depth):
        # Consecutive repeats of a generator give a trivial commutator.
        choices = [a for a in gens if a.name != last] or gens
        a = rng.choice(choices)
        last = a.name
        picks.append(a if rng.random() < 0.5 else inverse(a))
    return iterated_commutator(picks)
