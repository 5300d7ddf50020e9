"""Free-group endomorphisms standing in for mapping classes, and their Johnson-type invariants.

A FreeEndo lists the images of x_1..x_g, y_1..y_g in the surface group of the
bounded genus-g surface (a free group of rank 2g). Composition ``compose(f, h)``
is the map w -> f(h(w)), so ``commutator(f, h) = f h f^-1 h^-1`` in that order.

Every Johnson-type value is assembled from the displacements z^-1 f(z) through
one duality between H and its dual: a homomorphism m on generators is sent to
sum_i x_i (x) m(y_i) - y_i (x) m(x_i).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import exterior as ext
from .exterior import WedgeVector
from .lattice import IntMatrix
from .lie import HTensorLie, LieVector, lie_class, to_lyndon
from .magnus import (Depth, TruncatedSeries, displacement_words, endo_weight_degree, expand_letters,
                     magnus_expand, substitute)
from .words import ADMISSIBLE, LONGITUDE, FULL, ReducedWord, boundary_word, generators, letter_name


class EndoError(ValueError):
    """Invalid endomorphism record or an operation it cannot support."""


class JohnsonError(ValueError):
    """A Johnson-type value failed one of its defining checks."""


# Every J_n computed in the process is checked against b(J_n) = 0 and logged here.
B_AUDIT: list[tuple[str, int, bool]] = []


def _abelian_matrix(images: Sequence[ReducedWord]) -> IntMatrix:
    cols = [w.exponent_sums() for w in images]
    return IntMatrix.from_rows([[c[r] for c in cols] for r in range(len(cols))])


@dataclass(frozen=True)
class FreeEndo:
    genus: int
    images: tuple[ReducedWord, ...]
    boundary: str = ADMISSIBLE
    inverse_images: tuple[ReducedWord, ...] | None = None
    name: str = ""
    # Composites of verified maps carry a correct witness by construction.
    verify_inverse: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        g = self.genus
        if g < 1:
            raise EndoError("genus must be at least 1")
        if self.boundary not in (ADMISSIBLE, LONGITUDE):
            raise EndoError(f"unknown boundary convention {self.boundary!r}")
        for imgs in (self.images, self.inverse_images):
            if imgs is None:
                continue
            if len(imgs) != 2 * g:
                raise EndoError(f"need {2 * g} generator images, got {len(imgs)}")
            for w in imgs:
                if w.genus != g or w.alphabet != FULL:
                    raise EndoError("images must be words in the full alphabet of the same genus")
        det = _abelian_matrix(self.images).determinant()
        if det not in (1, -1):
            raise EndoError(f"abelianization has determinant {det}, so this is not an automorphism")
        d = boundary_word(g, self.boundary)
        if d.substitute(self.images) != d:
            raise EndoError(f"{self.label()} does not preserve the {self.boundary} boundary word")
        if self.inverse_images is not None and self.verify_inverse:
            ident = generators(g)
            there = [w.substitute(self.inverse_images) for w in self.images]
            back = [w.substitute(self.images) for w in self.inverse_images]
            if there != ident or back != ident:
                raise EndoError(f"inverse witness of {self.label()} does not compose to the identity")

    # -- construction --------------------------------------------------------
    @classmethod
    def identity(cls, genus: int, boundary: str = ADMISSIBLE) -> FreeEndo:
        gens = tuple(generators(genus))
        return cls(genus, gens, boundary, gens, "id")

    @classmethod
    def from_images(cls, genus: int, images: Mapping[str, str], boundary: str = ADMISSIBLE,
                    inverse_images: Mapping[str, str] | None = None, name: str = "") -> FreeEndo:
        """Build from {"x1": "<word>", ...}; generators not listed are fixed."""
        def build(spec: Mapping[str, str]) -> tuple[ReducedWord, ...]:
            names = [letter_name(k, genus) for k in range(1, 2 * genus + 1)]
            unknown = set(spec) - set(names)
            if unknown:
                raise EndoError(f"unknown generator names {sorted(unknown)}")
            return tuple(ReducedWord.parse(spec[n], genus) if n in spec else ReducedWord((k,), genus)
                         for k, n in enumerate(names, start=1))
        inv = build(inverse_images) if inverse_images is not None else None
        return cls(genus, build(images), boundary, inv, name)

    @classmethod
    def from_json(cls, data: Mapping | str) -> FreeEndo:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            genus = int(data["genus"])
            images = data["images"]
        except (KeyError, TypeError, ValueError) as exc:
            raise EndoError(f"invalid endomorphism record: {exc}") from exc
        return cls.from_images(genus, images, data.get("boundary", ADMISSIBLE),
                               data.get("inverse_images"), data.get("name", ""))

    def to_json(self) -> dict:
        names = [letter_name(k, self.genus) for k in range(1, 2 * self.genus + 1)]
        out = {"genus": self.genus, "boundary": self.boundary,
               "images": {n: str(w) for n, w in zip(names, self.images)}}
        if self.inverse_images is not None:
            out["inverse_images"] = {n: str(w) for n, w in zip(names, self.inverse_images)}
        if self.name:
            out["name"] = self.name
        return out

    def label(self) -> str:
        return self.name or "endomorphism"

    # -- group operations ----------------------------------------------------
    def __call__(self, w: ReducedWord) -> ReducedWord:
        return w.substitute(self.images)

    def has_inverse(self) -> bool:
        return self.inverse_images is not None

    def inverse(self) -> FreeEndo:
        if self.inverse_images is None:
            raise EndoError(f"{self.label()} carries no inverse witness")
        return FreeEndo(self.genus, self.inverse_images, self.boundary, self.images, _inv_name(self.name),
                        verify_inverse=False)

    def is_identity(self) -> bool:
        return list(self.images) == generators(self.genus)


def _inv_name(name: str) -> str:
    if not name:
        return ""
    return name[:-3] if name.endswith("^-1") else f"{name}^-1"


def _check_compatible(f: FreeEndo, h: FreeEndo) -> None:
    if f.genus != h.genus:
        raise EndoError(f"genus mismatch: {f.genus} vs {h.genus}")
    if f.boundary != h.boundary:
        raise EndoError(f"boundary convention mismatch: {f.boundary} vs {h.boundary}")


def compose(f: FreeEndo, h: FreeEndo, name: str | None = None) -> FreeEndo:
    """The endomorphism w -> f(h(w))."""
    _check_compatible(f, h)
    images = tuple(w.substitute(f.images) for w in h.images)
    inv = None
    if f.inverse_images is not None and h.inverse_images is not None:
        inv = tuple(w.substitute(h.inverse_images) for w in f.inverse_images)
    if name is None:
        name = f"{f.name}*{h.name}" if f.name and h.name else ""
    return FreeEndo(f.genus, images, f.boundary, inv, name, verify_inverse=False)


def compose_all(*maps: FreeEndo) -> FreeEndo:
    out = maps[0]
    for m in maps[1:]:
        out = compose(out, m)
    return out


def commutator(f: FreeEndo, h: FreeEndo) -> FreeEndo:
    """[f, h] = f h f^-1 h^-1; both maps need inverse witnesses."""
    _check_compatible(f, h)
    if not (f.has_inverse() and h.has_inverse()):
        raise EndoError("commutator needs inverse witnesses for both maps")
    name = f"[{f.name},{h.name}]" if f.name and h.name else ""
    return compose(compose(f, h), compose(f.inverse(), h.inverse()), name)


# -- truncated Magnus representations -------------------------------------------

@dataclass(frozen=True)
class EndoJet:
    """A map known only through the Magnus expansions of its generator images.

    Composing words substitutes whole images into whole images, which costs the
    product of their lengths before any cancellation. Jets compose by algebra
    substitution instead, at a cost independent of word length, and still
    determine every J_n with n < cutoff.
    """

    genus: int
    cutoff: int
    images: tuple[TruncatedSeries, ...]
    inverse_images: tuple[TruncatedSeries, ...] | None = None
    boundary: str = ADMISSIBLE
    name: str = ""

    @classmethod
    def from_endo(cls, f: FreeEndo, cutoff: int) -> EndoJet:
        def expand(ws):
            return tuple(magnus_expand(w, cutoff) for w in ws) if ws is not None else None
        return cls(f.genus, cutoff, expand(f.images), expand(f.inverse_images), f.boundary, f.name)

    def label(self) -> str:
        return self.name or "jet"

    def has_inverse(self) -> bool:
        return self.inverse_images is not None

    def inverse(self) -> EndoJet:
        if self.inverse_images is None:
            raise EndoError(f"{self.label()} carries no inverse witness")
        return EndoJet(self.genus, self.cutoff, self.inverse_images, self.images, self.boundary,
                       _inv_name(self.name))


def _as_jet(f, cutoff: int) -> EndoJet:
    if isinstance(f, EndoJet):
        if f.cutoff < cutoff:
            raise EndoError(f"{f.label()} is truncated at {f.cutoff}, below the needed {cutoff}")
        return f
    return EndoJet.from_endo(f, cutoff)


def jet_compose(f: EndoJet, h: EndoJet, name: str | None = None) -> EndoJet:
    """Jet of w -> f(h(w))."""
    _check_compatible(f, h)
    images = tuple(substitute(s, f.images) for s in h.images)
    inv = None
    if f.inverse_images is not None and h.inverse_images is not None:
        inv = tuple(substitute(s, h.inverse_images) for s in f.inverse_images)
    if name is None:
        name = f"{f.name}*{h.name}" if f.name and h.name else ""
    return EndoJet(f.genus, min(f.cutoff, h.cutoff), images, inv, f.boundary, name)


def jet_commutator(f, h, cutoff: int | None = None) -> EndoJet:
    """Jet of [f, h] = f h f^-1 h^-1; accepts FreeEndo or EndoJet arguments."""
    if cutoff is None:
        cutoff = min(m.cutoff for m in (f, h) if isinstance(m, EndoJet))
    f, h = _as_jet(f, cutoff), _as_jet(h, cutoff)
    if not (f.has_inverse() and h.has_inverse()):
        raise EndoError("commutator needs inverse witnesses for both maps")
    name = f"[{f.name},{h.name}]" if f.name and h.name else ""
    return jet_compose(jet_compose(f, h), jet_compose(f.inverse(), h.inverse()), name)


def displacement_series(f, cutoff: int) -> list[TruncatedSeries]:
    """Magnus expansions of z^-1 f(z) for each generator z, truncated at ``cutoff``."""
    if isinstance(f, EndoJet):
        f = _as_jet(f, cutoff)
        size = 2 * f.genus
        return [expand_letters((-k,), size, f.cutoff) * img for k, img in enumerate(f.images, start=1)]
    return [magnus_expand(d, cutoff) for d in displacement_words(f)]


def _series_weight_degree(series: Sequence[TruncatedSeries], cutoff: int) -> Depth:
    lows = [s.lowest_nontrivial_degree() for s in series]
    exact = [k for k in lows if k is not None]
    if not exact:
        # A jet vanishing to its cutoff says nothing about higher degrees.
        return Depth(cutoff, exact=False)
    return Depth(min(exact) - 1)


# -- symplectic data -----------------------------------------------------------

def symplectic_matrix(f) -> IntMatrix:
    """Action on H; column k is the class of the image of generator k."""
    if isinstance(f, EndoJet):
        cols = [[int(c) for c in img.parts[1]] for img in f.images]
        return IntMatrix.from_rows([[c[r] for c in cols] for r in range(len(cols))])
    return _abelian_matrix(f.images)


def is_torelli(f) -> bool:
    return symplectic_matrix(f) == IntMatrix.identity(2 * f.genus)


def is_in_Lbar(f: FreeEndo) -> bool:
    """Symplectic and the identity on the Lagrangian span{x_i}."""
    return ext.is_Bg(symplectic_matrix(f), f.genus)


def weight_degree(f, cutoff: int) -> Depth:
    """Largest n <= cutoff-1 with f trivial modulo the (n+1)-st LCS term (FreeEndo or EndoJet)."""
    if isinstance(f, EndoJet):
        return _series_weight_degree(displacement_series(f, cutoff), cutoff)
    return endo_weight_degree(f, cutoff)


# -- crossed homomorphism and the extension of J -------------------------------

def lie2_to_wedge(v: LieVector) -> WedgeVector:
    """[a, b] -> a^b for degree-2 Lie elements."""
    return WedgeVector(v.size, 2, dict(v.coords))


def class_in_L(w: ReducedWord) -> bool:
    g = w.genus
    return not any(w.exponent_sums()[g:])


def hat_J(f: FreeEndo, w: ReducedWord) -> WedgeVector:
    """Degree-2 class of w^-1 f(w) as an element of the second exterior power of H."""
    if not class_in_L(w):
        raise EndoError(f"word {w} does not have homology class in L")
    if not is_in_Lbar(f):
        raise EndoError(f"{f.label()} does not act as the identity on L")
    return lie2_to_wedge(lie_class(w.inverse() * f(w), 2))


def J_bar(f: FreeEndo) -> list[WedgeVector]:
    """Projection of hat_J(f) x_i to the second exterior power of H/L, for each i."""
    g = f.genus
    out = []
    for i in range(1, g + 1):
        v = hat_J(f, ReducedWord.x(i, g))
        out.append(WedgeVector(g, 2, {(a - g, b - g): c for (a, b), c in v.coords.items() if a >= g}, "H/L"))
    return out


def J_omega(f: FreeEndo) -> dict[int, int]:
    """-sum_i c(hat_J(f) x_i) ybar_i, with c(a^b) = a.b."""
    g = f.genus
    out = {}
    for i in range(1, g + 1):
        v = hat_J(f, ReducedWord.x(i, g))
        s = sum(c * ext.pairing(a, b, g) for (a, b), c in v.coords.items())
        if s:
            out[i - 1] = -s
    return out


def cal_J(f: FreeEndo) -> tuple[WedgeVector, dict[int, int]]:
    """The extension of the Johnson homomorphism to maps fixing L homologically.

    First component: the element -sum_i ybar_i (x) J_bar(f)_i, which must be
    killed by theta and is pulled back through eta. Second component: J_omega.
    """
    if not is_in_Lbar(f):
        raise EndoError(f"{f.label()} is not the identity on L")
    g = f.genus
    tensor: dict[ext.TensorKey, int] = {}
    for i, v in enumerate(J_bar(f)):
        for pair, c in v.coords.items():
            tensor[(i, pair)] = tensor.get((i, pair), 0) - c
    if not ext.theta(tensor, g).is_zero():
        raise JohnsonError(f"theta does not vanish on the tensor of {f.label()}")
    first = ext.eta_preimage(tensor, g, "H/L")
    if first is None:
        raise JohnsonError(f"tensor of {f.label()} is not in the image of eta")
    return first, J_omega(f)


def cal_J_is_zero(value: tuple[WedgeVector, dict[int, int]]) -> bool:
    return value[0].is_zero() and not value[1]


# -- Johnson and Johnson-Morita homomorphisms ----------------------------------

def _dual_assemble(f, classes: Sequence[LieVector], degree: int) -> HTensorLie:
    g = f.genus
    pairs = []
    for i in range(g):
        pairs.append((i, classes[g + i]))
        pairs.append((g + i, -classes[i]))
    return HTensorLie.from_pairs(2 * g, degree, pairs)


def johnson_morita(f, n: int) -> HTensorLie:
    """J_n(f) in H (x) L_{n+1}(H), for f acting trivially modulo the (n+1)-st LCS term.

    ``f`` may be a FreeEndo or an EndoJet truncated at n+1 or beyond.
    b(J_n(f)) = 0 is checked on every call and recorded in B_AUDIT.
    """
    if n < 1:
        raise EndoError("n must be at least 1")
    series = displacement_series(f, n + 1)
    depth = _series_weight_degree(series, n + 1)
    if not depth.at_least(n):
        raise EndoError(f"{f.label()} has weight degree {depth}, below {n}")
    size = 2 * f.genus
    classes = [LieVector(size, n + 1, to_lyndon(s.degree_part(n + 1))) for s in series]
    value = _dual_assemble(f, classes, n + 1)
    ok = value.apply_b().is_zero()
    B_AUDIT.append((f.label(), n, ok))
    if not ok:
        raise JohnsonError(f"b(J_{n}) is nonzero for {f.label()}")
    return value


def johnson_tau(f) -> WedgeVector:
    """The Johnson homomorphism of a Torelli map, in the third exterior power of H."""
    if not is_torelli(f):
        raise EndoError(f"{f.label()} is not in the Torelli group")
    t = johnson_morita(f, 1)
    tensor = {(h, w): c for (h, w), c in t.coords.items()}
    value = ext.eta_preimage(tensor, 2 * f.genus)
    if value is None:
        raise JohnsonError(f"J_1 of {f.label()} is not in the image of eta")
    return value


def jcom_check(f: FreeEndo, h: FreeEndo) -> dict:
    """Compare tau([f, h]) with (f_* - 1) tau(h).

    The commutator is formed on degree-2 jets of f and h, so the left side
    never touches the rest of the computation of the right side.
    """
    lhs = johnson_tau(jet_commutator(f, h, 2))
    rhs = ext.sp3_minus_one(symplectic_matrix(f), johnson_tau(h), f.genus)
    return {"f": f.label(), "h": h.label(), "ok": lhs == rhs,
            "lhs": lhs.format(f.genus), "rhs": rhs.format(f.genus)}


def twist_catalog(genus: int, boundary: str = ADMISSIBLE, include_braids: bool = True) -> list[FreeEndo]:
    """Catalog of maps fixing L homologically, each with an inverse witness."""
    from .catalog import twist_catalog as build

    return build(genus, boundary, include_braids)
