"""Concrete mapping-class representatives used by the verification suites.

Meridian twists T_i (y_i -> y_i x_i) preserve both boundary words, so they sit
in either basis. Braid images supply the rest: psi in the longitude basis and
kappa in the admissible basis.

Everything above acts trivially on the third exterior power of L, which is
where psi-images of Torelli braids have their Johnson values. To exercise the
commutator identity with nonzero values, the longitude basis also gets maps
that move L: the half twist exchanging handles k and k+1 (the lift of the Artin
generator sigma_k) and the twist x_1 -> y_1 x_1 along the first y-curve.
"""
from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator

from . import braid as br
from .mcg import (EndoJet, FreeEndo, commutator, compose, compose_all, is_torelli, jet_commutator, jet_compose,
                  weight_degree)
from .words import ADMISSIBLE, LONGITUDE, ReducedWord


def _gens(g: int) -> list[ReducedWord]:
    return [ReducedWord((k,), g) for k in range(1, 2 * g + 1)]


def meridian_twist(g: int, i: int, boundary: str = ADMISSIBLE) -> FreeEndo:
    """y_i -> y_i x_i, everything else fixed."""
    xi, yi = ReducedWord.x(i, g), ReducedWord.y(i, g)
    imgs, inv = _gens(g), _gens(g)
    imgs[g + i - 1] = yi * xi
    inv[g + i - 1] = yi * xi.inverse()
    return FreeEndo(g, tuple(imgs), boundary, tuple(inv), f"T{i}")


def half_twist(g: int, k: int) -> FreeEndo:
    """Exchange handles k and k+1 in the longitude basis, lifting sigma_k on the x_i."""
    if not 1 <= k < g:
        raise ValueError(f"half twist needs 1 <= k < {g}")
    x = [ReducedWord.x(i, g) for i in range(1, g + 1)]
    y = [ReducedWord.y(i, g) for i in range(1, g + 1)]
    a, b, ya, yb = x[k - 1], x[k], y[k - 1], y[k]
    imgs, inv = _gens(g), _gens(g)
    imgs[k - 1], imgs[k] = b, b.inverse() * a * b
    imgs[g + k - 1], imgs[g + k] = ya * a * ya.inverse() * yb, ya * b
    inv[k - 1], inv[k] = a * b * a.inverse(), a
    inv[g + k - 1], inv[g + k] = yb * a.inverse(), yb * b.inverse() * yb.inverse() * ya
    return FreeEndo(g, tuple(imgs), LONGITUDE, tuple(inv), f"H{k}")


def y_twist(g: int) -> FreeEndo:
    """x_1 -> y_1 x_1 in the longitude basis."""
    x1, y1 = ReducedWord.x(1, g), ReducedWord.y(1, g)
    imgs, inv = _gens(g), _gens(g)
    imgs[0] = y1 * x1
    inv[0] = y1.inverse() * x1
    return FreeEndo(g, tuple(imgs), LONGITUDE, tuple(inv), "W1")


def mixing_maps(g: int) -> list[FreeEndo]:
    """Longitude-basis maps that do not fix L: half twists and y-twists, with inverses.

    The y-twist on handle k+1 is the conjugate of the one on handle k by the
    half twist H_k.
    """
    halves = [half_twist(g, k) for k in range(1, g)]
    ys = [y_twist(g)]
    for k, h in enumerate(halves, start=1):
        w = compose(compose(h, ys[-1]), h.inverse())
        ys.append(FreeEndo(g, w.images, w.boundary, w.inverse_images, f"W{k + 1}", verify_inverse=False))
    return _with_inverses(halves + ys)


def _with_inverses(maps: list[FreeEndo]) -> list[FreeEndo]:
    out = []
    for m in maps:
        out.extend([m, m.inverse()])
    return out


def twist_catalog(g: int, boundary: str = ADMISSIBLE, include_braids: bool = True) -> list[FreeEndo]:
    """Generators of the twist subgroup on L-curves available in the given basis.

    Meridian twists and their inverses, plus psi-images of Artin generators in
    the longitude basis or kappa-images in the admissible basis.
    """
    maps = [meridian_twist(g, i, boundary) for i in range(1, g + 1)]
    if include_braids:
        image = br.psi if boundary == LONGITUDE else br.kappa
        maps += [image(a) for a in br.artin_generators(g)]
    return _with_inverses(maps)


def L_generators(g: int) -> list[FreeEndo]:
    """Generators of the twist subgroup on L-curves, in the longitude basis."""
    return twist_catalog(g, LONGITUDE, include_braids=True)


def torelli_catalog(g: int, boundary: str, rng: random.Random, samples: int = 4) -> list[FreeEndo]:
    """Torelli elements with inverse witnesses.

    Longitude basis: psi of depth-2 braid commutators, commutators of L-twist
    generators (Torelli because their symplectic images commute), and
    conjugates of these by products of y-twists, whose Johnson values leave L.
    Admissible basis: kappa-images of Artin generators and of a few depth-2
    braid commutators.
    """
    out: list[FreeEndo] = []
    if boundary == LONGITUDE:
        if g >= 3:
            for _ in range(samples):
                out.append(br.psi(br.random_iterated_commutator(g, 2, rng)))
        gens = [m for m in L_generators(g) if not m.name.startswith("T")]
        attempts = 0
        while len(out) < 2 * samples and gens and attempts < 50 * samples:
            attempts += 1
            c = commutator(rng.choice(gens), rng.choice(gens))
            if not c.is_identity():
                out.append(c)
        ytw = [m for m in mixing_maps(g) if m.name.startswith("W") and not m.name.endswith("^-1")]
        if ytw and out:
            conj = compose_all(*ytw)
            for h in list(out[:samples]):
                c = compose_all(conj, h, conj.inverse())
                out.append(FreeEndo(g, c.images, c.boundary, c.inverse_images,
                                    f"Wall.{h.name}.Wall^-1", verify_inverse=False))
    else:
        if g >= 2:
            out.extend(br.kappa(a) for a in br.artin_generators(g))
            for _ in range(samples):
                out.append(br.kappa(br.random_iterated_commutator(g, 2, rng)))
    assert all(is_torelli(h) for h in out)
    return out


def catalog_pairs(g: int, rng: random.Random, samples: int = 4) -> Iterator[tuple[FreeEndo, FreeEndo]]:
    """Pairs (f, h) sharing a basis, with f from the twist catalog or a mixing map and h Torelli.

    In the admissible basis only kappa-images of Artin generators serve as h,
    which keeps the composite words short.
    """
    fs = twist_catalog(g, LONGITUDE) + mixing_maps(g)
    for h in torelli_catalog(g, LONGITUDE, rng, samples):
        for f in fs:
            yield f, h
    if g >= 2:
        fs = twist_catalog(g, ADMISSIBLE)
        for h in (br.kappa(a) for a in br.artin_generators(g)):
            for f in fs:
                yield f, h


def _base_name(name: str) -> str:
    return name[:-3] if name.endswith("^-1") else name


def torelli_conjugators(g: int) -> list[FreeEndo]:
    """Torelli maps W psi([A12, A13]) W^-1 for W = W1, W1 W2, ... (empty below genus 3)."""
    if g < 3:
        return []
    core = br.psi(br.commutator(br.artin_generator(g, 1, 2), br.artin_generator(g, 1, 3)))
    ws = {m.name: m for m in mixing_maps(g)}
    out = []
    for k in range(1, g + 1):
        names = [f"W{i}" for i in range(1, k + 1)]
        w = compose_all(*(ws[n] for n in names))
        c = compose_all(w, core, w.inverse())
        out.append(FreeEndo(g, c.images, c.boundary, c.inverse_images, f"t{k}", verify_inverse=False))
    return out


@lru_cache(maxsize=None)
def commutator_generators(g: int, boundary: str, cutoff: int) -> tuple[EndoJet, ...]:
    """Jets of L-twist generators for sampling commutators.

    A twist on a curve with class in L stays one after conjugation by a
    Torelli map, so in the longitude basis the catalog generators are joined
    by their conjugates t m t^-1 under torelli_conjugators. Without these,
    meridian twists would be central (each is psi of a framing braid) and the
    Johnson values of the commutators would never leave the third power of L.
    """
    base = twist_catalog(g, boundary)
    out = [EndoJet.from_endo(m, cutoff) for m in base]
    if boundary == LONGITUDE:
        for k, t in enumerate(torelli_conjugators(g), start=1):
            tj = EndoJet.from_endo(t, cutoff)
            for m in base:
                if m.name.endswith("^-1"):
                    continue
                c = jet_compose(jet_compose(tj, EndoJet.from_endo(m, cutoff)), tj.inverse(),
                                f"t{k}.{m.name}.t{k}^-1")
                out.extend([c, c.inverse()])
    return tuple(out)


def iterated_L_commutator(g: int, length: int, rng: random.Random, cutoff: int,
                          boundary: str = LONGITUDE, tries: int = 8) -> EndoJet:
    """Left-normed commutator of ``length`` random L-twist generators, as a jet.

    Generators come from commutator_generators. Consecutive picks never share
    a generator up to inversion, since such a commutator is trivial. At each
    step up to ``tries`` generators are tried in turn, keeping the first whose
    commutator is still nontrivial up to the cutoff; most uniform picks give
    the identity, which would make the samples uninformative.
    """
    gens = commutator_generators(g, boundary, cutoff)
    first = rng.choice(gens)
    out, last = first, _base_name(first.name)
    for _ in range(length - 1):
        choices = [m for m in gens if _base_name(m.name) != last]
        for attempt in range(tries):
            nxt = rng.choice(choices)
            candidate = jet_commutator(out, nxt, cutoff)
            if weight_degree(candidate, cutoff).exact or attempt == tries - 1:
                break
        out, last = candidate, _base_name(nxt.name)
    return out
