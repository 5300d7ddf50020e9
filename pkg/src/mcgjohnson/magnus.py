"""Truncated Magnus expansion of free-group words.

A word maps to the free associative algebra by z -> 1 + Z and
z^-1 -> 1 - Z + Z^2 - ..., truncated at a cutoff degree N. The lowest nonzero
degree of expand(w) - 1 is the lower-central-series depth of w.

Series are stored as one dense integer array per degree, the degree-k part
having shape (m,)*k for an alphabet of size m. The index tuple of an entry is
the monomial, so the letter-count multidegree of a term is read straight off
its index. Letters are 0-based here: generator k of a word is index k-1.
Coefficients live in int64 while a running bound proves they fit and move to
Python ints (object arrays) once they might not.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .words import ReducedWord

# Beyond this many stored coefficients an expansion is refused.
MAX_ENTRIES = 1 << 24
_INT64_SAFE = 1 << 62


class ResourceBudgetError(RuntimeError):
    """Raised when a computation would exceed the configured memory budget."""


def series_entries(size: int, cutoff: int) -> int:
    return sum(size ** k for k in range(cutoff + 1))


def check_budget(size: int, cutoff: int) -> None:
    n = series_entries(size, cutoff)
    if n > MAX_ENTRIES:
        raise ResourceBudgetError(
            f"truncated series over {size} letters at cutoff {cutoff} needs {n} coefficients "
            f"(budget {MAX_ENTRIES})"
        )


@dataclass(frozen=True)
class Depth:
    """Filtration depth of a word or endomorphism, honest about truncation.

    ``exact`` is False when every coefficient up to the cutoff vanished, in
    which case ``value`` is only a lower bound. ``identity`` marks the empty
    word (or the identity map), which lies in every term of the filtration.
    """

    value: int
    exact: bool = True
    identity: bool = False

    def at_least(self, n: int) -> bool:
        return self.value >= n

    def __str__(self) -> str:
        if self.identity:
            return "identity"
        return str(self.value) if self.exact else f">= {self.value}"

    def to_json(self):
        if self.identity:
            return "identity"
        return self.value if self.exact else f">={self.value}"


class TruncatedSeries:
    """Element of the free associative algebra over Z, truncated at ``cutoff``."""

    __slots__ = ("size", "cutoff", "parts", "_bound")

    def __init__(self, size: int, cutoff: int, parts: list[np.ndarray], bound: int | None = None):
        self.size = size
        self.cutoff = cutoff
        self._bound = bound if bound is not None else _true_bound(parts)
        if parts and parts[0].dtype == object and self._bound <= _INT64_SAFE >> 16:
            # Back to machine integers once the coefficients are known to be small.
            parts = [p.astype(np.int64) for p in parts]
        self.parts = parts

    @classmethod
    def one(cls, size: int, cutoff: int) -> TruncatedSeries:
        if cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        check_budget(size, cutoff)
        parts = [np.zeros((size,) * k, dtype=np.int64) for k in range(cutoff + 1)]
        parts[0][()] = 1
        return cls(size, cutoff, parts, 1)

    # -- in-place letter multiplication (used only while building) ---------
    def _grow(self, factor: int) -> None:
        # The bound covers the coefficients after the pending operation.
        self._bound *= factor
        limit = _INT64_SAFE // (self.cutoff + 2)
        if self._bound > limit and self.parts[0].dtype != object:
            self._bound = _true_bound(self.parts) * factor
            if self._bound > limit:
                self.parts = [p.astype(object) for p in self.parts]

    def _times_letter(self, j: int) -> None:
        self._grow(2)
        for k in range(self.cutoff, 0, -1):
            self.parts[k][..., j] += self.parts[k - 1]

    def _times_inverse_letter(self, j: int) -> None:
        self._grow(self.cutoff + 1)
        for k in range(self.cutoff, 0, -1):
            target = self.parts[k]
            for t in range(1, k + 1):
                idx = (Ellipsis,) + (j,) * t
                if t % 2:
                    target[idx] -= self.parts[k - t]
                else:
                    target[idx] += self.parts[k - t]

    # -- algebra -----------------------------------------------------------
    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        if self.size != other.size:
            raise ValueError("alphabet size mismatch")
        cutoff = min(self.cutoff, other.cutoff)
        bound = self._bound * other._bound * (cutoff + 1)
        use_object = bound > _INT64_SAFE or self.parts[0].dtype == object or other.parts[0].dtype == object
        dtype = object if use_object else np.int64
        parts = []
        for k in range(cutoff + 1):
            acc = np.zeros((self.size,) * k, dtype=dtype)
            for a in range(k + 1):
                left = self.parts[a].astype(dtype)
                right = other.parts[k - a].astype(dtype)
                acc += np.multiply.outer(left, right)
            parts.append(acc)
        return TruncatedSeries(self.size, cutoff, parts)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        cutoff = min(self.cutoff, other.cutoff)
        dtype = _sum_dtype(self, other)
        parts = [np.asarray(self.parts[k].astype(dtype) + other.parts[k].astype(dtype), dtype=dtype)
                 for k in range(cutoff + 1)]
        return TruncatedSeries(self.size, cutoff, parts)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        cutoff = min(self.cutoff, other.cutoff)
        dtype = _sum_dtype(self, other)
        parts = [np.asarray(self.parts[k].astype(dtype) - other.parts[k].astype(dtype), dtype=dtype)
                 for k in range(cutoff + 1)]
        return TruncatedSeries(self.size, cutoff, parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.size != other.size or self.cutoff != other.cutoff:
            return False
        return all(np.array_equal(a, b) for a, b in zip(self.parts, other.parts))

    __hash__ = None  # mutable-array payload

    # -- inspection --------------------------------------------------------
    def coefficient(self, monomial: Sequence[int]) -> int:
        if len(monomial) > self.cutoff:
            raise ValueError("monomial longer than cutoff")
        return int(self.parts[len(monomial)][tuple(monomial)])

    def degree_part(self, k: int) -> dict[tuple[int, ...], int]:
        """Nonzero terms of degree ``k`` as {monomial: coefficient}."""
        arr = self.parts[k]
        if k == 0:
            c = int(arr[()])
            return {(): c} if c else {}
        nz = np.nonzero(arr)
        return {tuple(int(i) for i in idx): int(arr[idx]) for idx in zip(*nz)}

    def terms(self) -> dict[tuple[int, ...], int]:
        out: dict[tuple[int, ...], int] = {}
        for k in range(self.cutoff + 1):
            out.update(self.degree_part(k))
        return out

    def lowest_nontrivial_degree(self) -> int | None:
        """Lowest k >= 1 with a nonzero degree-k part, None if all vanish."""
        for k in range(1, self.cutoff + 1):
            if np.any(self.parts[k]):
                return k
        return None

    def __repr__(self) -> str:
        shown = ", ".join(f"{m}: {c}" for m, c in list(self.terms().items())[:8])
        return f"TruncatedSeries(size={self.size}, cutoff={self.cutoff}, {{{shown}}})"


def _sum_dtype(a: TruncatedSeries, b: TruncatedSeries):
    if object in (a.parts[0].dtype, b.parts[0].dtype) or a._bound + b._bound > _INT64_SAFE:
        return object
    return np.int64


def _true_bound(parts: Iterable[np.ndarray]) -> int:
    best = 0
    for p in parts:
        if p.size:
            best = max(best, int(np.max(np.abs(p))))
    return max(best, 1)


def expand_letters(letters: Sequence[int], size: int, cutoff: int) -> TruncatedSeries:
    """Magnus expansion of a signed-letter sequence (1-based letters)."""
    s = TruncatedSeries.one(size, cutoff)
    for a in letters:
        if a > 0:
            s._times_letter(a - 1)
        else:
            s._times_inverse_letter(-a - 1)
    return s


def substitute(series: TruncatedSeries, images: Sequence[TruncatedSeries]) -> TruncatedSeries:
    """Apply the algebra map Z_j -> images[j] - 1 to a truncated series.

    The images may live over a different alphabet than ``series``; the result
    lives over theirs. Each image must have constant term 1, so a degree-k
    monomial only feeds degrees >= k. Contractions are shared across monomials
    with a common prefix; arithmetic uses Python ints throughout.
    """
    if len(images) != series.size:
        raise ValueError(f"need {series.size} images, got {len(images)}")
    if any(int(s.parts[0][()]) != 1 for s in images):
        raise ValueError("substituted series must have constant term 1")
    m = images[0].size
    N = min([series.cutoff] + [s.cutoff for s in images])
    stacks: list = [None]
    for d in range(1, N + 1):
        stack = np.stack([s.parts[d].astype(object) for s in images])
        stacks.append(stack if np.any(stack) else None)
    out = [np.zeros((m,) * k, dtype=object) for k in range(N + 1)]
    out[0][()] = int(series.parts[0][()])

    def feed(tensor: np.ndarray, remaining: int, degree: int) -> None:
        if remaining == 0:
            out[degree] += tensor
            return
        for d in range(1, N - degree - remaining + 2):
            if stacks[d] is not None:
                feed(np.tensordot(tensor, stacks[d], axes=([0], [0])), remaining - 1, degree + d)

    for k in range(1, N + 1):
        part = series.parts[k]
        if np.any(part):
            feed(part.astype(object), k, 0)
    return TruncatedSeries(m, N, out)


def series_inverse(series: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with constant term 1."""
    if int(series.parts[0][()]) != 1:
        raise ValueError("only series with constant term 1 are inverted here")
    one = TruncatedSeries.one(series.size, series.cutoff)
    minus_t = one - series
    out, power = one, one
    for _ in range(series.cutoff):
        power = power * minus_t
        out = out + power
    return out


def embed_series(series: TruncatedSeries, size: int) -> TruncatedSeries:
    """View a series over the first ``series.size`` letters of a larger alphabet."""
    if size < series.size:
        raise ValueError("target alphabet is smaller")
    parts = []
    for k, p in enumerate(series.parts):
        big = np.zeros((size,) * k, dtype=p.dtype)
        big[(slice(0, series.size),) * k] = p
        parts.append(big)
    return TruncatedSeries(size, series.cutoff, parts)


def magnus_expand(w: ReducedWord, cutoff: int) -> TruncatedSeries:
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    return expand_letters(w.letters, w.size, cutoff)


def word_degree(w: ReducedWord, cutoff: int) -> Depth:
    """Largest n with w in the n-th lower central series term, decided up to ``cutoff``."""
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    if not w.letters:
        return Depth(cutoff + 1, exact=False, identity=True)
    # Nonzero exponent sums settle the question without expanding.
    if any(w.exponent_sums()):
        return Depth(1)
    low = magnus_expand(w, cutoff).lowest_nontrivial_degree()
    if low is None:
        return Depth(cutoff + 1, exact=False)
    return Depth(low)


def homogeneous_part(w: ReducedWord, n: int) -> dict[tuple[int, ...], int]:
    """Degree-n part of magnus_expand(w) - 1 as {0-based monomial: coefficient}."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    return magnus_expand(w, n).degree_part(n)


def displacement_words(f) -> list[ReducedWord]:
    """The words z^-1 f(z) for each generator z of the endomorphism's domain."""
    out = []
    for k, img in enumerate(f.images, start=1):
        z = ReducedWord((k,), img.genus, img.alphabet)
        out.append(z.inverse() * img)
    return out


def endo_weight_degree(f, cutoff: int) -> Depth:
    """Largest n <= cutoff-1 with f acting trivially modulo the (n+1)-st LCS term.

    ``f`` is anything exposing ``images``, a list of ReducedWord images of the
    generators in order. The answer is ">= cutoff" when the displacements all
    vanish to the cutoff.
    """
    degs = [word_degree(d, cutoff) for d in displacement_words(f)]
    if all(d.identity for d in degs):
        return Depth(cutoff, exact=False, identity=True)
    exact = [d.value for d in degs if d.exact]
    if not exact:
        return Depth(cutoff, exact=False)
    return Depth(min(exact) - 1)
