"""Free groups on x_1..x_g (and y_1..y_g): reduced words and their algebra.

Letters are signed ints. In the full alphabet generator k (1-based) is x_k for
k <= g and y_{k-g} for k > g, so the letter order is x1 < ... < xg < y1 < ... < yg.
The x-only alphabet (the free group F' on the x_i) uses the same numbering,
which means an x-only word embeds in the full alphabet without relabelling.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

FULL = "full"
X_ONLY = "x"

ADMISSIBLE = "admissible"
LONGITUDE = "longitude"


class WordError(ValueError):
    pass


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def alphabet_size(genus: int, alphabet: str) -> int:
    return 2 * genus if alphabet == FULL else genus


def letter_name(k: int, genus: int) -> str:
    return f"x{k}" if k <= genus else f"y{k - genus}"


@dataclass(frozen=True)
class ReducedWord:
    letters: tuple[int, ...]
    genus: int
    alphabet: str = FULL

    def __post_init__(self):
        if self.alphabet not in (FULL, X_ONLY):
            raise WordError(f"unknown alphabet {self.alphabet!r}")
        m = alphabet_size(self.genus, self.alphabet)
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0 or abs(a) > m:
                raise WordError(f"letter {a} outside alphabet of size {m}")
        object.__setattr__(self, "letters", reduce_letters(letters))

    # -- construction ------------------------------------------------------
    @classmethod
    def identity(cls, genus: int, alphabet: str = FULL) -> ReducedWord:
        return cls((), genus, alphabet)

    @classmethod
    def x(cls, i: int, genus: int, alphabet: str = FULL) -> ReducedWord:
        return cls((i,), genus, alphabet)

    @classmethod
    def y(cls, i: int, genus: int) -> ReducedWord:
        return cls((genus + i,), genus, FULL)

    @classmethod
    def parse(cls, text: str, genus: int, alphabet: str = FULL) -> ReducedWord:
        """Parse ``"x1 y2^-1 x1^-1"``; the empty string is the identity."""
        letters = []
        for tok in text.split():
            m = re.fullmatch(r"([xy])(\d+)(\^(-?1))?", tok)
            if not m:
                raise WordError(f"bad token {tok!r}")
            kind, idx, _, exp = m.groups()
            i = int(idx)
            if not 1 <= i <= genus:
                raise WordError(f"index {i} outside genus {genus}")
            if kind == "y" and alphabet == X_ONLY:
                raise WordError("y letter in an x-only word")
            k = i if kind == "x" else genus + i
            letters.append(-k if exp == "-1" else k)
        return cls(tuple(letters), genus, alphabet)

    # -- basic protocol ----------------------------------------------------
    def __str__(self) -> str:
        return " ".join(
            letter_name(abs(a), self.genus) + ("" if a > 0 else "^-1") for a in self.letters
        )

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    @property
    def size(self) -> int:
        return alphabet_size(self.genus, self.alphabet)

    def _compatible(self, other: ReducedWord) -> None:
        if self.genus != other.genus:
            raise WordError(f"genus mismatch: {self.genus} vs {other.genus}")
        if self.alphabet != other.alphabet:
            raise WordError(f"alphabet mismatch: {self.alphabet} vs {other.alphabet}")

    def __mul__(self, other: ReducedWord) -> ReducedWord:
        self._compatible(other)
        return ReducedWord(self.letters + other.letters, self.genus, self.alphabet)

    def inverse(self) -> ReducedWord:
        return ReducedWord(tuple(-a for a in reversed(self.letters)), self.genus, self.alphabet)

    def __invert__(self) -> ReducedWord:
        return self.inverse()

    def __pow__(self, n: int) -> ReducedWord:
        base = self if n >= 0 else self.inverse()
        return ReducedWord(base.letters * abs(n), self.genus, self.alphabet)

    def to_full(self) -> ReducedWord:
        """View an x-only word as an element of the full surface group."""
        return ReducedWord(self.letters, self.genus, FULL)

    def exponent_sums(self) -> tuple[int, ...]:
        """Abelianization, as a vector indexed by generator (x's then y's)."""
        v = [0] * self.size
        for a in self.letters:
            v[abs(a) - 1] += 1 if a > 0 else -1
        return tuple(v)

    def substitute(self, images: Sequence[ReducedWord], inverse_images: Sequence[ReducedWord] | None = None) -> ReducedWord:
        """Image of this word under the endomorphism sending generator k to images[k-1]."""
        if len(images) != self.size:
            raise WordError(f"need {self.size} images, got {len(images)}")
        inv = inverse_images or [w.inverse() for w in images]
        out: list[int] = []
        for a in self.letters:
            piece = images[a - 1].letters if a > 0 else inv[-a - 1].letters
            for b in piece:
                if out and out[-1] == -b:
                    out.pop()
                else:
                    out.append(b)
        w0 = images[0] if images else self
        return ReducedWord(tuple(out), w0.genus, w0.alphabet)


def multiply(*words: ReducedWord) -> ReducedWord:
    out = words[0]
    for w in words[1:]:
        out = out * w
    return out


def conjugate(u: ReducedWord, by: ReducedWord) -> ReducedWord:
    """by * u * by^-1."""
    return by * u * by.inverse()


def commutator(u: ReducedWord, v: ReducedWord) -> ReducedWord:
    """[u, v] = u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


def boundary_word(genus: int, convention: str = ADMISSIBLE) -> ReducedWord:
    """The word representing the boundary curve in the chosen basis convention.

    ``admissible``: [x1,y1]...[xg,yg].
    ``longitude``: (x1...xg)^-1 (y1 x1 y1^-1 ... yg xg yg^-1).
    """
    if genus < 1:
        raise WordError("genus must be at least 1")
    xs = [ReducedWord.x(i, genus) for i in range(1, genus + 1)]
    ys = [ReducedWord.y(i, genus) for i in range(1, genus + 1)]
    if convention == ADMISSIBLE:
        return multiply(*(commutator(x, y) for x, y in zip(xs, ys)))
    if convention == LONGITUDE:
        return multiply(multiply(*xs).inverse(), *(conjugate(x, y) for x, y in zip(xs, ys)))
    raise WordError(f"unknown boundary convention {convention!r}")


def generators(genus: int, alphabet: str = FULL) -> list[ReducedWord]:
    return [ReducedWord((k,), genus, alphabet) for k in range(1, alphabet_size(genus, alphabet) + 1)]
