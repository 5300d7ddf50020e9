"""Exact integer linear algebra: Smith/Hermite forms, kernels and lattices in Z^N.

Everything here works over Python ints. Dense matrices are plain immutable
row tuples; the elimination kernels work on sparse dict rows because the
matrices that come out of the Lie and exterior modules are mostly zeros.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    nrows: int
    ncols: int
    entries: tuple[int, ...]  # row-major

    def __post_init__(self):
        if len(self.entries) != self.nrows * self.ncols:
            raise LatticeError(
                f"{self.nrows}x{self.ncols} matrix needs {self.nrows * self.ncols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
        rows = [tuple(int(a) for a in r) for r in rows]
        if ncols is None:
            if not rows:
                raise LatticeError("cannot infer column count of an empty row list")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise LatticeError("ragged rows")
        return cls(len(rows), ncols, tuple(a for r in rows for a in r))

    @classmethod
    def from_sparse_columns(cls, nrows: int, columns: Sequence[dict[int, int]]) -> IntMatrix:
        """Build a matrix whose j-th column is the sparse vector ``columns[j]``."""
        ncols = len(columns)
        data = [0] * (nrows * ncols)
        for j, col in enumerate(columns):
            for i, v in col.items():
                data[i * ncols + j] += v
        return cls(nrows, ncols, tuple(data))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMatrix:
        return cls(nrows, ncols, (0,) * (nrows * ncols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.ncols] if self.ncols else ()

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(self.nrows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows([self.column(j) for j in range(self.ncols)], self.nrows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise LatticeError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        cols = [other.column(j) for j in range(other.ncols)]
        out = []
        for i in range(self.nrows):
            r = self.row(i)
            out.append([sum(a * b for a, b in zip(r, c) if a) for c in cols])
        return IntMatrix.from_rows(out, other.ncols)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.ncols:
            raise LatticeError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(self.row(i), v) if a) for i in range(self.nrows))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise LatticeError("shape mismatch")
        return IntMatrix(self.nrows, self.ncols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.nrows) for j in range(self.ncols) if i != j)

    def sparse_rows(self) -> list[dict[int, int]]:
        out = []
        for i in range(self.nrows):
            out.append({j: a for j, a in enumerate(self.row(i)) if a})
        return out

    def determinant(self) -> int:
        """Bareiss fraction-free determinant."""
        if self.nrows != self.ncols:
            raise LatticeError("determinant of a non-square matrix")
        n = self.nrows
        a = [list(r) for r in self.rows()]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1


# --------------------------------------------------------------------------
# sparse row elimination

def _axpy(row: dict[int, int], q: int, pivot: dict[int, int]) -> None:
    """row -= q * pivot, in place."""
    for k, v in pivot.items():
        nv = row.get(k, 0) - q * v
        if nv:
            row[k] = nv
        else:
            row.pop(k, None)


def _echelon(rows: Iterable[dict[int, int]], limit: int | None = None):
    """Unimodular row reduction of sparse rows.

    Only columns ``< limit`` are eliminated (all columns when ``limit`` is None).
    Returns ``(pivots, rest)``: ``pivots`` is a list of ``(col, row)`` in increasing
    column order with positive pivot entries; ``rest`` are the nonzero rows that
    have no entry in an eliminated column.
    """
    buckets: dict[int, list[dict[int, int]]] = {}
    heap: list[int] = []
    rest: list[dict[int, int]] = []

    def place(r: dict[int, int]) -> None:
        if not r:
            return
        lead = min(r) if limit is None else min((k for k in r if k < limit), default=None)
        if lead is None:
            rest.append(r)
            return
        if lead not in buckets:
            buckets[lead] = []
            heapq.heappush(heap, lead)
        buckets[lead].append(r)

    for r in rows:
        place(dict(r))

    pivots = []
    while heap:
        c = heapq.heappop(heap)
        cand = buckets.pop(c)
        while len(cand) > 1:
            cand.sort(key=lambda r: abs(r[c]))
            p = cand[0]
            keep = [p]
            for r in cand[1:]:
                _axpy(r, r[c] // p[c], p)
                if c in r:
                    keep.append(r)
                else:
                    place(r)
            cand = keep
        p = cand[0]
        if p[c] < 0:
            for k in p:
                p[k] = -p[k]
        pivots.append((c, p))
    return pivots, rest


def _reduce_above(pivots: list[tuple[int, dict[int, int]]]) -> None:
    """Reduce entries above each pivot into [0, pivot) -- canonical HNF."""
    for idx in range(len(pivots)):
        c, p = pivots[idx]
        d = p[c]
        for jdx in range(idx):
            r = pivots[jdx][1]
            v = r.get(c, 0)
            if v and not 0 <= v < d:
                _axpy(r, v // d, p)


def hermite_rows(generators: Iterable[Sequence[int] | dict[int, int]], ncols: int) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form of the lattice spanned by ``generators``."""
    sparse = []
    for g in generators:
        if isinstance(g, dict):
            sparse.append({k: v for k, v in g.items() if v})
        else:
            if len(g) != ncols:
                raise LatticeError("generator length does not match ambient rank")
            sparse.append({k: v for k, v in enumerate(g) if v})
    pivots, _ = _echelon(sparse)
    _reduce_above(pivots)
    out = []
    for _, r in pivots:
        v = [0] * ncols
        for k, a in r.items():
            v[k] = a
        out.append(tuple(v))
    return out


def rank(M: IntMatrix) -> int:
    pivots, _ = _echelon(M.sparse_rows())
    return len(pivots)


# --------------------------------------------------------------------------
# Smith normal form

def smith_normal_form(M: IntMatrix) -> tuple[list[int], IntMatrix, IntMatrix]:
    """Return ``(diag, left, right)`` with ``left @ M @ right`` diagonal.

    ``diag`` has length ``min(rows, cols)``, is nonnegative and each entry divides
    the next. ``left`` and ``right`` are unimodular. Dense algorithm; meant for
    matrices up to a few hundred rows.
    """
    m, n = M.nrows, M.ncols
    A = [list(r) for r in M.rows()]
    L = [[int(i == j) for j in range(m)] for i in range(m)]
    R = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in R:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q row_src
        if q:
            ra, rs = A[dst], A[src]
            for k in range(n):
                if rs[k]:
                    ra[k] -= q * rs[k]
            la, ls = L[dst], L[src]
            for k in range(m):
                if ls[k]:
                    la[k] -= q * ls[k]

    def add_col(dst, src, q):  # col_dst -= q col_src
        if q:
            for row in A:
                if row[src]:
                    row[dst] -= q * row[src]
            for row in R:
                if row[src]:
                    row[dst] -= q * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                add_row(i, t, A[i][t] // p)
            for j in range(t + 1, n):
                add_col(j, t, A[t][j] // p)
            off = [(abs(A[i][t]), i, 'r') for i in range(t + 1, m) if A[i][t]]
            off += [(abs(A[t][j]), j, 'c') for j in range(t + 1, n) if A[t][j]]
            if off:
                _, k, kind = min(off)
                if kind == 'r':
                    swap_rows(t, k)
                else:
                    swap_cols(t, k)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is not None:
                add_row(t, bad[0], -1)
                continue
            break
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            L[t] = [-a for a in L[t]]
        t += 1
    diag = [A[i][i] for i in range(min(m, n))]
    return diag, IntMatrix.from_rows(L, m), IntMatrix.from_rows(R, n)


def _normalize_diagonal(d: list[int]) -> list[int]:
    """Turn an arbitrary diagonal into a divisibility chain with the same cokernel."""
    from math import gcd

    d = sorted(abs(x) for x in d if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                a, b = d[i], d[j]
                if b % a:
                    g = gcd(a, b)
                    d[i], d[j] = g, a * b // g
                    changed = True
        d.sort()
    return d


def smith_invariants(M: IntMatrix) -> list[int]:
    """Nonzero invariant factors of ``M`` (sparse path, no transforms).

    Alternates row echelon on the matrix and on its transpose until the result
    is diagonal, then normalizes the divisibility chain.
    """
    rows = M.sparse_rows()
    while True:
        pivots, _ = _echelon(rows)
        echelon = [r for _, r in pivots]
        if all(len(r) == 1 for r in echelon):
            return _normalize_diagonal([next(iter(r.values())) for r in echelon])
        # transpose the echelon rows
        cols: dict[int, dict[int, int]] = {}
        for i, r in enumerate(echelon):
            for k, v in r.items():
                cols.setdefault(k, {})[i] = v
        rows = list(cols.values())


# --------------------------------------------------------------------------
# lattices

def kernel_basis(M: IntMatrix) -> list[tuple[int, ...]]:
    """Basis (HNF) of {v in Z^cols : M v = 0}."""
    m, n = M.nrows, M.ncols
    aug = []
    for j in range(n):
        r = {i: v for i, v in enumerate(M.column(j)) if v}
        r[m + j] = 1
        aug.append(r)
    _, rest = _echelon(aug, limit=m)
    gens = [{k - m: v for k, v in r.items()} for r in rest]
    return hermite_rows(gens, n)


@dataclass(frozen=True)
class IntegerLattice:
    """A subgroup of Z^N stored by its canonical (Hermite) basis."""

    ambient_rank: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, generators: Iterable[Sequence[int] | dict[int, int]], ambient_rank: int) -> IntegerLattice:
        return cls(ambient_rank, tuple(hermite_rows(generators, ambient_rank)))

    @classmethod
    def zero(cls, ambient_rank: int) -> IntegerLattice:
        return cls(ambient_rank, ())

    @classmethod
    def full(cls, ambient_rank: int) -> IntegerLattice:
        return cls.span(({i: 1} for i in range(ambient_rank)), ambient_rank)

    @classmethod
    def coordinate(cls, indices: Iterable[int], ambient_rank: int) -> IntegerLattice:
        """Span of the unit vectors e_i for i in ``indices``."""
        return cls.span(({i: 1} for i in indices), ambient_rank)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(self.basis, self.ambient_rank)

    def _check(self, other: IntegerLattice) -> None:
        if self.ambient_rank != other.ambient_rank:
            raise LatticeError(f"ambient ranks differ: {self.ambient_rank} vs {other.ambient_rank}")

    def coordinates(self, v: Sequence[int]) -> list[int] | None:
        """Coefficients of ``v`` in the canonical basis, or None if v is not in the lattice."""
        if len(v) != self.ambient_rank:
            raise LatticeError(f"vector of length {len(v)} in a lattice of ambient rank {self.ambient_rank}")
        v = list(v)
        coeffs = []
        for b in self.basis:
            c = next(k for k, a in enumerate(b) if a)
            if v[c] % b[c]:
                return None
            q = v[c] // b[c]
            coeffs.append(q)
            if q:
                for k in range(c, self.ambient_rank):
                    if b[k]:
                        v[k] -= q * b[k]
        return coeffs if not any(v) else None

    def __contains__(self, v: Sequence[int]) -> bool:
        return self.coordinates(v) is not None

    def __add__(self, other: IntegerLattice) -> IntegerLattice:
        self._check(other)
        return IntegerLattice.span(self.basis + other.basis, self.ambient_rank)

    def __le__(self, other: IntegerLattice) -> bool:
        self._check(other)
        return all(b in other for b in self.basis)

    def __lt__(self, other: IntegerLattice) -> bool:
        return self <= other and self != other

    def __ge__(self, other: IntegerLattice) -> bool:
        return other <= self

    def __gt__(self, other: IntegerLattice) -> bool:
        return other < self

    def quotient_invariants(self, sub: IntegerLattice) -> list[int]:
        """Invariant factors of self/sub (sub must be contained in self).

        Trivial factors 1 are dropped; each free Z summand is reported as 0.
        """
        self._check(sub)
        coords = []
        for b in sub.basis:
            c = self.coordinates(b)
            if c is None:
                raise LatticeError("quotient requested but sub is not contained in self")
            coords.append(c)
        if not coords:
            return [0] * self.rank
        factors = smith_invariants(IntMatrix.from_rows(coords, self.rank)) if self.rank else []
        torsion = [d for d in factors if d != 1]
        return torsion + [0] * (self.rank - len(factors))

    def witness_outside(self, other: IntegerLattice) -> tuple[int, ...] | None:
        """A basis vector of ``self`` not contained in ``other`` (None if self <= other)."""
        self._check(other)
        return next((b for b in self.basis if b not in other), None)


def kernel_lattice(M: IntMatrix) -> IntegerLattice:
    return IntegerLattice(M.ncols, tuple(kernel_basis(M)))


def image_lattice(M: IntMatrix) -> IntegerLattice:
    """Lattice spanned by the columns of M."""
    return IntegerLattice.span((M.column(j) for j in range(M.ncols)), M.nrows)
