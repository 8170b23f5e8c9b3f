"""Exact linear algebra over the rationals.

Two independent rank routes are provided: a sparse integer semi-echelon
(:class:`Echelon`) used by every jet computation, and a dense fraction-free
Bareiss elimination (:func:`bareiss_rank`) used as a cross-check.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

SparseRow = dict[int, int]


def clear_denominators(row: Mapping[int, int | Fraction]) -> SparseRow:
    """Scale a rational sparse row to a primitive integer row (same span)."""
    den = 1
    for v in row.values():
        if type(v) is Fraction:
            den = lcm(den, v.denominator)
    out = {}
    for k, v in row.items():
        if v:
            out[k] = int(v * den) if den != 1 else int(v)
    return _primitive(out)


def _primitive(row: SparseRow) -> SparseRow:
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {k: v // g for k, v in row.items()}
    return row


class Echelon:
    """Incremental semi-echelon basis of integer sparse rows.

    Each stored row has a distinct leading column, the smallest column index
    present.  Because jet columns are numbered by increasing degree, the
    number of pivots whose leading column lies below a degree cutoff equals
    the rank of the span truncated at that degree.
    """

    def __init__(self):
        self.pivots: dict[int, SparseRow] = {}

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def leads(self) -> list[int]:
        return sorted(self.pivots)

    def _eliminate(self, row: SparseRow, stop: int | None = None, full: bool = False):
        """Reduce ``row`` in place-ish; returns (row, scale, lead).

        ``scale`` is the factor the original row was multiplied by.  With
        ``full`` the reduction continues past non-pivot columns (normal form),
        otherwise it stops at the first non-pivot column, which becomes the
        leading column.  Columns >= ``stop`` are never eliminated.
        """
        pivots = self.pivots
        heap = list(row)
        heapq.heapify(heap)
        scale = 1
        last = -1
        while heap:
            c = heapq.heappop(heap)
            if c == last:
                continue
            last = c
            if stop is not None and c >= stop:
                break
            b = row.get(c)
            if not b:
                continue
            piv = pivots.get(c)
            if piv is None:
                if full:
                    continue
                return row, scale, c
            a = piv[c]
            if b % a == 0:
                q = b // a
            else:
                g = gcd(a, b)
                s = a // g
                if s < 0:
                    s = -s
                    q = -(b // g)
                else:
                    q = b // g
                row = {k: v * s for k, v in row.items()}
                scale *= s
            for k, v in piv.items():
                nv = row.get(k, 0) - q * v
                if nv:
                    if k not in row:
                        heapq.heappush(heap, k)
                    row[k] = nv
                else:
                    row.pop(k, None)
        if full or not row:
            return row, scale, None
        return row, scale, min(row)

    def insert(self, row: Mapping[int, int | Fraction]) -> int | None:
        """Add a row; return its new leading column, or None if dependent."""
        r = clear_denominators(row)
        if not r:
            return None
        r, _, lead = self._eliminate(dict(r))
        if lead is None:
            return None
        r = _primitive(r)
        self.pivots[lead] = r
        return lead

    def extend(self, rows: Iterable[Mapping[int, int | Fraction]]) -> None:
        for r in rows:
            self.insert(r)

    def normal_form(self, row: Mapping[int, int | Fraction], stop: int | None = None):
        """Fully reduce ``row`` against the pivots.

        Returns ``(reduced, scale)`` with ``reduced = scale*row - (combination
        of pivot rows)`` and ``scale`` a positive integer.
        """
        den = 1
        for v in row.values():
            if type(v) is Fraction:
                den = lcm(den, v.denominator)
        r = {k: int(v * den) for k, v in row.items() if v}
        r, scale, _ = self._eliminate(r, stop=stop, full=True)
        return r, scale * den

    def contains(self, row: Mapping[int, int | Fraction]) -> bool:
        r, _ = self.normal_form(row)
        return not r


def rank(rows: Iterable[Mapping[int, int | Fraction]] | Sequence[Sequence[int | Fraction]]) -> int:
    """Exact rank of sparse (dict) or dense (sequence) rows over Q."""
    e = Echelon()
    for r in rows:
        if not isinstance(r, Mapping):
            r = {i: v for i, v in enumerate(r) if v}
        e.insert(r)
    return e.rank


def bareiss_rank(matrix: Sequence[Sequence[int | Fraction]]) -> int:
    """Rank by dense fraction-free (Bareiss) elimination."""
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    # clear denominators row by row; rank is unchanged
    for i, r in enumerate(rows):
        den = reduce(lcm, (v.denominator for v in r if type(v) is Fraction), 1)
        rows[i] = [int(v * den) for v in r]
    m, ncols = len(rows), len(rows[0])
    prev = 1
    rk = 0
    for col in range(ncols):
        if rk == m:
            break
        piv = next((i for i in range(rk, m) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        p = rows[rk][col]
        for i in range(rk + 1, m):
            ri = rows[i]
            f = ri[col]
            rk_row = rows[rk]
            rows[i] = [(p * ri[j] - f * rk_row[j]) // prev for j in range(ncols)]
        prev = p
        rk += 1
    return rk


def solve_dense(matrix: Sequence[Sequence[int | Fraction]], rhs: Sequence[int | Fraction]):
    """One rational solution of ``matrix @ x = rhs`` or None (Gauss-Jordan)."""
    m = len(matrix)
    ncols = len(matrix[0]) if m else 0
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    pivcols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivcols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][-1]:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivcols):
        x[c] = aug[i][-1]
    return x


def nullspace(matrix: Sequence[Sequence[int | Fraction]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel over Q."""
    m = len(matrix)
    if ncols is None:
        ncols = len(matrix[0]) if m else 0
    a = [[Fraction(v) for v in row] for row in matrix]
    pivcols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivcols.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(ncols) if c not in pivcols]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivcols):
            v[pc] = -a[i][fc]
        basis.append(v)
    return basis


class Subspace:
    """A linear subspace of Q^d given by spanning vectors (kept reduced)."""

    def __init__(self, dim: int, vectors: Iterable[Sequence[int | Fraction]] = ()):
        self.ambient = dim
        self._ech = Echelon()
        for v in vectors:
            if len(v) != dim:
                raise ValueError("vector length does not match ambient dimension")
            self._ech.insert({i: x for i, x in enumerate(v) if x})

    @classmethod
    def full(cls, dim):
        return cls(dim, [[1 if i == j else 0 for i in range(dim)] for j in range(dim)])

    @property
    def dim(self) -> int:
        return self._ech.rank

    @property
    def codim(self) -> int:
        return self.ambient - self._ech.rank

    def basis(self) -> list[list[int]]:
        return [
            [self._ech.pivots[c].get(i, 0) for i in range(self.ambient)]
            for c in self._ech.leads()
        ]

    def contains(self, v: Sequence[int | Fraction]) -> bool:
        return self._ech.contains({i: x for i, x in enumerate(v) if x})

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient, self.basis() + other.basis())

    def intersect(self, other: "Subspace") -> "Subspace":
        # kernel of [A; -B] gives the common vectors
        a, b = self.basis(), other.basis()
        if not a or not b:
            return Subspace(self.ambient)
        cols = [[row[i] for row in a] + [-row[i] for row in b] for i in range(self.ambient)]
        ker = nullspace(cols, len(a) + len(b))
        vecs = []
        for k in ker:
            vecs.append([sum(k[j] * a[j][i] for j in range(len(a))) for i in range(self.ambient)])
        return Subspace(self.ambient, vecs)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self.dim == other.dim
            and all(self.contains(v) for v in other.basis())
        )

    def __repr__(self):
        return f"Subspace(dim={self.dim} in Q^{self.ambient}, basis={self.basis()})"
