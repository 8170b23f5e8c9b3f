"""Truncated jet-space linear algebra.

Every dimension in this package is computed as the dimension of a quotient
of a space of polynomial jets by the span of finitely many generator images,
modulo all terms of degree above a bound ``K``.

Why truncated generators suffice: modulo ``M^{K+1} theta(f)`` the tangent
space ``tf(theta_n) + wf(theta_p)`` is spanned by ``tf(x^a d/dx_j)`` with
``|a| <= K`` and ``wf(Y^b e_i)`` with ``|b| <= K``.  Any other generator has
all its terms in degree > K, because every component of f vanishes at the
origin, so ``f^b`` has order at least ``|b|``.

Columns are numbered by increasing total degree.  A semi-echelon basis whose
pivots sit in the lowest column therefore gives, from one elimination at
order ``K``, the quotient dimension at every order ``k <= K``: count the
columns of degree <= k and subtract the pivots whose leading column has
degree <= k.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .germ import MonoGerm, MultiGerm, as_multi
from .linalg import Echelon
from .linalg import rank as _rank
from .poly import Poly, monomials_of_degree

UNBOUNDED = "unbounded"


@dataclass
class CodimReport:
    """A stabilised dimension with its certificate.

    The certificate is heuristic: the value is the dimension that stayed
    constant over ``stabilization_window`` consecutive truncation orders.
    """

    value: int | str
    certified_order: int | None
    stabilization_window: int
    history: list[tuple[int, int]] = field(default_factory=list)

    @property
    def stable(self) -> bool:
        return self.value != UNBOUNDED

    def __int__(self):
        if not self.stable:
            raise ValueError("dimension did not stabilise")
        return self.value

    def __eq__(self, other):
        if isinstance(other, (int, str)):
            return self.value == other
        if isinstance(other, CodimReport):
            return (self.value, self.certified_order, self.history) == (
                other.value,
                other.certified_order,
                other.history,
            )
        return NotImplemented

    def summary(self) -> str:
        if self.stable:
            return (
                f"codim = {self.value} (certified at order {self.certified_order}, "
                f"window {self.stabilization_window})"
            )
        dims = ",".join(str(d) for _, d in self.history)
        return f"non-stabilizing: {dims}"

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "certified_order": self.certified_order,
            "stabilization_window": self.stabilization_window,
            "history": [list(h) for h in self.history],
        }

    __str__ = summary


class ColumnIndex:
    """Column numbering for ``nblocks`` copies of the jets in ``nvars`` variables.

    Order is (degree, block, monomial), monomials inside a degree in
    descending lex order.
    """

    def __init__(self, nvars: int, nblocks: int, order: int):
        self.nvars = nvars
        self.nblocks = nblocks
        self.order = order
        self.by_degree = [monomials_of_degree(nvars, d) for d in range(order + 1)]
        self.position = [{m: i for i, m in enumerate(ms)} for ms in self.by_degree]
        self.offset = [0]
        for ms in self.by_degree:
            self.offset.append(self.offset[-1] + nblocks * len(ms))

    @property
    def size(self) -> int:
        return self.offset[-1]

    def upto(self, k: int) -> int:
        """Number of columns of degree <= k."""
        return self.offset[min(k, self.order) + 1]

    def col(self, block: int, mono: tuple[int, ...], degree: int | None = None) -> int:
        d = sum(mono) if degree is None else degree
        return self.offset[d] + block * len(self.by_degree[d]) + self.position[d][mono]

    def degree_of(self, col: int) -> int:
        return bisect.bisect_right(self.offset, col) - 1

    def key(self, col: int) -> tuple[int, tuple[int, ...]]:
        d = self.degree_of(col)
        rel = col - self.offset[d]
        size = len(self.by_degree[d])
        return rel // size, self.by_degree[d][rel % size]

    def row(self, vector: Sequence[Poly | None], blocks: Sequence[int] | None = None) -> dict:
        """Coordinates of a vector of polynomials, truncated at the order."""
        out = {}
        K = self.order
        for k, p in enumerate(vector):
            if p is None:
                continue
            blk = k if blocks is None else blocks[k]
            for m, c in p.terms.items():
                d = sum(m)
                if d <= K:
                    out[self.col(blk, m, d)] = c
        return out

    def to_vector(self, row: dict, ring: Sequence[str]) -> list[Poly]:
        """Inverse of :meth:`row` (columns beyond the jet part are ignored)."""
        terms = [dict() for _ in range(self.nblocks)]
        for col, c in row.items():
            if col >= self.size:
                continue
            blk, m = self.key(col)
            terms[blk][m] = c
        return [Poly(ring, t) for t in terms]


def _history(index: ColumnIndex, ech: Echelon, max_k: int | None = None) -> list[int]:
    """Quotient dimension at each order 0..K from one echelon."""
    K = index.order if max_k is None else max_k
    leads = sorted(c for c in ech.pivots if c < index.size)
    dims = []
    j = 0
    for k in range(K + 1):
        cut = index.upto(k)
        while j < len(leads) and leads[j] < cut:
            j += 1
        dims.append(cut - j)
    return dims


# unreduced objects: full theta(f) jets and explicit span matrices


class JetSpace:
    """Jets of degree <= order of theta(f), all branches and components.

    Basis elements are ``(branch, component, monomial)`` triples.
    """

    def __init__(self, germ: MonoGerm | MultiGerm | None, order: int, nvars: int | None = None, nblocks: int | None = None):
        self.germ = as_multi(germ) if germ is not None else None
        self.order = order
        if self.germ is not None:
            nvars = self.germ.n
            nblocks = self.germ.r * self.germ.p
        self.index = ColumnIndex(nvars, nblocks, order)

    @classmethod
    def of_functions(cls, nvars: int, order: int, nblocks: int = 1) -> "JetSpace":
        """Jets of O_n (or a free module of rank ``nblocks``) without a germ."""
        return cls(None, order, nvars=nvars, nblocks=nblocks)

    @property
    def dim(self) -> int:
        return self.index.size

    @property
    def basis(self) -> list[tuple[int, int, tuple[int, ...]]]:
        out = []
        p = self.germ.p if self.germ is not None else 1
        for col in range(self.dim):
            blk, m = self.index.key(col)
            out.append((blk // p, blk % p, m))
        return out

    def block(self, branch: int, component: int) -> int:
        p = self.germ.p if self.germ is not None else 1
        return branch * p + component


@dataclass
class SpanMatrix:
    jet: JetSpace
    rows: list[dict] = field(default_factory=list)
    truncated: bool = False

    def add_vector(self, vector: Sequence[Poly | None], blocks: Sequence[int] | None = None):
        if any(p is not None and p.degree() > self.jet.order for p in vector):
            self.truncated = True
        self.rows.append(self.jet.index.row(vector, blocks))

    def add_module_multiples(self, vector: Sequence[Poly | None], blocks: Sequence[int] | None = None):
        """Add ``x^a * vector`` for every monomial of degree <= order."""
        K = self.jet.order
        ring = next(p.ring for p in vector if p is not None)
        order = min((p.order() for p in vector if p is not None and not p.is_zero()), default=K + 1)
        for d in range(0, K - order + 1):
            for m in self.jet.index.by_degree[d]:
                mono = Poly.monomial(ring, m)
                self.add_vector([None if p is None else p * mono for p in vector], blocks)


def quotient_dim(ambient: JetSpace, span: SpanMatrix, include_high_degree: bool = True) -> int:
    """dim(ambient) - rank(span).

    With ``include_high_degree`` the span is understood to contain every
    term of degree above the order, so truncated generators are legitimate.
    Without it a span built from truncated generators is rejected.
    """
    if not include_high_degree and span.truncated:
        raise ValueError("span rows were truncated; quotient needs include_high_degree")
    return ambient.dim - _rank(span.rows)


def rank(rows: SpanMatrix | Iterable) -> int:
    """Exact rank over Q (fraction-free integer elimination)."""
    if isinstance(rows, SpanMatrix):
        rows = rows.rows
    return _rank(rows)


def tangent_span(jet: JetSpace) -> SpanMatrix:
    """Unreduced T(Ae) generators in full theta(f) coordinates."""
    f = jet.germ
    K = jet.order
    span = SpanMatrix(jet)
    p, n = f.p, f.n
    for b, br in enumerate(f.branches):
        blocks = [jet.block(b, i) for i in range(p)]
        for j in range(n):
            span.add_module_multiples([c.partial(j) for c in br.components], blocks)
    target = Poly.zero(f.branches[0].target_vars)
    for d in range(K + 1):
        for beta in monomials_of_degree(p, d):
            for i in range(p):
                vec, blocks = [], []
                for b, br in enumerate(f.branches):
                    vec.append(Poly.monomial(target.ring, beta).compose(br.components, K))
                    blocks.append(jet.block(b, i))
                span.add_vector(vec, blocks)
    return span


# stabilisation


def stabilized_dim(
    builder: Callable[[int], int | Sequence[int]],
    window: int = 3,
    max_order: int = 14,
) -> CodimReport:
    """Stabilise an order-indexed dimension.

    ``builder(K)`` returns either the dimension at order K, or the list of
    dimensions at orders 0..K (or 1..K) when one computation yields them all.
    Orders 1..max_order are all examined.  The value is accepted only when
    the final ``window`` dimensions agree; the certified order is the first
    order of that final constant run.  Early plateaus are ignored on purpose:
    several genuine examples sit still for three or four orders before
    climbing again.
    """
    if window < 2:
        raise ValueError("window must be at least 2")
    if max_order < window:
        raise ValueError("max_order must be at least the window")
    res = builder(max_order)
    if isinstance(res, int):
        dims = [builder(k) for k in range(1, max_order)] + [res]
    else:
        res = list(res)
        dims = res[len(res) - max_order:]
        if len(dims) != max_order:
            raise ValueError("builder returned too few orders")
    history = list(zip(range(1, max_order + 1), dims))
    last = dims[-1]
    if any(d != last for d in dims[-window:]):
        return CodimReport(UNBOUNDED, None, window, history)
    k = max_order
    while k > 1 and dims[k - 2] == last:
        k -= 1
    return CodimReport(last, k, window, history)


# the reduced frame for theta(f) / T(Ae)


class GermFrame:
    """Coordinates for theta(f) modulo the easy part of tf(theta_n).

    A component ``f_i = c*x_j`` of a branch (a distinct source variable for
    each such component) is a *coordinate component*.  The fields
    ``a(x) d/dx_j`` for coordinate variables map under tf onto every vector
    whose coordinate components are arbitrary, so theta(f) modulo their span
    is identified with the remaining components via the projection

        v  ->  v - sum_i (v_i / c_i) * df/dx_{j(i)}.

    All other generators are projected this way.  ``reduced=False`` keeps
    every component (used to cross-check the reduction).
    """

    def __init__(self, f: MonoGerm | MultiGerm, order: int, reduced: bool = True):
        self.f = as_multi(f)
        self.order = order
        self.coord: list[dict[int, tuple[int, int | Fraction]]] = []
        for br in self.f.branches:
            used, cmap = set(), {}
            if reduced:
                for i, comp in enumerate(br.components):
                    sv = comp.as_single_variable()
                    if sv is not None and sv[0] not in used:
                        used.add(sv[0])
                        cmap[i] = sv
            self.coord.append(cmap)
        self.blocks: list[tuple[int, int]] = []
        self.block_of: dict[tuple[int, int], int] = {}
        for b, br in enumerate(self.f.branches):
            for i in range(self.f.p):
                if i not in self.coord[b]:
                    self.block_of[(b, i)] = len(self.blocks)
                    self.blocks.append((b, i))
        self.index = ColumnIndex(self.f.n, len(self.blocks), order)
        self._powers: list[dict] | None = None

    @property
    def size(self) -> int:
        return self.index.size

    def free_variables(self, b: int) -> list[int]:
        used = {j for j, _ in self.coord[b].values()}
        return [j for j in range(self.f.n) if j not in used]

    # rows

    def tf_rows(self, degree: int | None = None):
        """Rows tf(x^a d/dx_j) for free variables j, grouped by |a|."""
        K = self.order
        idx = self.index
        for b, br in enumerate(self.f.branches):
            for j in self.free_variables(b):
                terms = []
                for i, comp in enumerate(br.components):
                    if i in self.coord[b]:
                        continue
                    blk = self.block_of[(b, i)]
                    for m, c in comp.partial(j).terms.items():
                        terms.append((m, sum(m), c, blk))
                degs = range(K + 1) if degree is None else (degree,)
                for d in degs:
                    for a in idx.by_degree[d]:
                        row = {}
                        for m, dm, c, blk in terms:
                            if dm + d <= K:
                                mm = tuple(x + y for x, y in zip(m, a))
                                row[idx.col(blk, mm, dm + d)] = c
                        yield ("tf", b, j, a), row

    def powers(self) -> list[dict]:
        """``f_b^beta`` truncated at the order, per branch, for |beta| <= order."""
        if self._powers is None:
            K, p = self.order, self.f.p
            out = []
            for br in self.f.branches:
                comps = [c.truncate(K) for c in br.components]
                one = Poly.const(br.source_vars, 1)
                table = {(0,) * p: one}
                for d in range(1, K + 1):
                    for beta in monomials_of_degree(p, d):
                        i = next(t for t, e in enumerate(beta) if e)
                        prev = beta[:i] + (beta[i] - 1,) + beta[i + 1:]
                        table[beta] = table[prev].mul(comps[i], K)
                out.append(table)
            self._powers = out
        return self._powers

    def project(self, b: int, vector: dict[int, Poly]) -> dict[int, Poly]:
        """Reduced representative of a vector (component -> Poly) on branch b."""
        K = self.order
        br = self.f.branches[b]
        out: dict[int, Poly] = {}
        for i, v in vector.items():
            if v.is_zero():
                continue
            if i in self.coord[b]:
                j, c = self.coord[b][i]
                scaled = v.scale(-Fraction(1) / c)
                for i2, comp in enumerate(br.components):
                    if i2 in self.coord[b]:
                        continue
                    dj = comp.partial(j)
                    if dj.is_zero():
                        continue
                    prod = scaled.mul(dj, K)
                    out[i2] = out[i2] + prod if i2 in out else prod
            else:
                out[i] = out[i] + v if i in out else v
        return out

    def wf_row(self, beta: tuple[int, ...], i: int) -> dict:
        """Row of wf(Y^beta e_i), diagonal over branches, projected."""
        row = {}
        idx = self.index
        for b in range(self.f.r):
            fb = self.powers()[b][beta]
            proj = self.project(b, {i: fb})
            for i2, poly in proj.items():
                blk = self.block_of[(b, i2)]
                for m, c in poly.terms.items():
                    row[idx.col(blk, m)] = c
        return row

    def wf_rows(self, degree: int | None = None):
        K, p = self.order, self.f.p
        degs = range(K + 1) if degree is None else (degree,)
        for d in degs:
            for beta in monomials_of_degree(p, d):
                for i in range(p):
                    yield ("wf", beta, i), self.wf_row(beta, i)

    def vector_row(self, b: int, vector: Sequence[Poly]) -> dict:
        """Projected row of a vector field along branch b (all components)."""
        proj = self.project(b, {i: v.truncate(self.order) for i, v in enumerate(vector)})
        row = {}
        for i2, poly in proj.items():
            blk = self.block_of[(b, i2)]
            for m, c in poly.terms.items():
                row[self.index.col(blk, m)] = c
        return row


def ae_history(f: MonoGerm | MultiGerm, order: int, reduced: bool = True) -> list[int]:
    """dim theta(f)/(T(Ae)f + M^{k+1} theta(f)) for k = 0..order."""
    frame = GermFrame(f, order, reduced)
    ech = Echelon()
    for d in range(order + 1):
        for _, row in frame.tf_rows(d):
            ech.insert(row)
        for _, row in frame.wf_rows(d):
            ech.insert(row)
    return _history(frame.index, ech)


# generic module quotients (ideals, K-tangent spaces)


def module_echelon(
    generators: Sequence[Sequence[Poly | None]],
    nvars: int,
    nblocks: int,
    order: int,
) -> tuple[ColumnIndex, Echelon]:
    """Echelon of ``x^a * g`` for every generator g, truncated at ``order``.

    Each generator is a vector of ``nblocks`` polynomials (None for zero).
    """
    idx = ColumnIndex(nvars, nblocks, order)
    ech = Echelon()
    prepared = []
    for g in generators:
        terms = []
        for blk, p in enumerate(g):
            if p is None:
                continue
            for m, c in p.terms.items():
                terms.append((m, sum(m), c, blk))
        if terms:
            prepared.append((min(t[1] for t in terms), terms))
    for d in range(order + 1):
        for low, terms in prepared:
            if low + d > order:
                continue
            for a in idx.by_degree[d]:
                row = {}
                for m, dm, c, blk in terms:
                    if dm + d <= order:
                        mm = tuple(x + y for x, y in zip(m, a))
                        row[idx.col(blk, mm, dm + d)] = c
                ech.insert(row)
    return idx, ech


def module_history(
    generators: Sequence[Sequence[Poly | None]],
    nvars: int,
    nblocks: int,
    order: int,
) -> list[int]:
    """dim (O_n^nblocks) / (module generated + M^{k+1}) for k = 0..order."""
    idx, ech = module_echelon(generators, nvars, nblocks, order)
    return _history(idx, ech)
