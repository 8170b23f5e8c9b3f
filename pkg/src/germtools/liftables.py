"""Liftable vector fields and the quotients built from them.

A target field eta lifts over f when ``df o xi = eta o f`` for some source
field xi; for a multigerm one eta must lift over every branch.  Solutions are
found jet by jet: ``wf(Y^b e_i)`` rows carry a tag column recording b and i,
tf rows carry none, and echelon rows whose leading column is a tag are exactly
the jets of eta for which ``wf(eta)`` falls into ``tf(theta_n)`` modulo
``M^{K+1}``.  Jets that only solve the truncated problem are filtered by
solving ``margin`` orders higher and truncating back.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .germ import MonoGerm, MultiGerm, VectorFieldGerm, as_multi, germ, multigerm
from .jetlin import ColumnIndex, CodimReport, GermFrame, _history, stabilized_dim
from .linalg import Echelon
from .poly import Poly, monomials_of_degree, parse

DEFAULT_MARGIN = 2
DEFAULT_QUOTIENT_ORDER = 10

Tag = tuple[tuple[int, ...], int]


class TagIndex:
    """Numbering of target monomial fields ``Y^b e_i`` by increasing degree."""

    def __init__(self, p: int, order: int):
        self.p = p
        self.order = order
        self.tags: list[Tag] = []
        self.offset = [0]
        for d in range(order + 1):
            for beta in monomials_of_degree(p, d):
                for i in range(p):
                    self.tags.append((beta, i))
            self.offset.append(len(self.tags))
        self.index = {t: k for k, t in enumerate(self.tags)}

    def __len__(self):
        return len(self.tags)

    def upto(self, d: int) -> int:
        return self.offset[min(d, self.order) + 1]


def _field_from_tags(coeffs: dict[Tag, int | Fraction], target_vars, p) -> VectorFieldGerm:
    terms = [dict() for _ in range(p)]
    for (beta, i), c in coeffs.items():
        terms[i][beta] = c
    return VectorFieldGerm("target", tuple(Poly(target_vars, t) for t in terms))


def _tags_from_field(eta: VectorFieldGerm, order: int) -> dict[Tag, int | Fraction]:
    out = {}
    for i, comp in enumerate(eta.coefficients):
        for beta, c in comp.terms.items():
            if sum(beta) <= order:
                out[(beta, i)] = c
    return out


@dataclass
class LiftBasis:
    """Jets (degree <= order) of a vector-space basis of Lift(F).

    ``sources[k][b]`` is a source field with ``dF_b o xi = eta_k o F_b``
    modulo terms of degree > ``residual_order``.
    """

    germ: MultiGerm
    order: int
    fields: list[VectorFieldGerm]
    sources: list[list[VectorFieldGerm]] | None
    residual_order: int
    margin: int = DEFAULT_MARGIN
    _tag_rows: list[dict[Tag, int | Fraction]] = field(default_factory=list, repr=False)
    _echelon: Echelon | None = field(default=None, repr=False)
    _tags: TagIndex | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.fields)

    def _ensure_echelon(self):
        if self._echelon is None:
            self._tags = TagIndex(self.germ.p, self.order)
            self._echelon = Echelon()
            for row in self._tag_rows:
                self._echelon.insert({self._tags.index[t]: c for t, c in row.items()})
        return self._echelon

    def contains(self, eta: VectorFieldGerm) -> bool:
        """Is the order-``order`` jet of eta in the span of the solved jets?"""
        ech = self._ensure_echelon()
        row = {self._tags.index[t]: c for t, c in _tags_from_field(eta, self.order).items()}
        return ech.contains(row)

    def linear_part_space(self) -> list[VectorFieldGerm]:
        """Basis of the degree-1 parts of solved fields vanishing at 0."""
        return _jets_of_degree(self, 1)


def _jets_of_degree(basis: LiftBasis, d: int) -> list[VectorFieldGerm]:
    """Homogeneous degree-d parts of the solution fields vanishing below degree d."""
    ech = basis._ensure_echelon()
    tags = basis._tags
    lo, hi = tags.upto(d - 1), tags.upto(d)
    out = []
    for lead, row in sorted(ech.pivots.items()):
        if lo <= lead < hi:
            coeffs = {tags.tags[c]: v for c, v in row.items() if lo <= c < hi}
            out.append(_field_from_tags(coeffs, basis.germ.target_vars, basis.germ.p))
    return out


def _solve_tag_rows(F: MultiGerm, K: int) -> list[dict[int, int]]:
    """Echelon rows (tag coordinates) spanning the eta-solutions modulo M^{K+1}."""
    frame = GermFrame(F, K)
    size = frame.size
    tags = TagIndex(F.p, K)
    ech = Echelon()
    for d in range(K + 1):
        for _, row in frame.tf_rows(d):
            ech.insert(row)
        for (_, beta, i), row in frame.wf_rows(d):
            row[size + tags.index[(beta, i)]] = 1
            ech.insert(row)
    sols = []
    for lead, row in ech.pivots.items():
        if lead >= size:
            sols.append({c - size: v for c, v in row.items()})
    return sols


def _truncated_solutions(F: MultiGerm, order: int, margin: int) -> tuple[TagIndex, Echelon]:
    """Echelon of solutions at order+margin, truncated to degree <= order."""
    big = TagIndex(F.p, order + margin)
    small = TagIndex(F.p, order)
    cut = small.upto(order)
    ech = Echelon()
    for sol in _solve_tag_rows(F, order + margin):
        row = {c: v for c, v in sol.items() if c < cut}
        if row:
            ech.insert(row)
    # both indices enumerate tags identically up to ``cut``
    assert big.tags[:cut] == small.tags
    return small, ech


class _SourceSolver:
    """Finds xi with ``tf_b(xi) = target`` modulo M^{K+1} on one branch."""

    def __init__(self, br: MonoGerm, K: int):
        self.br = br
        self.K = K
        n, p = br.n, br.p
        self.index = ColumnIndex(n, p, K)
        self.src = ColumnIndex(n, n, K)
        size = self.index.size
        self.ech = Echelon()
        for j in range(n):
            d = [c.partial(j) for c in br.components]
            for deg in range(K + 1):
                for a in self.index.by_degree[deg]:
                    mono = Poly.monomial(br.source_vars, a)
                    row = self.index.row([c.mul(mono, K) for c in d])
                    row[size + self.src.col(j, a, deg)] = 1
                    self.ech.insert(row)

    def solve(self, target: Sequence[Poly]) -> list[Poly] | None:
        size = self.index.size
        row = self.index.row([t.truncate(self.K) for t in target])
        red, scale = self.ech.normal_form(row, stop=size)
        if any(c < size for c in red):
            return None
        xi_row = {c - size: Fraction(-v, scale) for c, v in red.items()}
        return self.src.to_vector(xi_row, self.br.source_vars)


def compose_field(eta: VectorFieldGerm, br: MonoGerm, K: int | None = None) -> list[Poly]:
    """eta o f for one branch, optionally truncated."""
    return [c.compose(br.components, K) for c in eta.coefficients]


def apply_df(br: MonoGerm, xi: Sequence[Poly], K: int | None = None) -> list[Poly]:
    """df o xi."""
    out = []
    for comp in br.components:
        acc = Poly.zero(br.source_vars)
        for j, x in enumerate(xi):
            if not x.is_zero():
                acc = acc + comp.partial(j).mul(x, K)
        out.append(acc if K is None else acc.truncate(K))
    return out


def lift_residual(br: MonoGerm, eta: VectorFieldGerm, xi: Sequence[Poly], K: int) -> list[Poly]:
    """truncate(df o xi - eta o f, K) for one branch."""
    lhs = apply_df(br, xi, K)
    rhs = compose_field(eta, br, K)
    return [(a - b).truncate(K) for a, b in zip(lhs, rhs)]


def lift_witness(F: MonoGerm | MultiGerm, eta: VectorFieldGerm, order: int) -> list[list[Poly]] | None:
    """Source fields lifting eta over every branch modulo M^{order+1}, or None."""
    F = as_multi(F)
    out = []
    for br in F.branches:
        xi = _SourceSolver(br, order).solve(compose_field(eta, br, order))
        if xi is None:
            return None
        out.append(xi)
    return out


def solve_lift(
    F: MonoGerm | MultiGerm,
    order: int,
    margin: int = DEFAULT_MARGIN,
    with_sources: bool = True,
) -> LiftBasis:
    """Basis of the jets of Lift(F) up to ``order``.

    Solutions are computed modulo M^{order+margin+1} and truncated to degree
    ``order``; the lifting identity of every returned pair holds exactly
    modulo M^{order+1}.
    """
    F = as_multi(F)
    tags, ech = _truncated_solutions(F, order, margin)
    tag_rows, fields = [], []
    for lead in sorted(ech.pivots):
        row = ech.pivots[lead]
        coeffs = {tags.tags[c]: v for c, v in row.items()}
        tag_rows.append(coeffs)
        fields.append(_field_from_tags(coeffs, F.target_vars, F.p))
    sources = None
    if with_sources:
        solvers = [_SourceSolver(br, order) for br in F.branches]
        sources = []
        for eta in fields:
            per = []
            for br, solver in zip(F.branches, solvers):
                xi = solver.solve(compose_field(eta, br, order))
                if xi is None:
                    raise ArithmeticError("truncated lift solution failed to lift")
                per.append(VectorFieldGerm("source", tuple(xi)))
            sources.append(per)
    basis = LiftBasis(F, order, fields, sources, order, margin, tag_rows)
    basis._tags = tags
    basis._echelon = ech
    return basis


def lift_jets(
    F: MonoGerm | MultiGerm,
    jet_order: int = 1,
    max_solve_order: int = 9,
    window: int = 3,
) -> tuple[LiftBasis, list[int]]:
    """Jets of Lift(F) up to ``jet_order``, solved at increasing depth.

    Truncated solution spaces shrink as the solve order grows.  The space
    solved at ``max_solve_order`` is returned together with the dimensions
    over the final ``window`` solve orders, which must agree.
    """
    F = as_multi(F)
    dims = []
    basis = None
    for s in range(max(jet_order, max_solve_order - window + 1), max_solve_order + 1):
        basis = solve_lift(F, jet_order, margin=s - jet_order, with_sources=False)
        dims.append(len(basis))
    if len(set(dims)) != 1:
        raise ArithmeticError(f"lift jets did not stabilise: {dims}")
    return basis, dims


def lift_linear_parts(F: MonoGerm | MultiGerm, max_solve_order: int = 9) -> list[VectorFieldGerm]:
    """1-jets of a minimal generating set of Lift(F).

    This is the 1-jet space of Lift(F) modulo ``Y_a * v`` for the constant
    values v of liftable fields.
    """
    F = as_multi(F)
    basis, _ = lift_jets(F, 1, max_solve_order)
    tags = TagIndex(F.p, 1)
    consts = [
        {t: c for t, c in row.items() if sum(t[0]) == 0}
        for row in basis._tag_rows
    ]
    ech = Echelon()
    for const in consts:
        if not const:
            continue
        for a in range(F.p):
            e = [0] * F.p
            e[a] = 1
            ech.insert({tags.index[(tuple(e), i)]: c for (_, i), c in const.items()})
    reps = []
    for row in basis._tag_rows:
        lead = ech.insert({tags.index[t]: c for t, c in row.items()})
        if lead is not None:
            reps.append(_field_from_tags(row, F.target_vars, F.p))
    return reps


# substituted quotients


def substituted_echelon(
    F: MultiGerm,
    sigma: Sequence[Poly],
    weights: dict[int, Poly],
    K: int,
    margin: int = DEFAULT_MARGIN,
) -> tuple[ColumnIndex, Echelon]:
    """Echelon of {sum_i w_i * (eta_i o sigma)} in the jets of O_q up to K.

    ``sigma`` maps the q quotient variables into the target of F; ``eta``
    runs over the jets of Lift(F).  Every eta-monomial of degree d lands in
    degree >= d, so truncating eta at K loses nothing below degree K+1.
    """
    q = len(sigma[0].ring)
    ring = sigma[0].ring
    tags, ech = _truncated_solutions(F, K, margin)
    powers = {(0,) * F.p: Poly.const(ring, 1)}
    for d in range(1, K + 1):
        for beta in monomials_of_degree(F.p, d):
            i = next(t for t, e in enumerate(beta) if e)
            prev = beta[:i] + (beta[i] - 1,) + beta[i + 1:]
            powers[beta] = powers[prev].mul(sigma[i], K)
    idx = ColumnIndex(q, 1, K)
    image = {}
    for beta, i in tags.tags:
        w = weights.get(i)
        if w is None or w.is_zero():
            continue
        image[(beta, i)] = w.mul(powers[beta], K)
    out = Echelon()
    for row in ech.pivots.values():
        acc = {}
        for c, v in row.items():
            img = image.get(tags.tags[c])
            if img is None:
                continue
            for m, cm in img.terms.items():
                col = idx.col(0, m)
                nv = acc.get(col, 0) + v * cm
                if nv:
                    acc[col] = nv
                else:
                    acc.pop(col, None)
        if acc:
            out.insert(acc)
    return idx, out


def substituted_history(
    F: MultiGerm,
    sigma: Sequence[Poly],
    weights: dict[int, Poly],
    K: int,
    margin: int = DEFAULT_MARGIN,
) -> list[int]:
    """dim O_q / {sum_i w_i * (eta_i o sigma)} modulo M^{k+1}, k = 0..K."""
    return _history(*substituted_echelon(F, sigma, weights, K, margin))


def _dz_data(Af: MultiGerm):
    p = Af.p
    ring = Af.target_vars[: p - 1]
    sigma = [Poly.var(ring, i) for i in range(p - 1)] + [Poly.zero(ring)]
    return sigma, {p - 1: Poly.const(ring, 1)}


def dz_quotient_spanned_by(Af: MonoGerm | MultiGerm, polys: Sequence[Poly], order: int = DEFAULT_QUOTIENT_ORDER) -> bool:
    """Do ``polys`` span O_{p-1} modulo the dZ-span and M^{order+1}?"""
    Af = as_multi(Af)
    sigma, weights = _dz_data(Af)
    idx, ech = substituted_echelon(Af, sigma, weights, order)
    for g in polys:
        ech.insert(idx.row([g.truncate(order)]))
    return ech.rank == idx.size


def substituted_quotient(
    F: MonoGerm | MultiGerm,
    sigma: Sequence[Poly],
    weights: dict[int, Poly],
    order: int = DEFAULT_QUOTIENT_ORDER,
    window: int = 3,
    margin: int = DEFAULT_MARGIN,
) -> CodimReport:
    F = as_multi(F)
    return stabilized_dim(lambda K: substituted_history(F, sigma, weights, K, margin), window, order)


def dz_quotient(
    Af: MonoGerm | MultiGerm,
    order: int = DEFAULT_QUOTIENT_ORDER,
    window: int = 3,
    margin: int = DEFAULT_MARGIN,
) -> CodimReport:
    """dim O_{p-1} / {eta_last(X, 0) : eta in Lift(Af)}."""
    Af = as_multi(Af)
    sigma, weights = _dz_data(Af)
    return substituted_quotient(Af, sigma, weights, order, window, margin)


def cuspidal_quotient(
    F: MonoGerm | MultiGerm,
    order: int = DEFAULT_QUOTIENT_ORDER,
    window: int = 3,
    margin: int = DEFAULT_MARGIN,
) -> CodimReport:
    """dim O_{n-1} / {-z eta_{n-1}(x,-3z^2,-2z^3) + eta_n(x,-3z^2,-2z^3)}."""
    F = as_multi(F)
    n = F.p
    ring = tuple(f"x{i + 1}" for i in range(n - 2)) + ("z",)
    x = [Poly.var(ring, i) for i in range(n - 2)]
    z = Poly.var(ring, n - 2)
    sigma = x + [-3 * z ** 2, -2 * z ** 3]
    weights = {n - 2: -z, n - 1: Poly.const(ring, 1)}
    return substituted_quotient(F, sigma, weights, order, window, margin)


def double_fold_quotient(
    FG1: MonoGerm | MultiGerm,
    order: int = DEFAULT_QUOTIENT_ORDER,
    window: int = 3,
    margin: int = DEFAULT_MARGIN,
) -> CodimReport:
    """dim O_{n-1} / {-eta_{n-1}(x,y,y) + eta_n(x,y,y)} over Lift({F, g1})."""
    FG1 = as_multi(FG1)
    n = FG1.p
    ring = tuple(FG1.source_vars[: n - 1])
    xs = [Poly.var(ring, i) for i in range(n - 1)]
    sigma = xs + [xs[-1]]
    weights = {n - 2: Poly.const(ring, -1), n - 1: Poly.const(ring, 1)}
    return substituted_quotient(FG1, sigma, weights, order, window, margin)


# published generators


@dataclass(frozen=True)
class PublishedLift:
    name: str
    germ: MultiGerm
    fields: tuple[VectorFieldGerm, ...]
    kind: str  # "generators" or "linear_parts"
    source: str


def _tv(texts: Sequence[str], target_vars) -> VectorFieldGerm:
    return VectorFieldGerm("target", tuple(parse(t, target_vars) for t in texts))


def augmented_fold_lift(l: int) -> PublishedLift:
    """Lift of (x^3 + z^l x, z)."""
    f = germ(["x^3+z^%d*x" % l, "z"], "x,z")
    T = f.target_vars
    fields = (
        _tv([f"{3 * l}*X", "2*Z"], T),
        _tv([f"-{2 * l}*Z^{3 * l - 1}", "9*X"], T),
    )
    return PublishedLift(f"Lift(x^3+z^{l}x, z)", as_multi(f), fields, "generators", "augmentation of x^3 by z^l")


def cusp_unfolding_lift(l: int) -> PublishedLift:
    """Lift of F_l = (x^3 + y^l x + z x, y, z)."""
    f = germ([f"x^3+y^{l}*x+z*x", "y", "z"], "x,y,z")
    T = f.target_vars
    fields = (
        _tv([f"{3 * l}*X", "2*Y", f"{2 * l}*Z"], T),
        _tv(["0", "1", f"{l}*Y^{l - 1}"], T),
        _tv([f"2*(Z+Y^{l})^2", "0", "-9*X"], T),
    )
    return PublishedLift(f"Lift(F_{l})", as_multi(f), fields, "generators", "two-parameter unfolding of x^3")


def alternate_swallowtail_lift() -> PublishedLift:
    f = germ(["x^4+y*x^2+y^2*x+z*x", "y", "z"], "x,y,z")
    T = f.target_vars
    fields = (
        _tv(["4*X", "2*Y", "Y^2-3*Z"], T),
        _tv(["Y^3+Z*Y", "-6*Y^2-6*Z", "8*X+2*Y^2+12*Y^3+12*Y*Z"], T),
        _tv(["-16*X*Y-9*Z^2-18*Y^2*Z-9*Y^4", "48*X+4*Y^2", "-96*X*Y+12*Y*Z+4*Y^3"], T),
    )
    return PublishedLift("Lift(x^4+yx^2+y^2x+zx, y, z)", as_multi(f), fields, "generators", "alternate unfolding of x^4")


def quintuple_point_lift() -> PublishedLift:
    X = "x,y,z"
    fg1 = multigerm(
        germ(["x^2+y+z", "y", "z"], X),
        germ(["x^2", "y", "z"], X),
        germ(["x^2-y", "y", "z"], X),
        germ(["x", "y", "z^2"], X),
    )
    T = fg1.target_vars
    fields = (
        _tv(["X", "Y", "Z"], T),
        _tv(["2*X*Y+X*Z", "3*X^2-Y^2-2*X*Z-Y*Z", "0"], T),
        _tv(["2*X^2-3*X*Z", "2*X*Y+4*X*Z+Y*Z", "Z^2-X*Z"], T),
        _tv(["2*X*Y+X*Z", "2*Y^2+4*X*Z+5*Y*Z", "-3*Z^2-6*X*Z"], T),
    )
    return PublishedLift("Lift of three folds and a fold prism", fg1, fields, "generators", "double fold concatenation of three Morse functions")


def fold_prism_lift(n: int = 3) -> PublishedLift:
    """Lift of (x_1, ..., x_{n-2}, y, z^2): constants except in Z, and Z d/dZ."""
    names = [f"x{i + 1}" for i in range(n - 2)] + ["y", "z"]
    f = germ(names[:-1] + ["z^2"], names)
    T = f.target_vars
    fields = []
    for i in range(n - 1):
        fields.append(_tv(["1" if t == i else "0" for t in range(n)], T))
    fields.append(_tv(["0"] * (n - 1) + [T[-1]], T))
    return PublishedLift(f"Lift(fold prism, n={n})", as_multi(f), tuple(fields), "generators", "fold prism")


def an_unfolding(n: int) -> MonoGerm:
    """x1^{n+1} + x2 x1 + ... + x_{n-2} x1^{n-3} + y x1^{n-2} + z x1^{n-1}."""
    names = [f"x{i + 1}" for i in range(n - 2)] + ["y", "z"]
    ring = tuple(names)
    x = [Poly.var(ring, i) for i in range(n)]
    first = x[0] ** (n + 1)
    for i in range(1, n):
        first = first + x[i] * x[0] ** i
    return MonoGerm((first, *x[1:]))


def an_linear_parts(n: int) -> PublishedLift:
    """sum_{i <= n-s} (n+2-i) W_i d/dW_{i+s}, s = 0..n-1 (s = 0 is Euler)."""
    F = an_unfolding(n)
    T = F.target_vars
    W = [Poly.var(T, i) for i in range(n)]
    fields = []
    for s in range(n):
        coeffs = [Poly.zero(T) for _ in range(n)]
        for i in range(1, n - s + 1):
            coeffs[i + s - 1] = coeffs[i + s - 1] + (n + 2 - i) * W[i - 1]
        fields.append(VectorFieldGerm("target", tuple(coeffs)))
    return PublishedLift(f"linear parts of Lift(A_{n})", as_multi(F), tuple(fields), "linear_parts", "stable A_n")


def primitive_pair(k: int) -> tuple[MonoGerm, MonoGerm]:
    """The primitive (2k-3 -> 2k-2) germ and its one-parameter versal unfolding."""
    us = [f"u{i}" for i in range(1, k - 1)]
    vs = [f"v{i}" for i in range(1, k)]
    ring_F = tuple(us + vs + ["x"])
    ring_f = tuple(us + vs[:-1] + ["x"])

    def build(ring, nv):
        x = Poly.var(ring, "x")
        u = [Poly.var(ring, a) for a in us]
        v = [Poly.var(ring, a) for a in vs[:nv]]
        w1 = x ** k
        for i, ui in enumerate(u, start=1):
            w1 = w1 + ui * x ** i
        w2 = x ** (k + 1)
        for i, vi in enumerate(v, start=1):
            w2 = w2 + vi * x ** i
        return MonoGerm((*u, *v, w1, w2))

    return build(ring_f, k - 2), build(ring_F, k - 1)


def primitive_unfolding_linear_parts(k: int) -> PublishedLift:
    """The published 3k-2 linear parts for the versal unfolding at level k."""
    _, F = primitive_pair(k)
    T = tuple([f"U{i}" for i in range(1, k - 1)] + [f"V{i}" for i in range(1, k)] + ["W1", "W2"])
    p = len(T)
    nu, nv = k - 2, k - 1

    def U(i):
        return Poly.var(T, i - 1) if 1 <= i <= nu else Poly.zero(T)

    def V(i):
        return Poly.var(T, nu + i - 1) if 1 <= i <= nv else Poly.zero(T)

    W1, W2 = Poly.var(T, p - 2), Poly.var(T, p - 1)

    def iU(i):
        return i - 1

    def iV(i):
        return nu + i - 1

    def field_of(parts):
        coeffs = [Poly.zero(T) for _ in range(p)]
        for slot, poly_ in parts:
            coeffs[slot] = coeffs[slot] + poly_
        return VectorFieldGerm("target", tuple(coeffs))

    F_ = Fraction
    fields = []
    parts = [(iU(i), (k - i) * U(i)) for i in range(1, nu + 1)]
    parts += [(iV(i), (k - i + 1) * V(i)) for i in range(1, nv + 1)]
    parts += [(p - 2, k * W1), (p - 1, (k + 1) * W2)]
    fields.append(field_of(parts))

    parts = [(iU(i), V(i) - F_(i - 1, k) * U(i - 1)) for i in range(1, k - 1)]
    parts += [(iV(i + 1), F_(k - i + 1, k) * V(i)) for i in range(1, k - 1)]
    parts += [(iV(1), -F_(k + 1, k) * W2), (p - 2, W2)]
    fields.append(field_of(parts))

    parts = [(iV(i), V(i) - U(i - 1)) for i in range(1, k)]
    parts += [(iV(1), W1)]
    fields.append(field_of(parts))

    parts = [(iU(i), V(i) - U(i - 1)) for i in range(1, k - 1)]
    parts += [(iU(1), W1), (p - 2, W2)]
    fields.append(field_of(parts))

    for j in range(2, k - 1):
        parts = [(iU(i + j - 1), V(i) - U(i - 1)) for i in range(1, k - j)]
        if j - 1 >= 1:
            parts.append((iU(j - 1), W2))
        parts.append((iU(j), W1))
        fields.append(field_of(parts))
    fields.append(field_of([(iU(k - 2), W2)]))

    for j in range(1, k - 2):
        parts = []
        for i in range(1, k - j - 1):
            parts.append((iU(i + j), F_(i - 2, k) * U(i - 2) - V(i)))
            parts.append((iV(i + j + 1), F_(i, k) * V(i) - F_(k + 1, k) * U(i - 1)))
        parts += [(iU(j), W2), (iV(j + 2), F_(k + 1, k) * W1)]
        fields.append(field_of(parts))
    fields.append(field_of([(iV(k - 1), W2)]))

    for j in range(1, k - 1):
        parts = [(iV(i + j), U(i - 1) - V(i)) for i in range(1, k - j)]
        parts += [(iV(j), W2), (iV(j + 1), -W1)]
        fields.append(field_of(parts))

    return PublishedLift(
        f"linear parts of Lift(primitive unfolding, k={k})",
        as_multi(F),
        tuple(fields),
        "linear_parts",
        "versal unfolding of the primitive (2k-3, 2k-2) germ",
    )


def published_lifts() -> list[PublishedLift]:
    out = [augmented_fold_lift(l) for l in (2, 3)]
    out += [cusp_unfolding_lift(l) for l in (1, 2, 3)]
    out += [alternate_swallowtail_lift(), quintuple_point_lift(), fold_prism_lift(3), fold_prism_lift(4)]
    out += [an_linear_parts(3), an_linear_parts(4)]
    out += [primitive_unfolding_linear_parts(3), primitive_unfolding_linear_parts(4)]
    return out
