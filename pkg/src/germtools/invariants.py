"""Numerical invariants of map-germs computed by truncated jet algebra."""

from __future__ import annotations

from typing import Sequence

from .germ import MonoGerm, MultiGerm, as_multi
from .jetlin import (
    UNBOUNDED,
    CodimReport,
    ae_history,
    module_echelon,
    module_history,
    stabilized_dim,
)
from .linalg import Subspace
from .poly import Poly

DEFAULT_WINDOW = 3
DEFAULT_MAX_ORDER = 14


def ae_codim(
    f: MonoGerm | MultiGerm,
    window: int = DEFAULT_WINDOW,
    max_order: int = DEFAULT_MAX_ORDER,
    reduced: bool = True,
) -> CodimReport:
    """dim theta(f) / (tf(theta_n) + wf(theta_p)).

    tf acts branch by branch; wf composes one target field with every branch.
    """
    f = as_multi(f)
    return stabilized_dim(lambda K: ae_history(f, K, reduced), window, max_order)


def _k_generators(br: MonoGerm) -> list[list[Poly | None]]:
    """Generators of tg(theta_n) + g*(M_p) theta(g) for one branch."""
    p = br.p
    gens = [[c.partial(j) for c in br.components] for j in range(br.n)]
    for comp in br.components:
        for i in range(p):
            gens.append([comp if t == i else None for t in range(p)])
    return gens


def _k_history(br: MonoGerm, K: int) -> list[int]:
    return module_history(_k_generators(br), br.n, br.p, K)


def ke_codim(
    g: MonoGerm | MultiGerm,
    window: int = DEFAULT_WINDOW,
    max_order: int = DEFAULT_MAX_ORDER,
) -> CodimReport:
    """dim theta(g) / (tg(theta_n) + g*(M_p) theta(g)); additive over branches."""
    g = as_multi(g)

    def build(K):
        total = [0] * (K + 1)
        for br in g.branches:
            total = [a + b for a, b in zip(total, _k_history(br, K))]
        return total

    return stabilized_dim(build, window, max_order)


def _ideal_codim(gens: Sequence[Poly], nvars: int, window: int, max_order: int) -> CodimReport:
    gens = [g for g in gens if not g.is_zero()]
    return stabilized_dim(lambda K: module_history([[g] for g in gens], nvars, 1, K), window, max_order)


def tjurina(g: Poly, window: int = DEFAULT_WINDOW, max_order: int = DEFAULT_MAX_ORDER) -> CodimReport:
    """dim O_q / (<g> + <dg/dz_1, ..., dg/dz_q>)."""
    if g.constant_term():
        raise ValueError("tjurina number needs g(0) = 0")
    gens = [g] + [g.partial(j) for j in range(g.nvars)]
    return _ideal_codim(gens, g.nvars, window, max_order)


def milnor(g: Poly, window: int = DEFAULT_WINDOW, max_order: int = DEFAULT_MAX_ORDER) -> CodimReport:
    gens = [g.partial(j) for j in range(g.nvars)]
    return _ideal_codim(gens, g.nvars, window, max_order)


def suspension_variables(f: MonoGerm) -> list[int]:
    """Variables entering f only through one pure square term ``c*v^2``."""
    out = []
    for v in range(f.n):
        hits = []
        for comp in f.components:
            for m, c in comp.terms.items():
                if m[v]:
                    hits.append(m)
        e = [0] * f.n
        e[v] = 2
        if len(hits) == 1 and hits[0] == tuple(e):
            out.append(v)
    return out


def multiplicity(
    f: MonoGerm,
    suspension: Sequence[int] | None = None,
    window: int = DEFAULT_WINDOW,
    max_order: int = DEFAULT_MAX_ORDER,
) -> CodimReport:
    """dim O_n / f*(M_p).

    When n > p the germ is first reduced by setting the quadratic suspension
    variables to zero (detected automatically unless ``suspension`` is given).
    """
    if isinstance(f, MultiGerm):
        if f.r != 1:
            raise ValueError("multiplicity is defined for monogerms")
        f = f.branches[0]
    comps = list(f.components)
    keep = list(range(f.n))
    if f.n > f.p:
        drop = list(suspension) if suspension is not None else suspension_variables(f)[: f.n - f.p]
        keep = [v for v in range(f.n) if v not in drop]
        ring = tuple(f.source_vars[v] for v in keep)
        subst = []
        for v in range(f.n):
            subst.append(Poly.var(ring, keep.index(v)) if v in keep else Poly.zero(ring))
        comps = [c.compose(subst) for c in comps]
    return _ideal_codim(comps, len(keep), window, max_order)


# analytic strata and transversality


def image_of_differential(f: MonoGerm) -> Subspace:
    jac = f.jacobian_at_origin()
    cols = [[jac[i][j] for i in range(f.p)] for j in range(f.n)]
    return Subspace(f.p, cols)


def _mather_tau_branch(br: MonoGerm, max_order: int) -> Subspace:
    """Constant vectors v with v in tf(theta_n) + f*(M_p) theta(f).

    The truncation order is chosen where the K-tangent space history stops
    growing: then M^K theta(f) lies inside that space (Nakayama) and the
    computation modulo M^{K+1} is exact.
    """
    gens = _k_generators(br)
    hist = module_history(gens, br.n, br.p, max_order)
    K = next((k for k in range(1, max_order + 1) if hist[k] == hist[k - 1]), None)
    if K is None:
        raise ValueError("K-tangent space is not of finite codimension up to the order bound")
    idx, ech = module_echelon(gens, br.n, br.p, K)
    size = idx.size
    zero = (0,) * br.n
    for i in range(br.p):
        ech.insert({idx.col(i, zero, 0): 1, size + i: 1})
    vecs = []
    for lead, row in ech.pivots.items():
        if lead >= size:
            vecs.append([row.get(size + i, 0) for i in range(br.p)])
    return Subspace(br.p, vecs)


def tau_tilde(
    f: MonoGerm | MultiGerm,
    assume_stable: bool | None = None,
    window: int = DEFAULT_WINDOW,
    max_order: int = DEFAULT_MAX_ORDER,
) -> Subspace:
    """Analytic stratum of a stable germ as a subspace of K^p.

    For stable germs this is Mather's tau: the intersection over branches of
    the constant target vectors lying in tf(theta_n) + f*(M_p) theta(f).
    Non-stable germs return the zero subspace.
    """
    f = as_multi(f)
    if assume_stable is None:
        assume_stable = ae_codim(f, window, max_order) == 0
    if not assume_stable:
        return Subspace(f.p)
    result = Subspace.full(f.p)
    for br in f.branches:
        result = result.intersect(_mather_tau_branch(br, max_order))
    return result


def as_subspace(V, p: int) -> Subspace:
    if isinstance(V, Subspace):
        return V
    return Subspace(p, [list(v) for v in V])


def transverse_to_subspace(f: MonoGerm, V) -> bool:
    """Im(df_0) + V = K^p."""
    if isinstance(f, MultiGerm):
        return all(transverse_to_subspace(b, V) for b in f.branches)
    V = as_subspace(V, f.p)
    return (image_of_differential(f) + V).dim == f.p


def almost_regular_order(subspaces: Sequence) -> int:
    """sum of codimensions minus codimension of the intersection."""
    if not subspaces:
        raise ValueError("need at least one subspace")
    spaces = list(subspaces)
    total = sum(s.codim for s in spaces)
    inter = spaces[0]
    for s in spaces[1:]:
        inter = inter.intersect(s)
    return total - inter.codim


def is_stable(f: MonoGerm | MultiGerm, window: int = DEFAULT_WINDOW, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    return ae_codim(f, window, max_order) == 0


__all__ = [
    "UNBOUNDED",
    "ae_codim",
    "ke_codim",
    "tjurina",
    "milnor",
    "multiplicity",
    "tau_tilde",
    "transverse_to_subspace",
    "almost_regular_order",
    "image_of_differential",
    "is_stable",
    "suspension_variables",
]
