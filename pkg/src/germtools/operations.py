"""Germ-building operations: augmentation and the concatenations.

Every unfolding argument is a germ ``F(x, s) = (f_s(x), s)`` whose trailing
source variables are the parameters and appear unchanged as the trailing
components.  Constructors check that shape and, by default, that the
unfolding is stable.
"""

from __future__ import annotations

import re
from typing import Sequence

from .germ import GermError, MonoGerm, MultiGerm, as_multi, fold_map, germ, multigerm
from .invariants import DEFAULT_MAX_ORDER, DEFAULT_WINDOW, ae_codim, tjurina
from .liftables import dz_quotient
from .linalg import solve_dense
from .poly import Poly, parse


def as_poly(g, ring=None) -> Poly:
    if isinstance(g, Poly):
        return g
    if ring is None:
        ring = sorted(set(re.findall(r"[A-Za-z_]\w*", g)))
    return parse(g, ring)


def check_unfolding(f: MonoGerm | MultiGerm, F: MonoGerm | MultiGerm, s: int, check_stable: bool = True) -> MultiGerm:
    """Validate ``F`` as an s-parameter unfolding of ``f``; returns F as a multigerm."""
    f, F = as_multi(f), as_multi(F)
    if F.r != f.r:
        raise GermError(f"unfolding has {F.r} branches, germ has {f.r}")
    if (F.n, F.p) != (f.n + s, f.p + s):
        raise GermError(f"an {s}-parameter unfolding of a ({f.n},{f.p}) germ must be ({f.n + s},{f.p + s}), got ({F.n},{F.p})")
    ring = F.source_vars
    zero_params = [Poly.var(f.source_vars, i) for i in range(f.n)] + [Poly.zero(f.source_vars)] * s
    for b, (fb, Fb) in enumerate(zip(f.branches, F.branches)):
        for t in range(s):
            if Fb.components[f.p + t] != Poly.var(ring, f.n + t):
                raise GermError(f"branch {b}: component {f.p + t + 1} must be the parameter {ring[f.n + t]}")
        for i in range(f.p):
            restricted = Fb.components[i].compose(zero_params)
            if restricted != fb.components[i]:
                raise GermError(f"branch {b}: setting the parameters to 0 does not recover the germ")
    if check_stable:
        r = ae_codim(F)
        if r != 0:
            raise GermError(f"the unfolding is not stable ({r.summary()})")
    return F


def _fresh(names: Sequence[str], taken: Sequence[str]) -> tuple[str, ...]:
    if set(names) & set(taken):
        raise GermError(f"variable names {sorted(set(names) & set(taken))} clash with the germ's variables")
    return tuple(names)


def augment(h, H, g, check_stable: bool = True) -> MultiGerm:
    """(x, z) -> (h_{g(z)}(x), z) on every branch."""
    h = as_multi(h)
    H = check_unfolding(h, H, 1, check_stable)
    g = as_poly(g)
    if g.constant_term():
        raise GermError("the augmenting function must vanish at 0")
    zvars = _fresh(g.ring, h.source_vars)
    ring = tuple(h.source_vars) + zvars
    xs = [Poly.var(ring, i) for i in range(h.n)]
    gz = g.embed(ring, list(range(h.n, len(ring))))
    branches = []
    for Hb in H.branches:
        comps = [c.compose(xs + [gz]) for c in Hb.components[: h.p]]
        comps += [Poly.var(ring, h.n + j) for j in range(len(zvars))]
        branches.append(MonoGerm(tuple(comps)))
    return MultiGerm(tuple(branches))


def is_quasihomogeneous(g: Poly) -> bool | None:
    """True for one-variable functions and supports with positive weights.

    Returns None (unknown) when no weights fit the support of a function in
    several variables: it may still be quasihomogeneous in other coordinates.
    """
    if g.is_zero():
        return False
    if g.nvars == 1:
        return True
    support = list(g.terms)
    sol = solve_dense([list(m) for m in support], [1] * len(support))
    if sol is not None and all(w > 0 for w in sol):
        return True
    return None


def predicted_codim_augment(h, g, window: int = DEFAULT_WINDOW, max_order: int = DEFAULT_MAX_ORDER) -> tuple[int, bool | None]:
    """Lower bound ae_codim(h) * tjurina(g), and whether g is quasihomogeneous."""
    g = as_poly(g)
    c = ae_codim(h, window, max_order)
    t = tjurina(g, window, max_order)
    if not c.stable or not t.stable:
        raise ArithmeticError("codimension or Tjurina number did not stabilise")
    return int(c) * int(t), is_quasihomogeneous(g)


def monic_concat(f, F, k: int, check_stable: bool = True) -> MultiGerm:
    """{F, g} with g(X, v) = (X, sum v_j^2), v in K^k; g(X) = (X, 0) when k = 0."""
    f = as_multi(f)
    F = check_unfolding(f, F, 1, check_stable)
    if f.p + k != f.n + 1:
        raise GermError(f"monic concatenation needs p + k = n + 1, got p={f.p}, k={k}, n={f.n}")
    g = fold_map(F.n, F.p, source_vars=F.source_vars)
    return multigerm(F, g)


def aug_concat(f, F, phi, check_stable: bool = True) -> MultiGerm:
    """{A_{F,phi}(f), g} with g(X, v) = (X, sum v_j^2)."""
    f = as_multi(f)
    phi = as_poly(phi)
    if phi.nvars != 1:
        raise GermError("the augmenting function must be of one variable")
    Af = augment(f, F, phi, check_stable)
    g = fold_map(Af.n, Af.p, source_vars=Af.source_vars)
    return multigerm(Af, g)


def aug_concat_unfolding(f, F, phi) -> MultiGerm:
    """One-parameter unfolding {(f_{phi(z)+mu}(x), z, mu), (X, sum v^2, mu)}."""
    f = as_multi(f)
    phi = as_poly(phi)
    F = check_unfolding(f, F, 1, check_stable=False)
    z = phi.ring[0]
    mu = "mu" if "mu" not in f.source_vars and z != "mu" else "mu_"
    ring = tuple(f.source_vars) + (z, mu)
    xs = [Poly.var(ring, i) for i in range(f.n)]
    shifted = phi.embed(ring, [f.n]) + Poly.var(ring, mu)
    branches = []
    for Fb in F.branches:
        comps = [c.compose(xs + [shifted]) for c in Fb.components[: f.p]]
        branches.append(MonoGerm((*comps, Poly.var(ring, z), Poly.var(ring, mu))))
    X = [Poly.var(ring, i) for i in range(f.p)]
    sq = Poly.zero(ring)
    for i in range(f.p, f.n + 1):
        sq = sq + Poly.var(ring, i) ** 2
    branches.append(MonoGerm((*X, sq, Poly.var(ring, mu))))
    return MultiGerm(tuple(branches))


def predicted_codim_aug_concat(
    f, F, phi, window: int = DEFAULT_WINDOW, max_order: int = DEFAULT_MAX_ORDER
) -> tuple[int, bool | None]:
    """Lower bound ae_codim(f) * (tjurina(phi) + 1) and whether it is exact.

    Exactness needs phi quasihomogeneous and the dZ-spans of the pulled back
    lifts of A_{F,phi}(f) and of F to agree; the spans are compared through
    their quotient dimensions.
    """
    phi = as_poly(phi)
    c = ae_codim(f, window, max_order)
    t = tjurina(phi, window, max_order)
    if not c.stable or not t.stable:
        raise ArithmeticError("codimension or Tjurina number did not stabilise")
    bound = int(c) * (int(t) + 1)
    qh = is_quasihomogeneous(phi)
    Af = augment(f, F, phi, check_stable=False)
    q_af = dz_quotient(Af, window=window)
    q_f = dz_quotient(F, window=window)
    exact = bool(qh) and q_af.stable and q_af == q_f.value
    return bound, exact


def binary_concat(f0, g0, F, G, check_stable: bool = True) -> MultiGerm:
    """{(X, y, u) -> (X, f_u(y), u), (x, Y, u) -> (g_u(x), Y, u)}."""
    f0, g0 = as_multi(f0), as_multi(g0)
    F = check_unfolding(f0, F, 1, check_stable)
    G = check_unfolding(g0, G, 1, check_stable)
    m, a, l, b = f0.n, f0.p, g0.n, g0.p
    if b + m != l + a:
        raise GermError("binary concatenation needs matching source dimensions (b + m = l + a)")
    N = b + m + 1
    ring = tuple(f"x{i + 1}" for i in range(N))
    v = [Poly.var(ring, i) for i in range(N)]
    u = v[-1]
    branches = []
    for Fb in F.branches:
        sub = v[b : b + m] + [u]
        branches.append(MonoGerm((*v[:b], *(c.compose(sub) for c in Fb.components[:a]), u)))
    for Gb in G.branches:
        sub = v[:l] + [u]
        branches.append(MonoGerm((*(c.compose(sub) for c in Gb.components[:b]), *v[l : l + a], u)))
    return MultiGerm(tuple(branches))


def generalised_concat(F, gbar, f=None, check_stable: bool = True) -> MultiGerm:
    """{F, Id x gbar}: s = gbar's target dimension parameters are shared.

    ``gbar`` acts on the last ``n - p + s`` source variables; each of its
    branches gives one branch ``(x_1, ..., x_{p-s}, gbar(rest))``.
    """
    F, gbar = as_multi(F), as_multi(gbar)
    s = gbar.p
    if s >= F.p:
        raise GermError("the stable germ must have target dimension s < p")
    if gbar.n != F.n - (F.p - s):
        raise GermError(f"gbar must have {F.n - (F.p - s)} source variables, got {gbar.n}")
    if f is not None:
        check_unfolding(f, F, s, check_stable)
    elif check_stable and ae_codim(F) != 0:
        raise GermError("the unfolding is not stable")
    if check_stable and ae_codim(gbar) != 0:
        raise GermError("the concatenated germ is not stable")
    ring = F.source_vars
    v = [Poly.var(ring, i) for i in range(F.n)]
    keep = F.p - s
    branches = list(F.branches)
    for gb in gbar.branches:
        comps = [c.compose(v[keep:]) for c in gb.components]
        branches.append(MonoGerm((*v[:keep], *comps)))
    return MultiGerm(tuple(branches))


def _ring_tail(F: MultiGerm, k: int) -> tuple[str, ...]:
    return F.source_vars[F.n - k :]


def cuspidal_concat(f, F, check_stable: bool = True) -> MultiGerm:
    """{F, g} with g = (x_1, ..., x_{n-2}, y, z^3 + y z)."""
    f, F = as_multi(f), as_multi(F)
    if F.n < 3 or F.n != F.p:
        raise GermError("cuspidal concatenation needs an equidimensional unfolding with n >= 3")
    check_unfolding(f, F, 2, check_stable)
    y, z = _ring_tail(F, 2)
    gbar = germ([y, f"{z}^3+{y}*{z}"], [y, z])
    return generalised_concat(F, gbar, check_stable=False)


def double_fold_concat(f, F, check_stable: bool = True) -> MultiGerm:
    """{F, g1, g2} with g1 = (x, y, z^2) and g2 = (x, y, z^2 + y)."""
    f, F = as_multi(f), as_multi(F)
    if F.n < 3 or F.n != F.p:
        raise GermError("double fold concatenation needs an equidimensional unfolding with n >= 3")
    check_unfolding(f, F, 2, check_stable)
    y, z = _ring_tail(F, 2)
    gbar = multigerm(germ([y, f"{z}^2"], [y, z]), germ([y, f"{z}^2+{y}"], [y, z]))
    return generalised_concat(F, gbar, check_stable=False)


__all__ = [
    "augment",
    "predicted_codim_augment",
    "monic_concat",
    "aug_concat",
    "aug_concat_unfolding",
    "predicted_codim_aug_concat",
    "binary_concat",
    "generalised_concat",
    "cuspidal_concat",
    "double_fold_concat",
    "check_unfolding",
    "is_quasihomogeneous",
]
