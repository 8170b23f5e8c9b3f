"""Operation labels for multigerms of Ae-codimension 2.

A multigerm h is split into two parts {f, g} in every possible way; each
split that falls under one of the cases of the decision tree yields a label
together with the predicate values that produced it.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from functools import lru_cache

from .germ import GermError, MonoGerm, MultiGerm, as_multi, germ, multigerm
from .invariants import (
    DEFAULT_MAX_ORDER,
    DEFAULT_WINDOW,
    ae_codim,
    almost_regular_order,
    image_of_differential,
    multiplicity,
    tau_tilde,
    transverse_to_subspace,
)
from .linalg import Subspace

AUGMENTATION = "AUGMENTATION"
AUGMENTATION_AND_CONCATENATION = "AUGMENTATION_AND_CONCATENATION"
PRIMITIVE_MONOGERM_PLUS_MORSE = "PRIMITIVE_MONOGERM_PLUS_MORSE"
SPECIAL_34 = "SPECIAL_34"
MONIC_CONCATENATION = "MONIC_CONCATENATION"
GENERALISED_CONCATENATION = "GENERALISED_CONCATENATION"
DOUBLE_FOLD_CONCATENATION = "DOUBLE_FOLD_CONCATENATION"
SPECIAL_P2 = "SPECIAL_P2"
SPECIAL_NADATRANS = "SPECIAL_NADATRANS"
UNDECIDED = "UNDECIDED"


@dataclass
class Labeling:
    label: str
    f_branches: tuple[int, ...]
    g_branches: tuple[int, ...]
    evidence: dict = field(default_factory=dict)

    def __str__(self):
        ev = ", ".join(f"{k}={v}" for k, v in self.evidence.items())
        f = ",".join(str(i + 1) for i in self.f_branches)
        g = ",".join(str(i + 1) for i in self.g_branches)
        return f"{self.label}  [f = branches {f}; g = branches {g}]  {ev}"


def _stable_parts(f: MultiGerm, window: int, max_order: int) -> bool:
    return all(ae_codim(b, window, max_order) == 0 for b in f.branches)


def totally_nontransverse(f, window: int = DEFAULT_WINDOW, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    """Do the analytic strata of all branches share a common line?"""
    f = as_multi(f)
    if not _stable_parts(f, window, max_order):
        warnings.warn("a branch is not stable; its analytic stratum is taken as {0}")
        return False
    inter = Subspace.full(f.p)
    for b in f.branches:
        inter = inter.intersect(tau_tilde(b, assume_stable=True, max_order=max_order))
    return inter.dim >= 1


def stratum_codims(f, max_order: int = DEFAULT_MAX_ORDER) -> list[int]:
    f = as_multi(f)
    return [tau_tilde(b, assume_stable=True, max_order=max_order).codim for b in f.branches]


def augmentation_test(f, window: int = DEFAULT_WINDOW, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    """sum of analytic-stratum codimensions of the (stable) branches <= p."""
    f = as_multi(f)
    if not _stable_parts(f, window, max_order):
        raise GermError("augmentation test needs every branch stable")
    return sum(stratum_codims(f, max_order)) <= f.p


def has_one_param_stable_unfolding(f, split: tuple[tuple[int, ...], tuple[int, ...]] | None = None,
                                   window: int = DEFAULT_WINDOW, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    """Almost regular intersection of order 1 for a two-part stable multigerm.

    Without ``split`` the first branch is one part and the rest the other.
    """
    f = as_multi(f)
    if split is None:
        split = ((0,), tuple(range(1, f.r)))
    parts = [MultiGerm(tuple(f.branches[i] for i in idx)) for idx in split]
    taus = []
    for part in parts:
        if ae_codim(part, window, max_order) != 0:
            raise GermError("both parts must be stable")
        taus.append(tau_tilde(part, assume_stable=True, max_order=max_order))
    return almost_regular_order(taus) == 1


# structural normal forms


def nadatrans_form(n: int) -> MultiGerm:
    """The non-transverse (n, n+1) bigerms of codimension 2, n even."""
    if n % 2 or n < 2:
        raise ValueError("n must be even and positive")
    if n == 2:
        return multigerm(germ(["x", "y^2", "x*y"], "x,y"), germ(["x", "x^2", "y"], "x,y"))
    if n == 4:
        return multigerm(
            germ(["u1", "v1", "v2", "y^3+u1*y", "v1*y+v2*y^2"], "u1,v1,v2,y"),
            germ(["u1", "v1", "v2", "u1^2+v2", "y"], "u1,v1,v2,y"),
        )
    k = n // 2 + 1
    us = [f"u{i}" for i in range(1, k - 1)]
    vs = [f"v{i}" for i in range(1, k)]
    ring = us + vs + ["y"]
    w1 = f"y^{k}" + "".join(f"+u{i}*y^{i}" for i in range(1, k - 1))
    w2 = "+".join(f"v{i}*y^{i}" for i in range(1, k))
    b1 = germ(us + vs + [w1, w2], ring)
    b2 = germ(us + vs[:-1] + [f"u{k - 3}+u{k - 2}^2", vs[-1], "y"], ring)
    return multigerm(b1, b2)


def _same_branches(h: MultiGerm, form: MultiGerm) -> bool:
    if (h.n, h.p, h.r) != (form.n, form.p, form.r):
        return False
    mine = sorted(tuple(tuple(sorted(c.terms.items())) for c in b.components) for b in h.branches)
    theirs = sorted(tuple(tuple(sorted(c.terms.items())) for c in b.components) for b in form.branches)
    return mine == theirs


def branch_kind(br: MonoGerm, max_order: int = DEFAULT_MAX_ORDER) -> str:
    """regular / fold / cusp / A_k by the multiplicity of a stable branch."""
    m = multiplicity(br, max_order=max_order)
    if not m.stable:
        return "unknown"
    v = int(m)
    return {1: "regular", 2: "fold", 3: "cusp"}.get(v, f"A_{v - 1}")


def _p2_special(h: MultiGerm, max_order: int) -> bool:
    kinds = sorted(branch_kind(b, max_order) for b in h.branches)
    return h.p == 2 and h.n >= 2 and kinds in (["cusp", "cusp"], ["cusp", "fold", "fold"], ["cusp", "fold"])


def _pairwise_transverse(f: MultiGerm, g: MultiGerm) -> bool:
    for a in f.branches:
        for b in g.branches:
            if (image_of_differential(a) + image_of_differential(b)).dim != f.p:
                return False
    return True


def _split_labels(h, fi, gi, codim, window, max_order) -> list[Labeling]:
    f = MultiGerm(tuple(h.branches[i] for i in fi))
    g = MultiGerm(tuple(h.branches[i] for i in gi))
    n, p = h.n, h.p
    cf, cg = codim(fi), codim(gi)
    out = []
    if f.r == 1 and cf == 1 and cg == 0:
        t = p if n >= p else n // 2
        m0 = multiplicity(f.branches[0], max_order=max_order)
        ev = {"codim(f)": 1, "codim(g)": 0, "m0(f)": m0.value, "threshold": t}
        if not m0.stable:
            return [Labeling(UNDECIDED, fi, gi, ev)]
        m = int(m0)
        if m <= t:
            out.append(Labeling(AUGMENTATION, fi, gi, ev))
        elif m == t + 1:
            out.append(Labeling(AUGMENTATION_AND_CONCATENATION, fi, gi, ev))
        elif p in (1, 2) and m == t + 2:
            out.append(Labeling(PRIMITIVE_MONOGERM_PLUS_MORSE, fi, gi, ev))
        elif (n, p) == (3, 4) and m == 3:
            out.append(Labeling(SPECIAL_34, fi, gi, ev))
        else:
            out.append(Labeling(UNDECIDED, fi, gi, ev))
        return out
    if cf != 0 or cg != 0:
        return out
    tf = tau_tilde(f, assume_stable=True, max_order=max_order)
    tg = tau_tilde(g, assume_stable=True, max_order=max_order)
    codsum = tf.codim + tg.codim
    ev = {"cod tau(f)": tf.codim, "cod tau(g)": tg.codim, "p": p}
    if codsum <= p:
        return [Labeling(AUGMENTATION, fi, gi, ev)]
    g_tr = transverse_to_subspace(g, tf)
    f_tr = transverse_to_subspace(f, tg)
    ev.update({"g transverse to tau(f)": g_tr, "f transverse to tau(g)": f_tr})
    if not g_tr:
        fg = _pairwise_transverse(f, g)
        ev["f transverse to g"] = fg
        if fg:
            if g.r == 1:
                img = image_of_differential(g.branches[0])
                ev["dim Im dg0"] = img.dim
                ev["dim tau(g)"] = tg.dim
                if img == tg:
                    out.append(Labeling(MONIC_CONCATENATION, fi, gi, ev))
                elif p == 2 and _p2_special(h, max_order):
                    out.append(Labeling(SPECIAL_P2, fi, gi, ev))
                else:
                    out.append(Labeling(GENERALISED_CONCATENATION, fi, gi, ev))
            elif p == 2 and _p2_special(h, max_order):
                out.append(Labeling(SPECIAL_P2, fi, gi, ev))
            else:
                out.append(Labeling(DOUBLE_FOLD_CONCATENATION, fi, gi, ev))
        elif p == 2 and _p2_special(h, max_order):
            out.append(Labeling(SPECIAL_P2, fi, gi, ev))
        elif p == n + 1 and n % 2 == 0 and _same_branches(h, nadatrans_form(n)):
            out.append(Labeling(SPECIAL_NADATRANS, fi, gi, ev))
        else:
            out.append(Labeling(AUGMENTATION_AND_CONCATENATION, fi, gi, ev))
    elif f_tr:
        out.append(Labeling(GENERALISED_CONCATENATION, fi, gi, ev))
    if p == n + 1 and n % 2 == 0 and not any(l.label == SPECIAL_NADATRANS for l in out):
        if _same_branches(h, nadatrans_form(n)):
            out.append(Labeling(SPECIAL_NADATRANS, fi, gi, dict(ev, **{"normal form match": True})))
    return out


def classify_codim2(h, window: int = DEFAULT_WINDOW, max_order: int = DEFAULT_MAX_ORDER) -> list[Labeling]:
    """Every applicable label over all ordered splits {f, g} of the branches."""
    h = as_multi(h)
    total = ae_codim(h, window, max_order)
    if total != 2:
        raise GermError(f"codim = {total.value}, not 2")
    if h.r < 2:
        raise GermError("classification applies to multigerms with at least two branches")

    @lru_cache(maxsize=None)
    def codim(idx):
        r = ae_codim(MultiGerm(tuple(h.branches[i] for i in idx)), window, max_order)
        return r.value

    out = []
    idx = range(h.r)
    for size in range(1, h.r):
        for fi in itertools.combinations(idx, size):
            gi = tuple(i for i in idx if i not in fi)
            out.extend(_split_labels(h, fi, gi, codim, window, max_order))
    return out


def labels(h, **kw) -> list[str]:
    seen = []
    for lab in classify_codim2(h, **kw):
        if lab.label not in seen:
            seen.append(lab.label)
    return seen


__all__ = [
    "totally_nontransverse",
    "augmentation_test",
    "has_one_param_stable_unfolding",
    "classify_codim2",
    "labels",
    "nadatrans_form",
    "branch_kind",
    "Labeling",
]
