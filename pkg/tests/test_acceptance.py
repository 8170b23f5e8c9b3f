"""Acceptance suite: one PASS/FAIL line per criterion.

Every tolerance is exact integer equality.  Run with ``pytest -v
tests/test_acceptance.py`` (the lines are repeated in the terminal summary)
or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from coords import linear_change  # noqa: E402

from germtools.catalog import paper_catalog  # noqa: E402
from germtools.germ import MultiGerm, as_multi, germ, multigerm  # noqa: E402
from germtools.invariants import ae_codim  # noqa: E402
from germtools.jetlin import UNBOUNDED  # noqa: E402
from germtools.liftables import (  # noqa: E402
    an_linear_parts,
    an_unfolding,
    augmented_fold_lift,
    cusp_unfolding_lift,
    cuspidal_quotient,
    double_fold_quotient,
    dz_quotient,
    dz_quotient_spanned_by,
    fold_prism_lift,
    lift_jets,
    lift_residual,
    primitive_pair,
    solve_lift,
)
from germtools.operations import cuspidal_concat, monic_concat  # noqa: E402
from germtools.poly import Poly, compose, parse, partial, truncate  # noqa: E402

XYZ = "x,y,z"
RESULTS: list[str] = []


def catalog(name: str) -> MultiGerm:
    return next(e.germ for e in paper_catalog() if e.name == name)


def value(report):
    return report.value if hasattr(report, "value") else report


class Criterion:
    """Collects (description, expected, computed) checks and reports one line."""

    def __init__(self, number: int, title: str, budget_s: float):
        self.number, self.title, self.budget = number, title, budget_s
        self.checks: list[tuple[str, object, object]] = []
        self.t0 = time.perf_counter()

    def check(self, desc: str, expected, computed):
        self.checks.append((desc, expected, value(computed)))

    def finish(self):
        secs = time.perf_counter() - self.t0
        bad = [(d, e, c) for d, e, c in self.checks if e != c]
        status = "PASS" if not bad else "FAIL"
        detail = "; ".join(f"{d}: expected {e}, computed {c}" for d, e, c in bad)
        line = f"criterion {self.number:>2} {status}  {self.title}  ({len(self.checks) - len(bad)}/{len(self.checks)} checks, {secs:.1f}s, budget {self.budget:.0f}s)"
        if detail:
            line += f"  -- {detail}"
        RESULTS.append(line)
        print(line)
        assert not bad, detail


def test_01_augmentation_codimension():
    c = Criterion(1, "augmentation of the cusp by z^l has codimension l-1", 3)
    for l in (2, 3, 4):
        c.check(f"l={l}", l - 1, ae_codim(germ([f"x^3+z^{l}*x", "z"], "x,z")))
    c.finish()


def test_02_augmentation_and_concatenation():
    c = Criterion(2, "augmented cusp with a fold has codimension l", 5)
    for l in (2, 3):
        h = multigerm(germ([f"x^3+z^{l}*x", "z"], "x,z"), germ(["x", "z^2"], "x,z"))
        c.check(f"l={l}", l, ae_codim(h))
    c.finish()


def test_03_augmented_cusp_family_chain():
    c = Criterion(3, "augmented cusp family: codim, dZ quotient and bigerm", 30)
    for l, m in ((2, 2), (3, 2)):
        amf = germ([f"x^3+y^{l}*x+z^{m}*x", "y", "z"], XYZ)
        c.check(f"codim A^{m}F_{l}", (l - 1) * (m - 1), ae_codim(amf))
        c.check(f"dZ quotient A^{m}F_{l}", l - 1, dz_quotient(amf))
        c.check(f"bigerm (l,m)=({l},{m})", (l - 1) * m, ae_codim(multigerm(amf, germ(["x", "y", "z^2"], XYZ))))
    c.finish()


def test_04_quadratic_augmentation_of_lips_type_germ():
    c = Criterion(4, "quadratic augmentation of x^4+yx^2+y^2x", 30)
    af = germ(["x^4+y*x^2+y^2*x+z^2*x", "y", "z"], XYZ)
    c.check("codim Af", 2, ae_codim(af))
    c.check("dZ quotient dimension", 2, dz_quotient(af))
    R = ("X", "Y")
    c.check("{1, Y} spans the dZ quotient", True, dz_quotient_spanned_by(af, [parse("1", R), parse("Y", R)]))
    c.check("bigerm", 4, ae_codim(multigerm(af, germ(["x", "y", "z^2"], XYZ))))
    c.finish()


def test_05_monic_concatenation_preserves_codimension():
    c = Criterion(5, "monic concatenation keeps the codimension of f", 10)
    cases = [
        ("x^3, k=1", germ(["x^3"], "x"), germ(["x^3+l*x", "l"], "x,l"), 1),
        ("(x^4+yx, y), k=1", germ(["x^4+y*x", "y"], "x,y"), germ(["x^4+y*x+z*x^2", "y", "z"], XYZ), 1),
        ("(x^2, x^3), k=0", germ(["x^2", "x^3"], "x"), germ(["x^2", "x^3+y*x", "y"], "x,y"), 0),
        ("(x^2, x^5), k=0", germ(["x^2", "x^5"], "x"), germ(["x^2", "x^5+y*x", "y"], "x,y"), 0),
    ]
    for name, f, F, k in cases:
        c.check(name, value(ae_codim(f)), ae_codim(monic_concat(f, F, k)))
    c.finish()


def test_06_cuspidal_concatenation_of_stable_an():
    c = Criterion(6, "cuspidal concatenation of the stable A_n unfolding has codimension n", 60)
    for n in (3, 4):
        F = an_unfolding(n)
        h = multigerm(F, germ([*F.source_vars[:-1], f"z^3+{F.source_vars[-2]}*z"], F.source_vars))
        direct, quotient = ae_codim(h), cuspidal_quotient(F)
        c.check(f"n={n} direct", n, direct)
        c.check(f"n={n} cuspidal quotient", n, quotient)
        c.check(f"n={n} routes agree", value(direct), quotient)
    c.finish()


def test_07_unfoldings_of_x4():
    c = Criterion(7, "x^4: swallowtail gives 3, alternate unfolding gives 4", 60)
    x4 = germ(["x^4"], "x")
    sw = germ(["x^4+y*x+z*x^2", "y", "z"], XYZ)
    alt = germ(["x^4+y*x^2+y^2*x+z*x", "y", "z"], XYZ)
    c.check("swallowtail", 3, ae_codim(cuspidal_concat(x4, sw)))
    c.check("alternate unfolding", 4, ae_codim(cuspidal_concat(x4, alt)))
    c.finish()


def test_08_cusp_family_with_cuspidal_edge():
    c = Criterion(8, "F_l with a cuspidal edge: 1 for l=1, 2 for l=2,3", 30)
    x3 = germ(["x^3"], "x")
    for l, exp in ((1, 1), (2, 2), (3, 2)):
        c.check(f"l={l}", exp, ae_codim(cuspidal_concat(x3, germ([f"x^3+y^{l}*x+z*x", "y", "z"], XYZ))))
    c.finish()


def test_09_bigerm_unfoldings_with_cuspidal_edge():
    c = Criterion(9, "{x^2, x^3}: F_1 gives 3, F_2 is not finitely determined", 120)
    edge = germ(["x", "y", "z^3+y*z"], XYZ)
    F1 = multigerm(germ(["x^2+y+z", "y", "z"], XYZ), germ(["x^3+x*y", "y", "z"], XYZ))
    F2 = multigerm(germ(["x^2", "y", "z"], XYZ), germ(["x^3+x*y+z", "y", "z"], XYZ))
    c.check("F_1", 3, ae_codim(multigerm(F1, edge)))
    r = ae_codim(multigerm(F2, edge), max_order=14)
    c.check("F_2 non-stabilizing through order 14", UNBOUNDED, r)
    c.finish()


def test_10_double_fold_concatenation():
    c = Criterion(10, "quintuple point: 1 + 3 = 4 by decomposition and directly", 120)
    fg1 = multigerm(
        germ(["x^2+y+z", "y", "z"], XYZ),
        germ(["x^2", "y", "z"], XYZ),
        germ(["x^2-y", "y", "z"], XYZ),
        germ(["x", "y", "z^2"], XYZ),
    )
    first, quotient = ae_codim(fg1), double_fold_quotient(fg1)
    c.check("{F, g1}", 1, first)
    c.check("double fold quotient", 3, quotient)
    direct = ae_codim(multigerm(fg1, germ(["x", "y", "z^2+y"], XYZ)))
    c.check("direct", 4, direct)
    c.check("decomposition", 4, value(first) + value(quotient))
    c.finish()


def test_11_monogerm_table():
    c = Criterion(11, "simple corank-1 germs of R^3 -> R^3", 300)
    for e in paper_catalog():
        if "table" in e.tags:
            c.check(e.name, e.expected_codim, ae_codim(e.germ))
    c.finish()


def test_12_primitive_codimension_two_examples():
    c = Criterion(12, "primitive codimension-2 multigerms and the equidimensional family", 120)
    for name, exp in (
        ("Morse + A_2 (p=1)", 2),
        ("{(x^2,x^3),(0,x)}", 2),
        ("{(x^4+yx,y),(x,y^2+x)}", 2),
        ("equidimensional primitive + fold, n=2", 2),
        ("equidimensional primitive + fold, n=3", 3),
        ("(3,4) primitive + immersion", 2),
    ):
        c.check(name, exp, ae_codim(catalog(name)))
    c.finish()


def _residuals_vanish(F, order) -> bool:
    basis = solve_lift(F, order)
    for eta, per_branch in zip(basis.fields, basis.sources):
        for br, xi in zip(as_multi(F).branches, per_branch):
            if any(not r.is_zero() for r in lift_residual(br, eta, xi.coefficients, order)):
                return False
    return True


def test_13_published_lift_generators():
    c = Criterion(13, "solved Lift reproduces published generators and linear parts", 120)
    order = 6
    for pl in [augmented_fold_lift(2), augmented_fold_lift(3), *(cusp_unfolding_lift(l) for l in (1, 2, 3)), fold_prism_lift(3)]:
        basis = solve_lift(pl.germ, order, with_sources=False)
        for k, eta in enumerate(pl.fields):
            c.check(f"{pl.name} generator {k + 1} ({eta})", True, basis.contains(eta))
        c.check(f"{pl.name} residuals vanish to order {order}", True, _residuals_vanish(pl.germ, order))
    pl = an_linear_parts(3)
    lin = solve_lift(pl.germ, 1, margin=9, with_sources=False)
    for k, eta in enumerate(pl.fields):
        c.check(f"{pl.name} field {k + 1} ({eta})", True, lin.contains(eta))
    c.finish()


def test_14_linear_part_counts():
    c = Criterion(14, "linear parts of Lift for primitive germs", 120)
    for name, f in (
        ("n=2", germ(["x1^4+x2*x1", "x2"], "x1,x2")),
        ("n=3", germ(["x1^5+x2*x1+x3*x1^2", "x2", "x3"], "x1,x2,x3")),
    ):
        basis, _ = lift_jets(f)
        c.check(f"equidimensional primitive {name}: only the Euler field", 1, len(basis))
    f, _ = primitive_pair(3)
    basis, _ = lift_jets(f)
    c.check("(3,4) primitive germ, k=3", 3, len(basis))
    c.finish()


def _random_poly(rng, ring, degree=3, terms=4):
    out = Poly.zero(ring)
    for _ in range(rng.randint(0, terms)):
        exps = [0] * len(ring)
        for _ in range(rng.randint(0, degree)):
            exps[rng.randrange(len(ring))] += 1
        out = out + Poly.monomial(ring, exps, rng.randint(-4, 4))
    return out


def _algebra_laws(cases: int, seed: int = 99) -> int:
    rng = random.Random(seed)
    R = ("x", "y", "z")
    passed = 0
    for _ in range(cases):
        a, b, c = (_random_poly(rng, R) for _ in range(3))
        d = rng.randint(0, 5)
        f = [_random_poly(rng, R, 2, 2) for _ in range(3)]
        g = [_random_poly(rng, R, 2, 2) for _ in range(3)]
        p = _random_poly(rng, R, 2, 3)
        i = rng.randrange(3)
        ok = (
            (a + b) * c == a * c + b * c
            and (a * b) * c == a * (b * c)
            and truncate(a * b, d) == truncate(truncate(a, d) * truncate(b, d), d)
            and compose(compose(p, f), g) == compose(p, [compose(fi, g) for fi in f])
            and partial(a * b, i) == partial(a, i) * b + a * partial(b, i)
        )
        passed += ok
    return passed


def test_15_property_suites():
    c = Criterion(15, "coordinate invariance, lift intersections and algebra laws", 300)
    rng = random.Random(15)
    for e in paper_catalog():
        if e.germ.n > 3:
            continue
        base = ae_codim(e.germ)
        if not base.stable or base.certified_order > 4:
            continue
        order = max(base.certified_order + 3, 5)
        moved = [value(ae_codim(linear_change(e.germ, rng), max_order=order)) for _ in range(5)]
        c.check(f"{e.name} under 5 linear changes", [base.value] * 5, moved)
    for e in paper_catalog():
        h = e.germ
        if h.r < 2 or h.n > 3 or h.r > 4:
            continue
        whole = solve_lift(h, 2, with_sources=False)
        inside = all(solve_lift(br, 2, with_sources=False).contains(eta) for br in h.branches for eta in whole.fields)
        c.check(f"Lift({e.name}) inside every branch Lift", True, inside)
    cases = 1000
    c.check(f"{cases} randomised algebra cases", cases, _algebra_laws(cases))
    c.finish()


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
