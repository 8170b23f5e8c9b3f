import random

import pytest

from germtools.germ import germ, multigerm
from germtools.jetlin import (
    UNBOUNDED,
    JetSpace,
    SpanMatrix,
    ae_history,
    quotient_dim,
    rank,
    stabilized_dim,
    tangent_span,
)
from germtools.poly import Poly

from coords import linear_change


def test_quotient_examples():
    jet = JetSpace.of_functions(1, 3)
    z = Poly.var(("z",), 0)
    span = SpanMatrix(jet)
    for k in (1, 2, 3):
        span.add_vector([z ** k])
    assert quotient_dim(jet, span) == 1

    full = SpanMatrix(jet)
    for k in range(4):
        full.add_vector([z ** k if k else Poly.const(("z",), 1)])
    assert quotient_dim(jet, full) == 0

    jet4 = JetSpace.of_functions(1, 4)
    ideal = SpanMatrix(jet4)
    ideal.add_module_multiples([z ** 2])
    ideal.add_module_multiples([z ** 3])
    assert quotient_dim(jet4, ideal) == 2


def test_truncated_rows_need_high_degree_flag():
    jet = JetSpace.of_functions(1, 2)
    span = SpanMatrix(jet)
    span.add_vector([Poly.var(("z",), 0) ** 3 + Poly.var(("z",), 0)])
    with pytest.raises(ValueError):
        quotient_dim(jet, span, include_high_degree=False)


def test_rank_examples():
    assert rank([]) == 0
    assert rank([{i: 1} for i in range(5)]) == 5
    assert rank([{0: 1, 1: 1}, {0: 2, 1: 2}]) == 1


def test_quotient_is_monotone_when_rows_are_added():
    jet = JetSpace(germ(["x", "y^3+x*y"], "x,y"), 4)
    span = tangent_span(jet)
    dims = []
    for k in range(0, len(span.rows) + 1, 7):
        dims.append(jet.dim - rank(span.rows[:k]))
    assert dims == sorted(dims, reverse=True)


def test_stabilisation():
    r = stabilized_dim(lambda K: 4, 3, 6)
    assert r.value == 4 and r.certified_order == 1
    grow = stabilized_dim(lambda K: list(range(K + 1)), 3, 8)
    assert grow.value == UNBOUNDED and grow.certified_order is None
    assert grow.summary().startswith("non-stabilizing: 1,2,3")
    with pytest.raises(ValueError):
        stabilized_dim(lambda K: 0, 1, 5)


GERMS = [
    germ(["x", "y^2", "x*y"], "x,y"),
    germ(["x^3+z^2*x", "z"], "x,z"),
    multigerm(germ(["x^3+z^2*x", "z"], "x,z"), germ(["x", "z^2"], "x,z")),
    germ(["x", "y", "z^3+(x^2+y^3)*z"], "x,y,z"),
    multigerm(germ(["x^2", "y"], "x,y"), germ(["x", "y^2"], "x,y"), germ(["x+y", "y^2+x^2"], "x,y")),
]


@pytest.mark.parametrize("h", GERMS, ids=str)
def test_reduced_frame_matches_unreduced_and_brute_force(h):
    order = 4
    reduced = ae_history(h, order, reduced=True)
    unreduced = ae_history(h, order, reduced=False)
    assert reduced == unreduced
    jet = JetSpace(h, order)
    assert quotient_dim(jet, tangent_span(jet)) == reduced[-1]


@pytest.mark.parametrize("h", GERMS[:3], ids=str)
def test_history_invariant_under_linear_changes(h):
    rng = random.Random(11)
    base = ae_history(h, 5)
    for _ in range(3):
        assert ae_history(linear_change(h, rng), 5) == base
