from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from germtools.linalg import Echelon, Subspace, bareiss_rank, nullspace, rank, solve_dense

matrices = st.integers(1, 6).flatmap(
    lambda m: st.integers(1, 6).flatmap(
        lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


def test_known_ranks():
    assert rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[Fraction(1, 2), 1], [0, Fraction(1, 3)]]) == 2
    assert rank([{0: 1, 5: 2}, {5: 1}, {0: 2, 5: 5}]) == 2


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_sparse_echelon_agrees_with_bareiss(m):
    assert rank(m) == bareiss_rank(m)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_nullspace_dimension_and_kernel(m):
    ker = nullspace(m)
    assert len(ker) == len(m[0]) - bareiss_rank(m)
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


@settings(max_examples=200, deadline=None)
@given(matrices, st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_solve_dense(m, w):
    x = w[: len(m[0])]
    b = [sum(a * c for a, c in zip(row, x)) for row in m]
    sol = solve_dense(m, b)
    assert sol is not None
    assert [sum(a * c for a, c in zip(row, sol)) for row in m] == b


def test_inconsistent_system():
    assert solve_dense([[1, 1], [2, 2]], [1, 3]) is None


def test_normal_form_and_membership():
    e = Echelon()
    e.insert({0: 2, 1: 4})
    e.insert({1: 1, 2: 1})
    assert e.contains({0: 1, 1: 3, 2: 1})
    assert not e.contains({2: 1})
    reduced, scale = e.normal_form({0: 1, 2: 3})
    assert scale != 0 and reduced


def test_subspace_operations():
    a = Subspace(3, [[1, 0, 0], [0, 1, 0]])
    b = Subspace(3, [[0, 1, 0], [0, 0, 1]])
    assert (a + b).dim == 3
    inter = a.intersect(b)
    assert inter.dim == 1 and inter.contains([0, 5, 0])
    assert a.codim == 1
    assert Subspace.full(3) == a + b
