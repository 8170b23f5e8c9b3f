import pytest

from germtools.germ import (
    GermError,
    MonoGerm,
    VectorFieldGerm,
    fold_map,
    format_germ_file,
    germ,
    multigerm,
    paper_catalog,
    parse_germ_file,
    stable_Ak,
)
from germtools.invariants import ae_codim
from germtools.poly import ParseError

XYZ = "x,y,z"


def test_stable_ak_normal_forms():
    assert stable_Ak(1, 2) == germ(["x1^2", "x2"], "x1,x2")
    assert stable_Ak(2, 2) == germ(["x1^3+x2*x1", "x2"], "x1,x2")
    assert stable_Ak(3, 3) == germ(["x1^4+x2*x1+x3*x1^2", "x2", "x3"], "x1,x2,x3")
    with pytest.raises(GermError):
        stable_Ak(3, 2)


@pytest.mark.parametrize("k,n", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (4, 4)])
def test_stable_ak_is_stable(k, n):
    assert ae_codim(stable_Ak(k, n)) == 0


def test_fold_maps():
    assert fold_map(2, 2, source_vars=("x", "z")) == germ(["x", "z^2"], "x,z")
    assert fold_map(3, 3, shift="x2") == germ(["x1", "x2", "x3^2+x2"], "x1,x2,x3")
    assert fold_map(1, 2) == germ(["x1", "0"], "x1")
    with pytest.raises(GermError):
        fold_map(1, 3)


def test_germ_invariants():
    with pytest.raises(GermError):
        germ(["x+1", "y"], "x,y")
    with pytest.raises(GermError):
        multigerm(germ(["x"], "x"), germ(["x", "y"], "x,y"))


def test_vector_field_arity():
    eta = VectorFieldGerm.target(["X", "-Y"], ("X", "Y"))
    assert eta.degree() == 1
    with pytest.raises(GermError):
        VectorFieldGerm.target(["X"], ("X", "Y"))


def test_catalog_germs_vanish_at_origin():
    for e in paper_catalog():
        for b in e.germ.branches:
            assert all(c.constant_term() == 0 for c in b.components), e.name


def test_catalog_contents():
    names = {e.name for e in paper_catalog()}
    for required in ["A_1", "5_2", "6_1", "quintuple point", "(3,4) primitive + immersion", "non-transverse bigerm, n=4"]:
        assert required in names


GERM_TEXT = """# two folds
source_vars = [x, y]
target_dim = 2
branch = ( x, y^2 )
branch = ( x^2 + (1/2)*y, y )
"""


def test_file_round_trip():
    h = parse_germ_file(GERM_TEXT)
    assert h.r == 2 and (h.n, h.p) == (2, 2)
    again = parse_germ_file(format_germ_file(h))
    assert again == h
    assert format_germ_file(again) == format_germ_file(h)


def test_every_catalog_entry_round_trips():
    for e in paper_catalog():
        assert parse_germ_file(format_germ_file(e.germ)) == e.germ, e.name


@pytest.mark.parametrize(
    "text,line",
    [
        ("source_vars = [x]\ntarget_dim = 1\nbranch = ( x^^2 )\n", 3),
        ("source_vars = [x]\ntarget_dim = 2\nbranch = ( x )\n", 3),
        ("source_vars = [x]\ntarget_dim = 1\nbranch = ( x + 1 )\n", 3),
        ("target_dim = 1\nbranch = ( x )\n", 2),
        ("source_vars = x\n", 1),
        ("bogus = 3\n", 1),
    ],
)
def test_parse_errors_report_position(text, line):
    with pytest.raises(ParseError) as e:
        parse_germ_file(text)
    assert e.value.line == line
    assert e.value.column >= 1


def test_monogerm_from_strings():
    f = MonoGerm.from_strings(["x^2", "x^3"], ["x"])
    assert (f.n, f.p) == (1, 2)
