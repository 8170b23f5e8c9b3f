import pytest

from germtools.germ import GermError, as_multi, fold_map, germ, multigerm
from germtools.invariants import ae_codim
from germtools.liftables import double_fold_quotient
from germtools.operations import (
    aug_concat,
    aug_concat_unfolding,
    augment,
    binary_concat,
    check_unfolding,
    cuspidal_concat,
    double_fold_concat,
    generalised_concat,
    is_quasihomogeneous,
    monic_concat,
    predicted_codim_aug_concat,
    predicted_codim_augment,
)
from germtools.poly import parse

XYZ = "x,y,z"
x3 = germ(["x^3"], "x")
X3 = germ(["x^3+l*x", "l"], "x,l")
x4 = germ(["x^4"], "x")
swallowtail = germ(["x^4+y*x+z*x^2", "y", "z"], XYZ)


def f_l(l):
    return germ([f"x^3+y^{l}*x", "y"], "x,y"), germ([f"x^3+y^{l}*x+l*x", "y", "l"], "x,y,l")


class TestAugment:
    @pytest.mark.parametrize("l", [2, 3, 4])
    def test_cusp_augmentation(self, l):
        a = augment(x3, X3, f"z^{l}")
        assert a == as_multi(germ([f"x^3+z^{l}*x", "z"], "x,z"))
        assert ae_codim(a) == l - 1
        assert predicted_codim_augment(x3, f"z^{l}") == (l - 1, True)

    def test_submersion_gives_stable_germ(self):
        a = augment(x3, X3, "z")
        assert ae_codim(a) == 0
        assert predicted_codim_augment(x3, "z") == (0, True)

    def test_cusp_family(self):
        f, F = f_l(2)
        a = augment(f, F, "z^2")
        assert a == as_multi(germ(["x^3+y^2*x+z^2*x", "y", "z"], XYZ))
        assert predicted_codim_augment(f, "z^2") == (1, True)
        assert ae_codim(a) == 1

    def test_shape_and_stability_checks(self):
        with pytest.raises(GermError):
            augment(x3, germ(["x^3+l^2*x", "l"], "x,l"), "z")
        with pytest.raises(GermError):
            augment(x3, germ(["x^3+l*x", "l+x"], "x,l"), "z")
        with pytest.raises(GermError):
            augment(x3, X3, "z+1")

    def test_quasihomogeneity(self):
        assert is_quasihomogeneous(parse("z^3", ["z"]))
        assert is_quasihomogeneous(parse("u^2+v^3", ["u", "v"]))
        assert is_quasihomogeneous(parse("u^4+v^4+u^2*v^3", ["u", "v"])) is None


class TestConcatenations:
    @pytest.mark.parametrize("l", [2, 3])
    def test_aug_concat(self, l):
        h = aug_concat(x3, X3, f"z^{l}")
        assert h == multigerm(germ([f"x^3+z^{l}*x", "z"], "x,z"), germ(["x", "z^2"], "x,z"))
        assert ae_codim(h) == l
        assert predicted_codim_aug_concat(x3, X3, f"z^{l}") == (l, True)
        assert ae_codim(aug_concat_unfolding(x3, X3, f"z^{l}")) == 0

    def test_aug_concat_lips(self):
        f = germ(["x^4+y*x^2+y^2*x", "y"], "x,y")
        F = germ(["x^4+y*x^2+y^2*x+l*x", "y", "l"], "x,y,l")
        assert predicted_codim_aug_concat(f, F, "z^2") == (4, True)
        assert ae_codim(aug_concat(f, F, "z^2")) == 4

    def test_submersion_reduces_to_monic(self):
        assert predicted_codim_aug_concat(x3, X3, "z") == (1, True)

    @pytest.mark.parametrize(
        "f,F,k",
        [
            (x3, X3, 1),
            (germ(["x^4+y*x", "y"], "x,y"), swallowtail, 1),
            (germ(["x^2", "x^3"], "x"), germ(["x^2", "x^3+y*x", "y"], "x,y"), 0),
        ],
        ids=["x^3", "x^4", "x^2,x^3"],
    )
    def test_monic_preserves_codim(self, f, F, k):
        assert ae_codim(monic_concat(f, F, k)) == ae_codim(f).value

    def test_monic_tangent_fold_pair(self):
        f = multigerm(germ(["x^2"], "x"), germ(["x^2"], "x"))
        F = multigerm(germ(["x^2", "l"], "x,l"), germ(["x^2+l", "l"], "x,l"))
        assert ae_codim(f) == 1
        assert ae_codim(monic_concat(f, F, 1)) == 1

    def test_monic_dimension_rule(self):
        with pytest.raises(GermError):
            monic_concat(x3, X3, 0)

    def test_monic_immersion(self):
        h = monic_concat(germ(["x^2", "x^3"], "x"), germ(["x^2", "x^3+y*x", "y"], "x,y"), 0)
        assert h.branches[1] == fold_map(2, 3, source_vars=("x", "y"))

    def test_binary(self):
        b = binary_concat(x3, x3, X3, X3)
        assert b.r == 2 and ae_codim(b) == 1
        morse = germ(["x^2"], "x")
        assert ae_codim(binary_concat(morse, x3, germ(["x^2+u", "u"], "x,u"), X3)) == 0

    def test_generalised_recovers_monic_and_cuspidal(self):
        fold = germ(["z^2"], "z")
        assert generalised_concat(X3, fold) == monic_concat(x3, X3, 1)
        cusp = germ(["y", "z^3+y*z"], "y,z")
        assert generalised_concat(swallowtail, cusp) == cuspidal_concat(x4, swallowtail)

    def test_cuspidal(self):
        assert ae_codim(cuspidal_concat(x4, swallowtail)) == 3
        assert ae_codim(cuspidal_concat(x3, germ(["x^3+y^2*x+z*x", "y", "z"], XYZ))) == 2

    def test_double_fold(self):
        three = multigerm(*[germ(["x^2"], "x")] * 3)
        F = multigerm(germ(["x^2+y+z", "y", "z"], XYZ), germ(["x^2", "y", "z"], XYZ), germ(["x^2-y", "y", "z"], XYZ))
        q = double_fold_concat(three, F)
        assert q.r == 5
        first = multigerm(*q.branches[:4])
        assert ae_codim(first) == 1
        assert double_fold_quotient(first) == 3
        assert ae_codim(q) == 4

    def test_fold_concatenated_stable_germ_bound(self):
        H = germ(["x^3+y*x", "y"], "x,y")
        assert ae_codim(multigerm(H, germ(["x", "y^2"], "x,y"))).value <= ae_codim(H).value + 1

    def test_unfolding_check_rejects_wrong_germ(self):
        with pytest.raises(GermError):
            check_unfolding(x4, X3, 1)
