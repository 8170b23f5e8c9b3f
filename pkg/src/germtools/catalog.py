"""Named germs and multigerms with their published codimensions."""

from __future__ import annotations

from dataclasses import dataclass

from .germ import MultiGerm, as_multi, fold_map, germ, multigerm, stable_Ak
from .jetlin import UNBOUNDED
from .liftables import an_unfolding


@dataclass(frozen=True)
class CatalogEntry:
    """``expected_codim`` is the published value; UNBOUNDED marks a germ
    published as not finitely determined."""

    name: str
    germ: MultiGerm
    expected_codim: int | str | None
    source: str
    tags: tuple[str, ...] = ()
    label: str | None = None  # expected codimension-2 classification
    note: str = ""

    def matches(self, pattern: str | None) -> bool:
        if not pattern:
            return True
        pat = pattern.lower()
        return pat in self.name.lower() or any(pat == t for t in self.tags)


def _entry(name, g, expected, source, tags=(), label=None, note=""):
    return CatalogEntry(name, as_multi(g), expected, source, tuple(tags), label, note)


XYZ = "x,y,z"


def _table() -> list[CatalogEntry]:
    src = "simple corank-1 germs R^3 -> R^3"
    out = [_entry("A_1", germ(["x", "y", "z^2"], XYZ), 0, src, ["table"])]
    out.append(_entry("3_1 (P=x^2+y^2)", germ(["x", "y", "z^3+(x^2+y^2)*z"], XYZ), 1, src, ["table"]))
    out.append(_entry("3_2 (P=x^2+y^3)", germ(["x", "y", "z^3+(x^2+y^3)*z"], XYZ), 2, src, ["table"]))
    for k in (1, 2, 3):
        out.append(_entry(f"4_1^{k}", germ(["x", "y", f"z^4+x*z+y^{k}*z^2"], XYZ), k - 1, src, ["table"]))
    for k in (2, 3):
        out.append(_entry(f"4_2^{k}", germ(["x", "y", f"z^4+(y^2+x^{k})*z+x*z^2"], XYZ), k, src, ["table"]))
    out.append(_entry("5_1", germ(["x", "y", "z^5+x*z+y*z^2"], XYZ), 1, src, ["table"]))
    out.append(_entry("5_2", germ(["x", "y", "z^5+x*z+y^2*z^2+y*z^3"], XYZ), 2, src, ["table"]))
    out.append(
        _entry(
            "6_1",
            germ(["x", "y", "z^6+y*z^2+x*z"], XYZ),
            3,
            "unimodular corank-1 germ R^3 -> R^3",
            ["table"],
            note="unimodular: the published 3 is the codimension of the modular stratum",
        )
    )
    return out


def _augmentations() -> list[CatalogEntry]:
    out = []
    for l in (2, 3, 4):
        out.append(_entry(f"A^{l} cusp", germ([f"x^3+z^{l}*x", "z"], "x,z"), l - 1, "augmentation of x^3 by z^l", ["augmentation"]))
    for l in (2, 3):
        h = multigerm(germ([f"x^3+z^{l}*x", "z"], "x,z"), fold_map(2, 2, source_vars=("x", "z")))
        label = "AUGMENTATION_AND_CONCATENATION" if l == 2 else None
        out.append(_entry(f"A^{l} cusp + fold", h, l, "augmentation and concatenation of x^3", ["augmentation", "aug-concat"], label))
    for l, m in ((2, 2), (3, 2)):
        amf = germ([f"x^3+y^{l}*x+z^{m}*x", "y", "z"], XYZ)
        out.append(_entry(f"A^{m}F_{l}", amf, (l - 1) * (m - 1), "augmentation of the cusp family f_l by z^m", ["augmentation"]))
        out.append(
            _entry(
                f"A^{m}F_{l} + fold",
                multigerm(amf, germ(["x", "y", "z^2"], XYZ)),
                (l - 1) * m,
                "augmentation and concatenation of the cusp family",
                ["augmentation", "aug-concat"],
            )
        )
    af = germ(["x^4+y*x^2+y^2*x+z^2*x", "y", "z"], XYZ)
    out.append(_entry("A(x^4+yx^2+y^2x)", af, 2, "quadratic augmentation of a lips-type germ", ["augmentation"]))
    out.append(
        _entry(
            "A(x^4+yx^2+y^2x) + fold",
            multigerm(af, germ(["x", "y", "z^2"], XYZ)),
            4,
            "augmentation and concatenation of a lips-type germ",
            ["augmentation", "aug-concat"],
        )
    )
    return out


def _monic() -> list[CatalogEntry]:
    """Monic concatenations; codimension equals that of the germ concatenated."""
    out = []
    out.append(
        _entry(
            "monic x^3, k=1",
            multigerm(germ(["x^3+z*x", "z"], "x,z"), germ(["x", "z^2"], "x,z")),
            1,
            "monic concatenation of x^3",
            ["monic"],
        )
    )
    out.append(
        _entry(
            "monic (x^4+yx,y), k=1",
            multigerm(germ(["x^4+y*x+z*x^2", "y", "z"], XYZ), germ(["x", "y", "z^2"], XYZ)),
            1,
            "monic concatenation of the beaks-type germ x^4+yx",
            ["monic"],
        )
    )
    for k, e in ((1, 3), (2, 5)):
        out.append(
            _entry(
                f"monic (x^2,x^{e}), k=0",
                multigerm(germ(["x^2", f"x^{e}+y*x", "y"], "x,y"), germ(["x", "y", "0"], "x,y")),
                k,
                f"immersion concatenation of the plane curve (x^2, x^{e})",
                ["monic"],
            )
        )
    return out


def _cuspidal() -> list[CatalogEntry]:
    cusp = germ(["x", "y", "z^3+y*z"], XYZ)
    out = []
    out.append(
        _entry(
            "A_2A_3 (swallowtail + cuspidal edge)",
            multigerm(germ(["x^4+y*x+z*x^2", "y", "z"], XYZ), cusp),
            3,
            "cuspidal concatenation of x^4, swallowtail unfolding",
            ["cuspidal"],
        )
    )
    out.append(
        _entry(
            "alternate x^4 unfolding + cuspidal edge",
            multigerm(germ(["x^4+y*x^2+y^2*x+z*x", "y", "z"], XYZ), cusp),
            4,
            "cuspidal concatenation of x^4, alternate unfolding",
            ["cuspidal"],
        )
    )
    for l, e in ((1, 1), (2, 2), (3, 2)):
        out.append(
            _entry(
                f"F_{l} + cuspidal edge",
                multigerm(germ([f"x^3+y^{l}*x+z*x", "y", "z"], XYZ), cusp),
                e,
                "cuspidal concatenation of x^3",
                ["cuspidal"],
                "GENERALISED_CONCATENATION" if e == 2 else None,
            )
        )
    out.append(
        _entry(
            "{x^2,x^3}: F_1 + cuspidal edge",
            multigerm(germ(["x^2+y+z", "y", "z"], XYZ), germ(["x^3+x*y", "y", "z"], XYZ), cusp),
            3,
            "cuspidal concatenation of {x^2, x^3}, first unfolding",
            ["cuspidal"],
        )
    )
    out.append(
        _entry(
            "{x^2,x^3}: F_2 + cuspidal edge",
            multigerm(germ(["x^2", "y", "z"], XYZ), germ(["x^3+x*y+z", "y", "z"], XYZ), cusp),
            UNBOUNDED,
            "cuspidal concatenation of {x^2, x^3}, second unfolding",
            ["cuspidal"],
            note="not finitely determined",
        )
    )
    for n in (3, 4):
        F = an_unfolding(n)
        names = F.source_vars
        g = germ(list(names[:-1]) + [f"{names[-1]}^3+{names[-2]}*{names[-1]}"], names)
        out.append(_entry(f"A_{n} + cuspidal edge", multigerm(F, g), n, f"cuspidal concatenation of A_{n - 2}", ["cuspidal"]))
    return out


def _double_fold() -> list[CatalogEntry]:
    F = [germ(["x^2+y+z", "y", "z"], XYZ), germ(["x^2", "y", "z"], XYZ), germ(["x^2-y", "y", "z"], XYZ)]
    g1 = germ(["x", "y", "z^2"], XYZ)
    g2 = germ(["x", "y", "z^2+y"], XYZ)
    Fp = multigerm(germ(["x^2+y", "y"], "x,y"), germ(["x^2", "y"], "x,y"), germ(["x^2-y", "y"], "x,y"))
    return [
        _entry("quintuple point", multigerm(*F, g1, g2), 4, "double fold concatenation of three Morse functions", ["double-fold"]),
        _entry("three folds + fold prism", multigerm(*F, g1), 1, "monic concatenation of three transverse folds", ["double-fold"]),
        _entry("three transverse folds in the plane", Fp, 1, "one-parameter unfolding of {x^2, x^2, x^2}", ["double-fold"]),
    ]


def _special() -> list[CatalogEntry]:
    out = [
        _entry(
            "Morse + A_2 (p=1)",
            multigerm(germ(["x^2"], "x"), germ(["x^3"], "x")),
            2,
            "function bigerm",
            ["special"],
            "PRIMITIVE_MONOGERM_PLUS_MORSE",
        ),
        _entry(
            "{(x^2,x^3),(0,x)}",
            multigerm(germ(["x^2", "x^3"], "x"), germ(["0", "x"], "x")),
            2,
            "cusp curve with a transverse line",
            ["special"],
            "PRIMITIVE_MONOGERM_PLUS_MORSE",
        ),
        _entry(
            "{(x^4+yx,y),(x,y^2+x)}",
            multigerm(germ(["x^4+y*x", "y"], "x,y"), germ(["x", "y^2+x"], "x,y")),
            2,
            "plane bigerm of a beaks-type germ and a fold",
            ["special"],
            "PRIMITIVE_MONOGERM_PLUS_MORSE",
        ),
    ]
    for n in (2, 3):
        names = tuple(f"x{i + 1}" for i in range(n))
        first = f"x1^{n + 2}" + "".join(f"+x{i}*x1^{i - 1}" for i in range(2, n + 1))
        f = germ([first] + list(names[1:]), names)
        g = germ(list(names[:-1]) + [f"x{n}^2+x{n - 1}"], names)
        out.append(
            _entry(
                f"equidimensional primitive + fold, n={n}",
                multigerm(f, g),
                n,
                "primitive codimension-1 germ with a fold",
                ["special"],
                "PRIMITIVE_MONOGERM_PLUS_MORSE" if n == 2 else None,
            )
        )
    out.append(
        _entry(
            "(3,4) primitive + immersion",
            multigerm(germ(["u", "v", "x^3+u*x", "x^4+v*x"], "u,v,x"), germ(["u", "v", "u", "x"], "u,v,x")),
            2,
            "primitive (3,4) germ with an immersion",
            ["special"],
            "SPECIAL_34",
        )
    )
    out.append(
        _entry(
            "non-transverse bigerm, n=2",
            multigerm(germ(["x", "y^2", "x*y"], "x,y"), germ(["x", "x^2", "y"], "x,y")),
            2,
            "cross-cap with a tangent immersion",
            ["special", "nadatrans"],
            "SPECIAL_NADATRANS",
        )
    )
    out.append(
        _entry(
            "non-transverse bigerm, n=4",
            multigerm(
                germ(["u1", "v1", "v2", "y^3+u1*y", "v1*y+v2*y^2"], "u1,v1,v2,y"),
                germ(["u1", "v1", "v2", "u1^2+v2", "y"], "u1,v1,v2,y"),
            ),
            2,
            "primitive (4,5) germ with a tangent immersion",
            ["special", "nadatrans"],
            "SPECIAL_NADATRANS",
        )
    )
    return out


def _stable() -> list[CatalogEntry]:
    return [
        _entry("cross-cap", germ(["x", "y^2", "x*y"], "x,y"), 0, "stable (2,3) germ", ["stable"]),
        _entry("swallowtail", stable_Ak(3, 3), 0, "stable A_3", ["stable"]),
        _entry("two transverse folds", multigerm(germ(["x^2", "y"], "x,y"), germ(["x", "y^2"], "x,y")), 0, "stable bigerm", ["stable"]),
    ]


def paper_catalog() -> list[CatalogEntry]:
    return _table() + _augmentations() + _monic() + _cuspidal() + _double_fold() + _special() + _stable()


__all__ = ["CatalogEntry", "paper_catalog"]
