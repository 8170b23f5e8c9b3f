"""Exact jet-algebra computations for map-germs and multigerms.

Ae-codimensions, liftable vector fields, augmentation and concatenation
operations, and the operation labels of codimension-2 multigerms, all over
the rationals.
"""

from .classify import augmentation_test, classify_codim2, has_one_param_stable_unfolding, totally_nontransverse
from .germ import (
    GermError,
    MonoGerm,
    MultiGerm,
    VectorFieldGerm,
    fold_map,
    format_germ_file,
    germ,
    multigerm,
    paper_catalog,
    parse_germ_file,
    read_germ_file,
    stable_Ak,
)
from .invariants import ae_codim, is_stable, ke_codim, milnor, multiplicity, tau_tilde, tjurina
from .jetlin import UNBOUNDED, CodimReport
from .liftables import cuspidal_quotient, double_fold_quotient, dz_quotient, lift_linear_parts, solve_lift
from .operations import (
    aug_concat,
    augment,
    binary_concat,
    cuspidal_concat,
    double_fold_concat,
    generalised_concat,
    monic_concat,
    predicted_codim_aug_concat,
    predicted_codim_augment,
)
from .poly import ParseError, Poly, parse

__version__ = "0.1.0"

__all__ = [
    "Poly", "parse", "ParseError",
    "MonoGerm", "MultiGerm", "VectorFieldGerm", "GermError", "germ", "multigerm", "stable_Ak", "fold_map",
    "parse_germ_file", "format_germ_file", "read_germ_file", "paper_catalog",
    "CodimReport", "UNBOUNDED",
    "ae_codim", "ke_codim", "tjurina", "milnor", "multiplicity", "tau_tilde", "is_stable",
    "solve_lift", "lift_linear_parts", "dz_quotient", "cuspidal_quotient", "double_fold_quotient",
    "augment", "predicted_codim_augment", "monic_concat", "aug_concat", "predicted_codim_aug_concat",
    "binary_concat", "generalised_concat", "cuspidal_concat", "double_fold_concat",
    "totally_nontransverse", "augmentation_test", "has_one_param_stable_unfolding", "classify_codim2",
]
