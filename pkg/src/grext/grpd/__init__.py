"""Exact groupoid algebra: arrows, automorphisms, crossed modules, sequences."""

from .crossedmod import (
    CrossedModuleReport,
    CrossedModuleSpec,
    GroupOps,
    ad_crossed_module,
    crossed_module_verify,
    cyclic_ops,
    finite_crossed_module,
    groupoid_crossed_module,
    kernel_of_exponent_map,
    lattice_gamma_ops,
)
from .ga import (
    GAElement,
    ga_compose,
    ga_equal,
    ga_identity,
    ga_inverse,
    ga_word_eval,
)
from .groupoid import (
    AutGroupoidElement,
    GroupoidElement,
    NormalityReport,
    arrow_inverse,
    aut_compose,
    aut_inverse,
    check_mu_normality,
    compose,
    identity_arrow,
    identity_aut,
    mu,
    psi_apply,
    reconstruct_from_unit_image,
)
from .sequences import SEQUENCE_IDS, SequenceReport, exact_sequence_verify

__all__ = [
    "AutGroupoidElement",
    "CrossedModuleReport",
    "CrossedModuleSpec",
    "GAElement",
    "GroupOps",
    "GroupoidElement",
    "NormalityReport",
    "SEQUENCE_IDS",
    "SequenceReport",
    "ad_crossed_module",
    "arrow_inverse",
    "aut_compose",
    "aut_inverse",
    "check_mu_normality",
    "compose",
    "crossed_module_verify",
    "cyclic_ops",
    "exact_sequence_verify",
    "finite_crossed_module",
    "ga_compose",
    "ga_equal",
    "ga_identity",
    "ga_inverse",
    "ga_word_eval",
    "groupoid_crossed_module",
    "identity_arrow",
    "identity_aut",
    "kernel_of_exponent_map",
    "lattice_gamma_ops",
    "mu",
    "psi_apply",
    "reconstruct_from_unit_image",
]
