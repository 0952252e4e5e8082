"""Finitely generated subgroups of R^n with exact density and symmetry data."""

from .autrho import (
    AutRhoElement,
    GroupDescriptor,
    OutRhoReport,
    aut_rho,
    aut_rho_unit_data,
    check_autrho,
    extension_from_t,
    is_automorphism,
    malcev_lift,
    membership,
    out_rho,
    power_element,
    product_aut,
    relation_space_preserved,
)
from .carriere import CarriereReport, carriere_family
from .lattice import EmbeddedLattice, make_lattice
from .orders import (
    MultiplierRing,
    UnitGroup,
    is_unit_of,
    multiplier_ring,
    unit_group,
)

__all__ = [
    "AutRhoElement",
    "CarriereReport",
    "EmbeddedLattice",
    "GroupDescriptor",
    "MultiplierRing",
    "OutRhoReport",
    "UnitGroup",
    "aut_rho",
    "aut_rho_unit_data",
    "carriere_family",
    "check_autrho",
    "extension_from_t",
    "is_automorphism",
    "is_unit_of",
    "make_lattice",
    "malcev_lift",
    "membership",
    "multiplier_ring",
    "out_rho",
    "power_element",
    "product_aut",
    "relation_space_preserved",
    "unit_group",
]
