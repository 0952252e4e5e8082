"""Exact arithmetic substrate: polynomials, number fields, integer matrices,
and Pell/unit machinery.  No floating point anywhere."""

from .field import FieldElement, NumberField
from .pell import OrderUnit, PellSolution, fundamental_unit_disc, pell_fundamental

__all__ = [
    "FieldElement",
    "NumberField",
    "OrderUnit",
    "PellSolution",
    "fundamental_unit_disc",
    "pell_fundamental",
]
