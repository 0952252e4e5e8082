"""Classification of flat-bundle style extension data over a nerve.

Given a lattice L (fixing the unit group U = structure group of the
extension data) and a finite nerve N, the classes are:

  pointed-iso   homomorphisms pi_1(N) -> U
  iso           the same modulo conjugation in U (equal to pointed-iso
                when U is abelian, which holds for every unit group here)
  equivalence   homomorphisms pi_1(N) -> U modulo inner classes, fibered
                over each base point by an H^2(N, Z^rank) torsor

Counts are exact integers when both sides are finite; infinite answers are
reported parametrically as a descriptor string.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..densegroup.autrho import aut_rho
from ..densegroup.lattice import EmbeddedLattice
from .abgroup import FgAbelian
from .fpgroup import abelianization, edge_path_group, group_name, simplify
from .groups import FiniteGroup, cyclic, direct_product
from .nerve import Nerve, h2_free

MODES = ("pointed-iso", "iso", "equivalence")


@dataclass(frozen=True)
class ClassificationReport:
    mode: str
    unit_group: str
    complete: bool
    pi1_name: str
    count: int | None
    description: str
    base_description: str | None = None
    fiber_name: str | None = None
    flags: dict = field(default_factory=dict)

    def serialize(self) -> dict:
        out = {"mode": self.mode,
               "unit_group": self.unit_group,
               "complete": self.complete,
               "pi1": self.pi1_name,
               "count": self.count,
               "description": self.description}
        if self.base_description is not None:
            out["base"] = self.base_description
        if self.fiber_name is not None:
            out["fiber"] = self.fiber_name
        if self.flags:
            out["flags"] = dict(sorted(self.flags.items()))
        return out


def hom_count_into_units(ab: FgAbelian, unit_name: str) -> tuple[int | None, str]:
    """Count (or describe) Hom(A, U) for A finitely generated abelian and
    U one of the recognized unit-group shapes."""
    if unit_name in ("trivial", "0") or (ab.free_rank == 0 and not ab.torsion):
        return 1, "only the trivial map"
    if unit_name == "Z_2":
        # Hom(Z, Z_2) = 2; Hom(Z_d, Z_2) = 2 if d even else 1
        n = 2 ** ab.free_rank
        for d in ab.torsion:
            n *= 2 if d % 2 == 0 else 1
        return n, f"maps of {ab.name} into Z_2"
    if unit_name == "Z_2 x Z":
        # each free factor contributes the whole (infinite) unit group;
        # each Z_d factor contributes its d-torsion {(eps, 0)}.
        if ab.free_rank > 0:
            if ab.free_rank == 1 and ab.torsion == ():
                desc = "maps of Z into Z_2 x Z ≅ elements of Z_2 x Z"
            else:
                desc = f"maps of {ab.name} into Z_2 x Z"
            return None, desc
        n = 1
        for d in ab.torsion:
            n *= 2 if d % 2 == 0 else 1
        return n, f"maps of {ab.name} into Z_2 x Z (torsion part Z_2)"
    return None, f"maps of {ab.name} into {unit_name}"


def unit_quotient_group(unit_name: str, n: int) -> FiniteGroup:
    """Finite quotient of the unit group, collapsing the infinite factor
    to Z_n.  Used to cross-check parametric counts against brute-force
    cocycle enumeration."""
    if unit_name == "Z_2":
        if n != 1:
            raise ValueError("Z_2 has no infinite factor to collapse")
        return cyclic(2)
    if unit_name == "Z_2 x Z":
        if n == 1:
            return cyclic(2)
        return direct_product(cyclic(2), cyclic(n))
    raise ValueError(f"no finite quotient rule for {unit_name!r}")


def classify_extensions(lat: EmbeddedLattice, nerve: Nerve, mode: str,
                        bound: int = 5) -> ClassificationReport:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    desc = aut_rho(lat, bound)
    unit_name = desc.name
    complete = desc.complete
    flags: dict = {}
    if not complete:
        flags["incomplete_unit_group"] = True
        flags["classified_against"] = "verified subgroup only"

    fp = simplify(edge_path_group(nerve))
    ab = abelianization(fp)
    pi1_name = group_name(fp)

    if mode in ("pointed-iso", "iso"):
        count, description = hom_count_into_units(ab, unit_name)
        if not complete:
            count, description = None, (
                "lower bound only: maps into the verified unit subgroup")
        if mode == "iso":
            # every unit group here is abelian, so conjugation is trivial
            flags["conjugation_trivial"] = True
        return ClassificationReport(
            mode=mode, unit_group=unit_name, complete=complete,
            pi1_name=pi1_name, count=count, description=description,
            flags=flags)

    # equivalence: base Hom(pi_1, Out) with an H^2(N, Z^rank) torsor fiber
    base_count, base_desc = hom_count_into_units(ab, unit_name)
    if not complete:
        base_count, base_desc = None, (
            "lower bound only: maps into the verified unit subgroup")
    fiber = h2_free(nerve, rank=lat.rank)
    if fiber.is_finite and base_count is not None:
        count = base_count * fiber.order
    else:
        count = None
    description = (f"base {base_desc}; each class carries an "
                   f"H^2-torsor of type {fiber.name}")
    return ClassificationReport(
        mode=mode, unit_group=unit_name, complete=complete,
        pi1_name=pi1_name, count=count, description=description,
        base_description=base_desc, fiber_name=fiber.name, flags=flags)
