"""Exact algebra of the action groupoid of a dense subgroup of R^n.

Arrows are pairs (gamma, x): gamma in integer coordinates of the subgroup's
free generators, x an exact point of the ambient group G = R^n.  The arrow
starts at x and ends at rho(gamma) + x.  The automorphism group of the
groupoid is the semidirect product Aut(rho) x| G, acting through psi.

G is abelian and written additively throughout: inverses of points are
negations, and the semidirect formulas are transcribed accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..densegroup.autrho import (AutRhoElement, compose_elements,
                                 identity_element, inverse_element)
from ..densegroup.lattice import EmbeddedLattice, Vector
from ..errors import MixedLattices, NotComposable


@dataclass(frozen=True)
class GroupoidElement:
    """Arrow (gamma, x) from x to rho(gamma) + x."""

    lattice: EmbeddedLattice
    gamma: tuple[int, ...]
    x: Vector

    def source(self) -> Vector:
        return self.x

    def target(self) -> Vector:
        shift = self.lattice.element_embedding(self.gamma)
        return tuple(a + b for a, b in zip(shift, self.x))

    def serialize(self) -> dict:
        return {"gamma": list(self.gamma),
                "x": [c.serialize() for c in self.x]}


@dataclass(frozen=True)
class AutGroupoidElement:
    """Groupoid automorphism (alpha, g) in Aut(rho) x| G."""

    alpha: AutRhoElement
    g: Vector

    @property
    def lattice(self) -> EmbeddedLattice:
        return self.alpha.lattice

    def serialize(self) -> dict:
        return {"alpha": self.alpha.serialize(),
                "g": [c.serialize() for c in self.g]}


def identity_arrow(lat: EmbeddedLattice, x: Vector) -> GroupoidElement:
    return GroupoidElement(lattice=lat, gamma=(0,) * lat.rank, x=x)


def identity_aut(lat: EmbeddedLattice) -> AutGroupoidElement:
    zero = tuple(lat.field.zero() for _ in range(lat.ambient_dim))
    return AutGroupoidElement(alpha=identity_element(lat), g=zero)



def _same_points(a: Vector, b: Vector) -> bool:
    return all((x - y).is_zero() for x, y in zip(a, b))


def compose(e2: GroupoidElement, e1: GroupoidElement) -> GroupoidElement:
    """Arrow composition (gamma2, rho(gamma1)+x)(gamma1, x) = (gamma2+gamma1, x)."""
    if e2.lattice is not e1.lattice:
        raise MixedLattices("arrows live over different lattices")
    if not _same_points(e2.source(), e1.target()):
        raise NotComposable(
            "source of the outer arrow differs from target of the inner arrow",
            witness={"source": [c.serialize() for c in e2.source()],
                     "target": [c.serialize() for c in e1.target()]})
    gamma = tuple(a + b for a, b in zip(e2.gamma, e1.gamma))
    return GroupoidElement(lattice=e1.lattice, gamma=gamma, x=e1.x)


def arrow_inverse(e: GroupoidElement) -> GroupoidElement:
    return GroupoidElement(lattice=e.lattice,
                           gamma=tuple(-c for c in e.gamma), x=e.target())


def aut_compose(p: AutGroupoidElement, q: AutGroupoidElement) -> AutGroupoidElement:
    """(alpha, g)(alpha', g') = (alpha alpha', g + alpha_bar(g'))."""
    if p.lattice is not q.lattice:
        raise MixedLattices("automorphisms live over different lattices")
    alpha = compose_elements(p.alpha, q.alpha)
    moved = p.alpha.apply_ambient(q.g)
    g = tuple(a + b for a, b in zip(p.g, moved))
    return AutGroupoidElement(alpha=alpha, g=g)


def aut_inverse(p: AutGroupoidElement) -> AutGroupoidElement:
    """(alpha, g)^{-1} = (alpha^{-1}, alpha_bar^{-1}(-g))."""
    alpha_inv = inverse_element(p.alpha)
    g = alpha_inv.apply_ambient(tuple(-c for c in p.g))
    return AutGroupoidElement(alpha=alpha_inv, g=g)


def psi_apply(p: AutGroupoidElement, e: GroupoidElement) -> GroupoidElement:
    """psi(alpha, g)(gamma, x) = (alpha(gamma), alpha_bar(x) - g)."""
    if p.lattice is not e.lattice:
        raise MixedLattices("automorphism and arrow live over different lattices")
    gamma = p.alpha.apply_gamma(e.gamma)
    moved = p.alpha.apply_ambient(e.x)
    x = tuple(a - b for a, b in zip(moved, p.g))
    return GroupoidElement(lattice=e.lattice, gamma=gamma, x=x)


def mu(lat: EmbeddedLattice, gamma: tuple[int, ...]) -> AutGroupoidElement:
    """mu(gamma) = (ad(gamma), -rho(gamma)); ad is the identity for abelian G."""
    shift = lat.element_embedding(gamma)
    return AutGroupoidElement(alpha=identity_element(lat),
                              g=tuple(-c for c in shift))


@dataclass(frozen=True)
class NormalityReport:
    holds: bool
    lhs: AutGroupoidElement
    rhs: AutGroupoidElement

    def serialize(self) -> dict:
        return {"holds": self.holds,
                "lhs": self.lhs.serialize(),
                "rhs": self.rhs.serialize()}


def check_mu_normality(p: AutGroupoidElement, gamma: tuple[int, ...]) -> NormalityReport:
    """p mu(gamma) p^{-1} = mu(alpha(gamma)) — conjugation closes on mu's image."""
    lat = p.lattice
    lhs = aut_compose(aut_compose(p, mu(lat, gamma)), aut_inverse(p))
    rhs = mu(lat, p.alpha.apply_gamma(gamma))
    same_alpha = lhs.alpha.t_matrix == rhs.alpha.t_matrix
    same_g = _same_points(lhs.g, rhs.g)
    return NormalityReport(holds=same_alpha and same_g, lhs=lhs, rhs=rhs)


def reconstruct_from_unit_image(p: AutGroupoidElement, x: Vector) -> Vector:
    """phi_0(x) = alpha_bar(x) + phi_0(0): an automorphism of the groupoid is
    determined by alpha and the image of the base point."""
    base = psi_apply(p, identity_arrow(p.lattice, _zero_point(p.lattice))).x
    moved = p.alpha.apply_ambient(x)
    return tuple(a + b for a, b in zip(moved, base))


def _zero_point(lat: EmbeddedLattice) -> Vector:
    return tuple(lat.field.zero() for _ in range(lat.ambient_dim))
