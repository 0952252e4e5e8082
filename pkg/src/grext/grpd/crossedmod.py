"""Crossed modules: a homomorphism mu: Gamma -> E with an E-action on Gamma.

The two defining axioms are
  (1)  e mu(gamma) e^{-1} = mu(e . gamma)          (equivariance of mu)
  (2)  mu(gamma1) . gamma2 = gamma1 gamma2 gamma1^{-1}   (Peiffer identity)

The verifier is generic over a small group-operations protocol so the same
code runs the finite toy modules, the ad-module of a lattice, and the
groupoid-automorphism module Gamma -> Aut(rho) x| G.  Where the target is
described by an abelian exponent matrix, the kernel/cokernel data of
  1 -> ker(mu) -> Gamma -> E -> coker(mu) -> 1
is computed by Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from ..densegroup.autrho import (AutRhoElement, compose_elements,
                                 identity_element, inverse_element)
from ..densegroup.lattice import EmbeddedLattice
from ..exactnum import intmat
from . import groupoid as gpd


@dataclass(frozen=True)
class GroupOps:
    """Minimal group protocol: identity, composition, inverse, equality,
    and a seeded sampler.  ``name`` is a symbolic label for reports."""

    name: str
    identity: Any
    compose: Callable[[Any, Any], Any]
    inverse: Callable[[Any], Any]
    equal: Callable[[Any, Any], bool]
    sample: Callable[[Any], Any]          # rng -> element


@dataclass(frozen=True)
class CrossedModuleSpec:
    gamma: GroupOps
    target: GroupOps
    mu: Callable[[Any], Any]
    act: Callable[[Any, Any], Any]        # (e, gamma) -> gamma
    kernel_name: str | None = None        # symbolic, when known exactly
    cokernel_name: str | None = None


@dataclass(frozen=True)
class CrossedModuleReport:
    axiom1_checked: int
    axiom2_checked: int
    axiom1_failures: list
    axiom2_failures: list
    homomorphism_failures: list
    kernel_name: str | None
    cokernel_name: str | None
    sequence: str

    @property
    def holds(self) -> bool:
        return not (self.axiom1_failures or self.axiom2_failures
                    or self.homomorphism_failures)

    def serialize(self) -> dict:
        return {
            "holds": self.holds,
            "axiom1_checked": self.axiom1_checked,
            "axiom2_checked": self.axiom2_checked,
            "failures": {
                "axiom1": len(self.axiom1_failures),
                "axiom2": len(self.axiom2_failures),
                "homomorphism": len(self.homomorphism_failures),
            },
            "kernel": self.kernel_name,
            "cokernel": self.cokernel_name,
            "sequence": self.sequence,
        }


def crossed_module_verify(spec: CrossedModuleSpec, samples: int,
                          rng) -> CrossedModuleReport:
    """Check both axioms and the homomorphism law of mu on seeded samples."""
    ax1_fail, ax2_fail, hom_fail = [], [], []
    for _ in range(samples):
        g1 = spec.gamma.sample(rng)
        g2 = spec.gamma.sample(rng)
        e = spec.target.sample(rng)
        # mu is a homomorphism
        lhs = spec.mu(spec.gamma.compose(g1, g2))
        rhs = spec.target.compose(spec.mu(g1), spec.mu(g2))
        if not spec.target.equal(lhs, rhs):
            hom_fail.append((g1, g2))
        # axiom 1: e mu(g) e^{-1} = mu(e.g)
        conj = spec.target.compose(
            spec.target.compose(e, spec.mu(g1)), spec.target.inverse(e))
        if not spec.target.equal(conj, spec.mu(spec.act(e, g1))):
            ax1_fail.append((e, g1))
        # axiom 2: mu(g1).g2 = g1 g2 g1^{-1}
        acted = spec.act(spec.mu(g1), g2)
        conj_g = spec.gamma.compose(
            spec.gamma.compose(g1, g2), spec.gamma.inverse(g1))
        if not spec.gamma.equal(acted, conj_g):
            ax2_fail.append((g1, g2))
    seq = (f"1 -> ker(mu) -> {spec.gamma.name} -> {spec.target.name}"
           " -> coker(mu) -> 1")
    return CrossedModuleReport(
        axiom1_checked=samples, axiom2_checked=samples,
        axiom1_failures=ax1_fail, axiom2_failures=ax2_fail,
        homomorphism_failures=hom_fail,
        kernel_name=spec.kernel_name, cokernel_name=spec.cokernel_name,
        sequence=seq)


# ------------------------------------------------------- concrete builders

def lattice_gamma_ops(lat: EmbeddedLattice, coord_range: int = 9) -> GroupOps:
    n = lat.rank
    return GroupOps(
        name=f"Z^{n}",
        identity=(0,) * n,
        compose=lambda a, b: tuple(x + y for x, y in zip(a, b)),
        inverse=lambda a: tuple(-x for x in a),
        equal=lambda a, b: a == b,
        sample=lambda rng: tuple(rng.randint(-coord_range, coord_range)
                                 for _ in range(n)))


def ad_crossed_module(lat: EmbeddedLattice) -> CrossedModuleSpec:
    """mu: Gamma -> Aut(rho) by conjugation; trivial for abelian Gamma, so
    the kernel is all of Gamma and both axioms degenerate to identities."""
    from ..densegroup.autrho import aut_rho

    desc = aut_rho(lat)
    identity_elt = identity_element(lat)
    pool: list[AutRhoElement] = [identity_elt]
    for g in desc.generators:
        pool.append(g)
        pool.append(inverse_element(g))

    target = GroupOps(
        name=desc.name,
        identity=identity_elt,
        compose=compose_elements,
        inverse=inverse_element,
        equal=lambda a, b: a.t_matrix == b.t_matrix,
        sample=lambda rng: _random_word(pool, compose_elements, identity_elt, rng))
    return CrossedModuleSpec(
        gamma=lattice_gamma_ops(lat),
        target=target,
        mu=lambda gamma: identity_elt,
        act=lambda e, gamma: e.apply_gamma(gamma),
        kernel_name=f"Z^{lat.rank}",
        cokernel_name=desc.name)


def groupoid_crossed_module(lat: EmbeddedLattice,
                            coord_range: int = 9) -> CrossedModuleSpec:
    """mu: Gamma -> Aut(Gamma x| G), gamma -> (ad(gamma), -rho(gamma)),
    with Aut(rho) x| G acting on Gamma through its Aut(rho) part."""
    from ..densegroup.autrho import aut_rho

    desc = aut_rho(lat)
    ident = gpd.identity_aut(lat)
    ext_pool = [g for g in desc.generators]

    def sample_target(rng):
        alpha = ext_pool[rng.randrange(len(ext_pool))]
        k = rng.randint(0, 2)
        elt = gpd.AutGroupoidElement(alpha=alpha, g=_rand_point(lat, rng, coord_range))
        for _ in range(k):
            elt = gpd.aut_compose(elt, gpd.AutGroupoidElement(
                alpha=ext_pool[rng.randrange(len(ext_pool))],
                g=_rand_point(lat, rng, coord_range)))
        return elt

    target = GroupOps(
        name="Aut(rho) x| G",
        identity=ident,
        compose=gpd.aut_compose,
        inverse=gpd.aut_inverse,
        equal=_aut_groupoid_equal,
        sample=sample_target)
    return CrossedModuleSpec(
        gamma=lattice_gamma_ops(lat, coord_range),
        target=target,
        mu=lambda gamma: gpd.mu(lat, gamma),
        act=lambda e, gamma: e.alpha.apply_gamma(gamma),
        kernel_name="0",
        cokernel_name="Out(Gamma x| G) [symbolic]")


def finite_crossed_module(gamma: GroupOps, target: GroupOps,
                          mu: Callable, act: Callable,
                          kernel_name: str | None = None,
                          cokernel_name: str | None = None) -> CrossedModuleSpec:
    return CrossedModuleSpec(gamma=gamma, target=target, mu=mu, act=act,
                             kernel_name=kernel_name,
                             cokernel_name=cokernel_name)


def cyclic_ops(m: int, name: str | None = None) -> GroupOps:
    return GroupOps(
        name=name or (f"Z_{m}" if m > 1 else "trivial"),
        identity=0,
        compose=lambda a, b: (a + b) % m,
        inverse=lambda a: (-a) % m,
        equal=lambda a, b: a == b,
        sample=lambda rng: rng.randrange(m))


def kernel_of_exponent_map(mu_matrix: list[list[int]], orders: list[int]) -> str:
    """Canonical name of the kernel of Z^n -> prod_i Z_{orders[i]} given by
    an integer exponent matrix (order 0 means a free Z factor).

    x is in the kernel iff each row congruence (mu x)_i = 0 mod orders[i]
    holds; augmenting with columns orders[i] * e_i turns this into an exact
    kernel, whose projection back to the x coordinates is the answer.
    The kernel of a map from Z^n is free, so a rank suffices for the name.
    """
    k = len(mu_matrix)
    n = len(mu_matrix[0]) if mu_matrix else 0
    if k == 0:
        return "0" if n == 0 else ("Z" if n == 1 else f"Z^{n}")
    aug = [list(row) for row in mu_matrix]
    for i, o in enumerate(orders):
        if o:
            for j, row in enumerate(aug):
                row.append(o if j == i else 0)
    ker = intmat.kernel_basis(aug)
    xs = [list(v[:n]) for v in ker]
    r = intmat.rank(xs) if xs else 0
    if r == 0:
        return "0"
    return "Z" if r == 1 else f"Z^{r}"


# ------------------------------------------------------------------ helpers



def _random_word(pool, compose, identity, rng):
    out = identity
    for _ in range(rng.randint(0, 3)):
        out = compose(out, pool[rng.randrange(len(pool))])
    return out


def _rand_point(lat: EmbeddedLattice, rng, coord_range: int):
    from fractions import Fraction

    def rand_frac():
        num = rng.randint(-coord_range, coord_range)
        den = rng.randint(1, 5)
        return Fraction(num, den)

    F = lat.field
    out = []
    for _ in range(lat.ambient_dim):
        coeffs = tuple(rand_frac() for _ in range(F.degree))
        out.append(F.element(coeffs))
    return tuple(out)


def _aut_groupoid_equal(p, q) -> bool:
    if p.alpha.t_matrix != q.alpha.t_matrix:
        return False
    return all((a - b).is_zero() for a, b in zip(p.g, q.g))
