"""Cohomology of a nerve with coefficients in a finite crossed module.

A crossed cocycle is a pair (h, gamma): edge labels h_ij in the target E
and triangle labels gamma_ijk in Gamma with the twisted relation
    h_ij * h_jk = mu(gamma_ijk) * h_ik.
(The nerves used here have no 3-simplices, so the tetrahedral coherence
condition on gamma is vacuous.)

Two gauge moves generate the equivalence:
  T1 (vertex move, lambda: V -> E):
      h_ij -> lambda_i h_ij lambda_j^{-1},  gamma_ijk -> lambda_i . gamma_ijk
  T2 (edge move, m: edges -> Gamma):
      h_ij -> mu(m_ij) h_ij,
      gamma_ijk -> m_ij * (h_ij . m_jk) * gamma_ijk * m_ik^{-1}

Both moves preserve the twisted relation (the first by equivariance of mu,
the second by the Peiffer identity); enumeration is exhaustive, ordered,
and budget-bounded.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import SpecTooLarge
from .abgroup import FgAbelian
from .fpgroup import abelianization, edge_path_group, simplify
from .groups import FiniteGroup
from .nerve import Nerve, h2_free


@dataclass(frozen=True)
class FiniteCrossedModule:
    """mu: gamma -> target with a target-action on gamma, all by tables."""

    gamma: FiniteGroup
    target: FiniteGroup
    mu: tuple[int, ...]                 # gamma index -> target index
    act: tuple[tuple[int, ...], ...]    # act[e][g] = e . g

    def validate(self) -> None:
        g, e = self.gamma, self.target
        for a in range(g.order):
            for b in range(g.order):
                if self.mu[g.mul(a, b)] != e.mul(self.mu[a], self.mu[b]):
                    raise ValueError("mu is not a homomorphism")
        for x in range(e.order):
            for a in range(g.order):
                for b in range(g.order):
                    if (self.act[x][g.mul(a, b)]
                            != g.mul(self.act[x][a], self.act[x][b])):
                        raise ValueError("the action is not by automorphisms")
        for x in range(e.order):
            for y in range(e.order):
                for a in range(g.order):
                    if (self.act[e.mul(x, y)][a]
                            != self.act[x][self.act[y][a]]):
                        raise ValueError("the action is not an action")
        for x in range(e.order):
            for a in range(g.order):
                if e.conj(x, self.mu[a]) != self.mu[self.act[x][a]]:
                    raise ValueError("mu is not equivariant (axiom 1)")
        for a in range(g.order):
            for b in range(g.order):
                if self.act[self.mu[a]][b] != g.conj(a, b):
                    raise ValueError("Peiffer identity fails (axiom 2)")


def toy_exponent_module(m: int) -> FiniteCrossedModule:
    """Z_m -> 1: trivial target, trivial action."""
    from .groups import cyclic

    gamma = cyclic(m)
    target = cyclic(1)
    spec = FiniteCrossedModule(
        gamma=gamma, target=target,
        mu=(0,) * m, act=(tuple(range(m)),))
    spec.validate()
    return spec


def inclusion_module(gamma: FiniteGroup, target: FiniteGroup,
                     embed: tuple[int, ...]) -> FiniteCrossedModule:
    """A normal subgroup inclusion with the conjugation action."""
    act = tuple(
        tuple(_preimage(embed, target.conj(x, embed[a]))
              for a in range(gamma.order))
        for x in range(target.order))
    spec = FiniteCrossedModule(gamma=gamma, target=target,
                               mu=embed, act=act)
    spec.validate()
    return spec


def _preimage(embed: tuple[int, ...], value: int) -> int:
    return embed.index(value)


@dataclass(frozen=True)
class CrossedH1Report:
    kind: str                    # "enumerated" | "parametric"
    class_count: int | None
    cocycle_count: int | None
    base_description: str | None
    fiber_name: str | None
    budget: int

    def serialize(self) -> dict:
        return {"kind": self.kind,
                "classes": self.class_count,
                "cocycles": self.cocycle_count,
                "base": self.base_description,
                "fiber": self.fiber_name,
                "budget": self.budget}


def crossed_module_h1(nerve: Nerve, spec: FiniteCrossedModule,
                      budget: int = 1_000_000) -> CrossedH1Report:
    """Exhaustive classification of crossed cocycles modulo T1/T2 moves."""
    edges = nerve.edges
    tris = nerve.triangles
    ne, nt = len(edges), len(tris)
    e_ops, g_ops = spec.target, spec.gamma
    state_bound = (e_ops.order ** ne) * (g_ops.order ** nt)
    if state_bound > budget:
        raise SpecTooLarge(
            "crossed-cocycle enumeration exceeds the budget",
            witness={"states": state_bound, "budget": budget})

    eidx = {e: k for k, e in enumerate(edges)}

    def mu_of(gm: int) -> int:
        return spec.mu[gm]

    # -- enumerate all valid (h, gamma) states, deterministically ----------
    states: list[tuple[tuple[int, ...], tuple[int, ...]]] = []

    def tri_ok(h: tuple[int, ...], gm: tuple[int, ...]) -> bool:
        for n, (i, j, k) in enumerate(tris):
            lhs = e_ops.mul(h[eidx[(i, j)]], h[eidx[(j, k)]])
            rhs = e_ops.mul(mu_of(gm[n]), h[eidx[(i, k)]])
            if lhs != rhs:
                return False
        return True

    def walk_h(pos: int, h: list[int]) -> None:
        if pos == ne:
            walk_g(0, tuple(h), [0] * nt)
            return
        for x in range(e_ops.order):
            h[pos] = x
            walk_h(pos + 1, h)
        h[pos] = 0

    def walk_g(pos: int, h: tuple[int, ...], gm: list[int]) -> None:
        if pos == nt:
            if tri_ok(h, tuple(gm)):
                states.append((h, tuple(gm)))
            return
        for x in range(g_ops.order):
            gm[pos] = x
            walk_g(pos + 1, h, gm)
        gm[pos] = 0

    walk_h(0, [0] * ne)
    states.sort()
    state_id = {s: n for n, s in enumerate(states)}

    # -- gauge moves --------------------------------------------------------
    parent = list(range(len(states)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    def t1_move(state, v: int, lam: int):
        h, gm = state
        new_h = list(h)
        for k, (a, b) in enumerate(edges):
            if a == v:
                new_h[k] = e_ops.mul(lam, new_h[k])
            if b == v:
                new_h[k] = e_ops.mul(new_h[k], e_ops.inv(lam))
        new_g = list(gm)
        for n, (i, _j, _k) in enumerate(tris):
            if i == v:
                new_g[n] = spec.act[lam][new_g[n]]
        return (tuple(new_h), tuple(new_g))

    def t2_move(state, eslot: int, m: int):
        h, gm = state
        new_h = list(h)
        new_h[eslot] = e_ops.mul(mu_of(m), new_h[eslot])
        edge = edges[eslot]
        new_g = list(gm)
        for n, (i, j, k) in enumerate(tris):
            gmn = new_g[n]
            if edge == (i, j):
                gmn = g_ops.mul(m, gmn)
            if edge == (j, k):
                pushed = spec.act[h[eidx[(i, j)]]][m]
                gmn = g_ops.mul(pushed, gmn)
            if edge == (i, k):
                gmn = g_ops.mul(gmn, g_ops.inv(m))
            new_g[n] = gmn
        return (tuple(new_h), tuple(new_g))

    for n, st in enumerate(states):
        for v in nerve.vertices:
            for lam in range(e_ops.order):
                union(n, state_id[t1_move(st, v, lam)])
        for eslot in range(ne):
            for m in range(g_ops.order):
                union(n, state_id[t2_move(st, eslot, m)])
    classes = len({find(n) for n in range(len(states))})
    return CrossedH1Report(kind="enumerated", class_count=classes,
                           cocycle_count=len(states),
                           base_description=None, fiber_name=None,
                           budget=budget)


def crossed_module_h1_parametric(nerve: Nerve, cokernel_name: str,
                                 kernel: FgAbelian) -> CrossedH1Report:
    """Two-layer description for the structured abelian case: a base of
    homomorphisms pi_1 -> coker(mu) and an H^2(nerve, ker mu) fiber."""
    fp = simplify(edge_path_group(nerve))
    pi1 = abelianization(fp).name
    if kernel.torsion != ():
        fiber_name = "unsupported kernel"
    elif kernel.free_rank == 0:
        fiber_name = "0"
    else:
        fiber_name = h2_free(nerve, rank=kernel.free_rank).name
    base = f"Hom(pi_1 = {pi1}, {cokernel_name})"
    return CrossedH1Report(kind="parametric", class_count=None,
                           cocycle_count=None,
                           base_description=base, fiber_name=fiber_name,
                           budget=0)
