"""Nonabelian Čech 1-cocycles on nerves, coboundaries, and holonomy.

A cocycle assigns a coefficient-group element to each ordered edge (i, j),
i < j, with phi_ji = phi_ij^{-1} implied and the triangle relation
phi_ij * phi_jk = phi_ik enforced.  A coboundary by a vertex cochain f acts
as phi_ij -> f_i * phi_ij * f_j^{-1}.  Holonomy reads off the image of each
spanning-tree-complement generator of the edge-path group; two cocycles are
pointed-cohomologous iff their holonomies are equal, and freely cohomologous
iff the holonomies are simultaneously conjugate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable

from ..errors import RelatorNotKilled, UndecidableCoefficients, NotSimplicial
from .abgroup import FgAbelian
from .fpgroup import (
    edge_path_group,
    hom_conjugacy_orbits,
    hom_images,
    simplify,
)
from .groups import FiniteGroup
from .nerve import Edge, Nerve, non_tree_edges, spanning_tree


# ------------------------------------------------------- coefficient groups

@dataclass(frozen=True)
class CoeffOps:
    """Group operations for cocycle labels.

    kind: "finite-table" | "fg-abelian" | "autrho-structured".
    ``elements`` enumerates the group when finite (None otherwise);
    ``conjugate`` decides simultaneous conjugacy of two image tuples, or is
    None when no decision procedure exists for this coefficient group.
    """

    kind: str
    name: str
    identity: Any
    mul: Callable[[Any, Any], Any]
    inv: Callable[[Any], Any]
    eq: Callable[[Any, Any], bool]
    elements: tuple | None
    abelian: bool
    conjugate: Callable[[tuple, tuple], bool] | None


def coeff_table(group: FiniteGroup) -> CoeffOps:
    def conjugate(h1: tuple, h2: tuple) -> bool:
        return any(all(group.conj(g, a) == b for a, b in zip(h1, h2))
                   for g in range(group.order))

    return CoeffOps(
        kind="finite-table", name=group.name, identity=0,
        mul=group.mul, inv=group.inv, eq=lambda a, b: a == b,
        elements=tuple(range(group.order)),
        abelian=group.is_abelian(),
        conjugate=conjugate)


def coeff_fg_abelian(shape: FgAbelian) -> CoeffOps:
    """Elements are integer tuples (torsion coordinates, then free ones),
    normalized modulo the invariant factors — the SNF normal form."""
    torsion = shape.torsion
    width = len(torsion) + shape.free_rank

    def norm(a):
        return tuple((x % d) if i < len(torsion) else x
                     for i, (x, d) in enumerate(
                         zip(a, list(torsion) + [0] * shape.free_rank)))

    def mul(a, b):
        return norm(tuple(x + y for x, y in zip(a, b)))

    def inv(a):
        return norm(tuple(-x for x in a))

    elements = None
    if shape.is_finite:
        ranges = [range(d) for d in torsion]
        elements = tuple(itertools.product(*ranges)) if width else ((),)

    def conjugate(h1, h2):
        return all(a == b for a, b in zip(h1, h2))

    return CoeffOps(
        kind="fg-abelian", name=shape.name, identity=(0,) * width,
        mul=mul, inv=inv, eq=lambda a, b: norm(a) == norm(b),
        elements=elements, abelian=True, conjugate=conjugate)


def coeff_autrho(name: str) -> CoeffOps:
    """Structured Aut(rho) coefficients.  "Z_2 x Z" elements are pairs
    (eps, k) = eps * u^k with eps in {1, -1}; the group is abelian, so
    conjugacy is equality.  Other structured names carry no decision
    procedure and their conjugacy queries raise UndecidableCoefficients."""
    if name == "Z_2 x Z":
        def mul(a, b):
            return (a[0] * b[0], a[1] + b[1])

        return CoeffOps(
            kind="autrho-structured", name=name, identity=(1, 0),
            mul=mul, inv=lambda a: (a[0], -a[1]), eq=lambda a, b: a == b,
            elements=None, abelian=True,
            conjugate=lambda h1, h2: h1 == h2)
    if name == "Z_2":
        return CoeffOps(
            kind="autrho-structured", name=name, identity=1,
            mul=lambda a, b: a * b, inv=lambda a: a,
            eq=lambda a, b: a == b, elements=(1, -1), abelian=True,
            conjugate=lambda h1, h2: h1 == h2)
    return CoeffOps(
        kind="autrho-structured", name=name, identity=None,
        mul=_undecidable, inv=_undecidable, eq=_undecidable,
        elements=None, abelian=False, conjugate=None)


def _undecidable(*_args):
    raise UndecidableCoefficients(
        "no decision procedure for this structured coefficient group")


# ------------------------------------------------------------------ cocycles

@dataclass(frozen=True)
class Cocycle:
    nerve: Nerve
    coeff: CoeffOps
    labels: tuple                 # one element per nerve.edges entry, in order

    def label(self, a: int, b: int):
        if a == b:
            return self.coeff.identity
        if a < b:
            return self.labels[self._index(a, b)]
        return self.coeff.inv(self.labels[self._index(b, a)])

    def _index(self, a: int, b: int) -> int:
        return self.nerve.edges.index((a, b))


def make_cocycle(nerve: Nerve, coeff: CoeffOps, labels: dict) -> Cocycle:
    """Build a cocycle from a {(i, j): element} mapping (keys in any order;
    a key (j, i) with j > i stores the inverse on the canonical edge)."""
    store = {}
    for (a, b), val in labels.items():
        key = (a, b) if a < b else (b, a)
        if key not in nerve.edges:
            raise NotSimplicial("label on a non-edge", witness={"edge": [a, b]})
        store[key] = val if a < b else coeff.inv(val)
    missing = [e for e in nerve.edges if e not in store]
    if missing:
        raise NotSimplicial("labels must cover every edge",
                            witness={"missing": [list(e) for e in missing]})
    return Cocycle(nerve=nerve, coeff=coeff,
                   labels=tuple(store[e] for e in nerve.edges))


@dataclass(frozen=True)
class CocycleReport:
    ok: bool
    failures: tuple


def check_cocycle(c: Cocycle) -> CocycleReport:
    fails = []
    for i, j, k in c.nerve.triangles:
        lhs = c.coeff.mul(c.label(i, j), c.label(j, k))
        if not c.coeff.eq(lhs, c.label(i, k)):
            fails.append({"triangle": [i, j, k]})
    return CocycleReport(ok=not fails, failures=tuple(fails))


def apply_coboundary(c: Cocycle, chain0: dict) -> Cocycle:
    """phi_ij -> f_i * phi_ij * f_j^{-1}; vertices missing from chain0 use
    the identity."""
    def f(v):
        return chain0.get(v, c.coeff.identity)

    labels = tuple(
        c.coeff.mul(c.coeff.mul(f(i), lab), c.coeff.inv(f(j)))
        for (i, j), lab in zip(c.nerve.edges, c.labels))
    out = Cocycle(nerve=c.nerve, coeff=c.coeff, labels=labels)
    rep = check_cocycle(out)
    if not rep.ok:
        raise AssertionError("coboundary broke the cocycle condition")
    return out


# ------------------------------------------------------------------ holonomy

@dataclass(frozen=True)
class Holonomy:
    generators: tuple[Edge, ...]
    images: tuple


def holonomy(c: Cocycle) -> Holonomy:
    rep = check_cocycle(c)
    if not rep.ok:
        raise RelatorNotKilled(
            "holonomy of a non-cocycle is undefined",
            witness={"failures": list(rep.failures)})
    tree = spanning_tree(c.nerve)
    gens = non_tree_edges(tree)

    def product_along(path: list[int]):
        out = c.coeff.identity
        for a, b in zip(path, path[1:]):
            out = c.coeff.mul(out, c.label(a, b))
        return out

    images = []
    for (i, j) in gens:
        to_i = product_along(tree.path_from_base(i))
        back = c.coeff.inv(product_along(tree.path_from_base(j)))
        images.append(c.coeff.mul(c.coeff.mul(to_i, c.label(i, j)), back))
    return Holonomy(generators=tuple(gens), images=tuple(images))


def cohomologous(c1: Cocycle, c2: Cocycle, pointed: bool) -> bool:
    if c1.nerve is not c2.nerve and c1.nerve != c2.nerve:
        raise ValueError("cocycles live on different nerves")
    h1 = holonomy(c1).images
    h2 = holonomy(c2).images
    if pointed:
        return all(c1.coeff.eq(a, b) for a, b in zip(h1, h2))
    if c1.coeff.conjugate is None:
        raise UndecidableCoefficients(
            "free-mode comparison needs a conjugacy decision procedure",
            witness={"coefficients": c1.coeff.name})
    return c1.coeff.conjugate(h1, h2)


# ------------------------------------------------------------------ pullback

def pullback_cocycle(vertex_map: dict, domain: Nerve, c: Cocycle) -> Cocycle:
    """Pull back along a simplicial map domain -> c.nerve given on vertices.

    Collapsed edges receive the identity label; a domain simplex whose image
    is not a simplex of the target makes the map non-simplicial.
    """
    for v in domain.vertices:
        if v not in vertex_map:
            raise NotSimplicial("vertex map is not total",
                                witness={"vertex": v})
        if vertex_map[v] not in c.nerve.vertices:
            raise NotSimplicial("image vertex is missing from the target",
                                witness={"vertex": v})
    for (a, b) in domain.edges:
        fa, fb = vertex_map[a], vertex_map[b]
        if fa != fb and tuple(sorted((fa, fb))) not in c.nerve.edges:
            raise NotSimplicial("edge image is not a simplex",
                                witness={"edge": [a, b]})
    for (a, b, cc) in domain.triangles:
        img = {vertex_map[a], vertex_map[b], vertex_map[cc]}
        if len(img) == 3 and tuple(sorted(img)) not in c.nerve.triangles:
            raise NotSimplicial("triangle image is not a simplex",
                                witness={"triangle": [a, b, cc]})
    labels = {}
    for (a, b) in domain.edges:
        fa, fb = vertex_map[a], vertex_map[b]
        labels[(a, b)] = c.coeff.identity if fa == fb else c.label(fa, fb)
    out = make_cocycle(domain, c.coeff, labels)
    rep = check_cocycle(out)
    if not rep.ok:
        raise AssertionError("pullback broke the cocycle condition")
    return out


# ------------------------------------------------- enumeration and counting

def enumerate_cocycles(nerve: Nerve, coeff: CoeffOps,
                       budget: int = 1_000_000) -> list[Cocycle]:
    """All cocycles over a finite coefficient group, deterministically.

    Edges are assigned in canonical order; an edge that completes a triangle
    is forced by the triangle relation instead of searched, so the state
    count is |G|^(free edges).
    """
    from ..errors import SpecTooLarge

    if coeff.elements is None:
        raise UndecidableCoefficients(
            "cocycle enumeration needs a finite coefficient group")
    edges = nerve.edges
    index = {e: k for k, e in enumerate(edges)}
    tri_edges = [(index[(i, j)], index[(i, k)], index[(j, k)])
                 for (i, j, k) in nerve.triangles]

    # Greedy assignment order: an edge whose triangle already has its other
    # two edges placed is forced by the relation; otherwise the least
    # unplaced edge opens a new free choice.
    placed: set[int] = set()
    order: list[tuple[int, tuple[int, int, int] | None]] = []
    while len(placed) < len(edges):
        pick = None
        for tri in tri_edges:
            missing = [e for e in tri if e not in placed]
            if len(missing) == 1:
                cand = missing[0]
                if pick is None or cand < pick[0]:
                    pick = (cand, tri)
        if pick is None:
            e = min(set(range(len(edges))) - placed)
            pick = (e, None)
        order.append(pick)
        placed.add(pick[0])
    # a triangle is verified as soon as its last edge is placed, unless it
    # is the relation that forced that edge
    position = {e: n for n, (e, _) in enumerate(order)}
    checking: dict[int, list[tuple[int, int, int]]] = {
        e: [] for e, _ in order}
    for tri in tri_edges:
        last = max(tri, key=position.__getitem__)
        forced_by = order[position[last]][1]
        if forced_by != tri:
            checking[last].append(tri)

    free_count = sum(1 for _, tri in order if tri is None)
    states = len(coeff.elements) ** free_count
    if states > budget:
        raise SpecTooLarge(
            "cocycle enumeration exceeds the configured budget",
            witness={"states": states, "budget": budget})

    out: list[Cocycle] = []
    labels: list = [None] * len(edges)
    mul, inv, eq = coeff.mul, coeff.inv, coeff.eq

    def forced_value(tri: tuple[int, int, int], e: int):
        eij, eik, ejk = tri
        if e == ejk:   # phi_jk = phi_ij^{-1} phi_ik
            return mul(inv(labels[eij]), labels[eik])
        if e == eik:   # phi_ik = phi_ij phi_jk
            return mul(labels[eij], labels[ejk])
        # phi_ij = phi_ik phi_jk^{-1}
        return mul(labels[eik], inv(labels[ejk]))

    def consistent(e: int) -> bool:
        for (eij, eik, ejk) in checking[e]:
            if not eq(mul(labels[eij], labels[ejk]), labels[eik]):
                return False
        return True

    def walk(n: int) -> None:
        if n == len(order):
            out.append(Cocycle(nerve=nerve, coeff=coeff,
                               labels=tuple(labels)))
            return
        e, tri = order[n]
        if tri is not None:
            labels[e] = forced_value(tri, e)
            if consistent(e):
                walk(n + 1)
            labels[e] = None
            return
        for g in coeff.elements:
            labels[e] = g
            if consistent(e):
                walk(n + 1)
        labels[e] = None

    walk(0)
    out.sort(key=lambda c: c.labels)
    return out


def orbit_class_count(nerve: Nerve, coeff: CoeffOps, pointed: bool,
                      budget: int = 1_000_000) -> int:
    """Brute-force count of cocycles modulo coboundaries: enumerate every
    cocycle, then merge along single-vertex coboundary moves (all vertices
    in free mode; every vertex except the basepoint in pointed mode)."""
    cocycles = enumerate_cocycles(nerve, coeff, budget)
    state_of = {c.labels: n for n, c in enumerate(cocycles)}
    parent = list(range(len(cocycles)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    movable = [v for v in nerve.vertices
               if not (pointed and v == nerve.basepoint)]
    # incident edge slots per vertex, so a single-vertex move only touches
    # the labels it actually changes
    left = {v: [] for v in nerve.vertices}
    right = {v: [] for v in nerve.vertices}
    for k, (i, j) in enumerate(nerve.edges):
        left[i].append(k)
        right[j].append(k)
    mul, inv = coeff.mul, coeff.inv
    moves = [(v, g, inv(g)) for v in movable for g in coeff.elements]
    for n, c in enumerate(cocycles):
        base = c.labels
        for v, g, ginv in moves:
            moved = list(base)
            for e in left[v]:
                moved[e] = mul(g, moved[e])
            for e in right[v]:
                moved[e] = mul(moved[e], ginv)
            union(n, state_of[tuple(moved)])
    return len({find(n) for n in range(len(cocycles))})


def holonomy_class_count(nerve: Nerve, group: FiniteGroup,
                         pointed: bool) -> int:
    """Classification count through the edge-path group: pointed classes are
    homomorphisms pi_1 -> G; free classes are their conjugacy orbits."""
    fp = simplify(edge_path_group(nerve))
    homs = hom_images(fp, group)
    if pointed:
        return len(homs)
    return len(hom_conjugacy_orbits(homs, group))
