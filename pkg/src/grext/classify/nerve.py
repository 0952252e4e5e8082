"""Finite nerves of good covers: 2-dimensional simplicial data.

A nerve records the intersection pattern of a finite cover — vertices for
the open sets, edges for pairwise intersections, triangles for triple ones.
Intersections are assumed connected and contractible, so classification
data on the nerve is carried by constant labels (the discrete reduction).

Spanning trees are canonical (breadth-first from the basepoint, neighbors
in sorted order) so every holonomy representative is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..errors import (
    DisconnectedSkeleton,
    MissingEdgeOfTriangle,
    NotSimplicial,
)
from .abgroup import FgAbelian, cokernel, cokernel_mod, tensor_power

Edge = tuple[int, int]
Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class Nerve:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    triangles: tuple[Triangle, ...]
    basepoint: int

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.triangles)

    def serialize(self) -> dict:
        return {"vertices": list(self.vertices),
                "edges": [list(e) for e in self.edges],
                "triangles": [list(t) for t in self.triangles],
                "basepoint": self.basepoint}


def make_nerve(vertices, edges, triangles=(), basepoint=None) -> Nerve:
    verts = tuple(sorted(set(int(v) for v in vertices)))
    if not verts:
        raise NotSimplicial("a nerve needs at least one vertex")
    vset = set(verts)

    canon_edges = set()
    for e in edges:
        pair = tuple(sorted(int(v) for v in e))
        if len(pair) != 2 or pair[0] == pair[1]:
            raise NotSimplicial("edges join two distinct vertices",
                                witness={"edge": list(e)})
        if not set(pair) <= vset:
            raise NotSimplicial("edge endpoint is not a vertex",
                                witness={"edge": list(e)})
        canon_edges.add(pair)

    canon_tris = set()
    for t in triangles:
        tri = tuple(sorted(int(v) for v in t))
        if len(set(tri)) != 3:
            raise NotSimplicial("triangles need three distinct vertices",
                                witness={"triangle": list(t)})
        if not set(tri) <= vset:
            raise NotSimplicial("triangle vertex is not a vertex",
                                witness={"triangle": list(t)})
        for a, b in ((0, 1), (0, 2), (1, 2)):
            if (tri[a], tri[b]) not in canon_edges:
                raise MissingEdgeOfTriangle(
                    "triangle face is not an edge of the nerve",
                    witness={"triangle": list(tri),
                             "missing_edge": [tri[a], tri[b]]})
        canon_tris.add(tri)

    base = verts[0] if basepoint is None else int(basepoint)
    if base not in vset:
        raise NotSimplicial("basepoint is not a vertex",
                            witness={"basepoint": base})

    nerve = Nerve(vertices=verts, edges=tuple(sorted(canon_edges)),
                  triangles=tuple(sorted(canon_tris)), basepoint=base)
    _check_connected(nerve)
    return nerve


def _check_connected(nerve: Nerve) -> None:
    adj = {v: [] for v in nerve.vertices}
    for a, b in nerve.edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {nerve.basepoint}
    queue = deque([nerve.basepoint])
    while queue:
        v = queue.popleft()
        for w in sorted(adj[v]):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if seen != set(nerve.vertices):
        raise DisconnectedSkeleton(
            "the 1-skeleton is not connected",
            witness={"reached": sorted(seen),
                     "missing": sorted(set(nerve.vertices) - seen)})


# ------------------------------------------------------------- spanning tree

@dataclass(frozen=True)
class SpanningTree:
    nerve: Nerve
    parent: dict                     # vertex -> parent vertex (base -> None)
    tree_edges: frozenset[Edge]

    def path_from_base(self, v: int) -> list[int]:
        out = []
        while v is not None:
            out.append(v)
            v = self.parent[v]
        out.reverse()
        return out


def spanning_tree(nerve: Nerve) -> SpanningTree:
    adj = {v: [] for v in nerve.vertices}
    for a, b in nerve.edges:
        adj[a].append(b)
        adj[b].append(a)
    parent = {nerve.basepoint: None}
    tree = set()
    queue = deque([nerve.basepoint])
    while queue:
        v = queue.popleft()
        for w in sorted(adj[v]):
            if w not in parent:
                parent[w] = v
                tree.add(tuple(sorted((v, w))))
                queue.append(w)
    return SpanningTree(nerve=nerve, parent=parent,
                        tree_edges=frozenset(tree))


def non_tree_edges(tree: SpanningTree) -> list[Edge]:
    return [e for e in tree.nerve.edges if e not in tree.tree_edges]


# ------------------------------------------------------------------- presets

def circle(k: int = 3) -> Nerve:
    """Minimal good cover pattern of S^1: a k-cycle, k >= 3."""
    if k < 3:
        raise NotSimplicial("a simplicial circle needs at least 3 vertices")
    edges = [(i, (i + 1) % k) for i in range(k)]
    return make_nerve(range(k), edges)


def sphere_tetrahedron() -> Nerve:
    """Boundary of the tetrahedron: the minimal S^2."""
    verts = range(4)
    edges = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    tris = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    return make_nerve(verts, edges, tris)


def torus_seven() -> Nerve:
    """The 7-vertex triangulation of the torus (complete graph K_7)."""
    tris = []
    for i in range(7):
        tris.append(tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))))
        tris.append(tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))))
    edges = sorted({(a, b) for t in tris
                    for a, b in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2]))})
    return make_nerve(range(7), edges, tris)


PRESETS = {
    "circle": circle,
    "sphere": sphere_tetrahedron,
    "torus": torus_seven,
}


# -------------------------------------------------- simplicial 2-cohomology

def delta1_matrix(nerve: Nerve) -> list[list[int]]:
    """Coboundary C^1 -> C^2 on ordered simplices: (dg)_ijk = g_jk - g_ik + g_ij."""
    index = {e: k for k, e in enumerate(nerve.edges)}
    rows = []
    for i, j, k in nerve.triangles:
        row = [0] * len(nerve.edges)
        row[index[(j, k)]] += 1
        row[index[(i, k)]] -= 1
        row[index[(i, j)]] += 1
        rows.append(row)
    return rows

def h2_free(nerve: Nerve, rank: int = 1) -> FgAbelian:
    """H^2(nerve; Z^rank): cokernel of the integral coboundary (no 3-cells)."""
    d1 = delta1_matrix(nerve)
    t = len(nerve.triangles)
    if t == 0:
        return FgAbelian(torsion=(), free_rank=0)
    cols = [[d1[r][c] for r in range(t)] for c in range(len(nerve.edges))]
    return tensor_power(cokernel(cols, t), rank)


def h2_mod(nerve: Nerve, m: int) -> FgAbelian:
    """H^2(nerve; Z_m), from the integral Smith form of the coboundary."""
    d1 = delta1_matrix(nerve)
    t = len(nerve.triangles)
    if t == 0:
        return FgAbelian(torsion=(), free_rank=0)
    cols = [[d1[r][c] for r in range(t)] for c in range(len(nerve.edges))]
    return cokernel_mod(cols, t, m)
