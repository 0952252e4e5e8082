"""Finite groups as verified multiplication tables.

Elements are indices 0..n-1 with 0 the identity; the table rows/columns are
indexed the same way.  All constructions order elements deterministically so
enumeration-based classification output is reproducible byte for byte.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its multiplication table."""

    name: str
    elements: tuple[str, ...]         # display labels, index 0 = identity
    table: tuple[tuple[int, ...], ...]  # table[a][b] = a * b

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        row = self.table[a]
        return row.index(0)

    def conj(self, g: int, a: int) -> int:
        """g a g^{-1}."""
        return self.mul(self.mul(g, a), self.inv(g))

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(n) for b in range(n))

    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        n = self.order
        seen = [False] * n
        classes = []
        for a in range(n):
            if seen[a]:
                continue
            orbit = sorted({self.conj(g, a) for g in range(n)})
            for x in orbit:
                seen[x] = True
            classes.append(tuple(orbit))
        return tuple(classes)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    def abelianization_invariants(self) -> tuple[int, ...]:
        """Invariant factors of G/[G,G], from the quotient by the derived
        subgroup (normal closure of commutators, here already normal)."""
        n = self.order
        comm = {self.mul(self.mul(a, b),
                         self.inv(self.mul(b, a)))
                for a in range(n) for b in range(n)}
        derived = _subgroup_closure(self, comm)
        cosets = _coset_table(self, derived)
        quotient = _quotient_group(self, derived, cosets)
        return _abelian_invariants_from_table(quotient)


def verify_group_axioms(g: FiniteGroup) -> None:
    """Raise ValueError unless the table is a group with identity index 0."""
    n = len(g.elements)
    if len(g.table) != n or any(len(r) != n for r in g.table):
        raise ValueError("table shape does not match element count")
    for a in range(n):
        if g.table[0][a] != a or g.table[a][0] != a:
            raise ValueError("index 0 is not an identity")
        if 0 not in g.table[a]:
            raise ValueError(f"element {a} has no inverse")
        if sorted(g.table[a]) != list(range(n)):
            raise ValueError(f"row {a} is not a permutation")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)):
                    raise ValueError(f"associativity fails at {(a, b, c)}")


# ------------------------------------------------------------- constructions

def cyclic(m: int) -> FiniteGroup:
    if m < 1:
        raise ValueError("cyclic group order must be positive")
    name = "trivial" if m == 1 else f"Z_{m}"
    table = tuple(tuple((a + b) % m for b in range(m)) for a in range(m))
    return FiniteGroup(name=name, elements=tuple(str(i) for i in range(m)),
                       table=table)


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    pairs = [(i, j) for i in range(a.order) for j in range(b.order)]
    index = {p: k for k, p in enumerate(pairs)}
    table = tuple(
        tuple(index[(a.mul(p[0], q[0]), b.mul(p[1], q[1]))] for q in pairs)
        for p in pairs)
    labels = tuple(f"({a.elements[p[0]]},{b.elements[p[1]]})" for p in pairs)
    return FiniteGroup(name=f"{a.name} x {b.name}", elements=labels,
                       table=table)


def klein_four() -> FiniteGroup:
    return direct_product(cyclic(2), cyclic(2))


def _perm_group(name: str, perms: list[tuple[int, ...]],
                labels: list[str]) -> FiniteGroup:
    index = {p: k for k, p in enumerate(perms)}

    def comp(p, q):  # p after q
        return tuple(p[q[i]] for i in range(len(q)))

    table = tuple(tuple(index[comp(p, q)] for q in perms) for p in perms)
    return FiniteGroup(name=name, elements=tuple(labels), table=table)


def symmetric3() -> FiniteGroup:
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1),
             (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    labels = ["e", "(123)", "(132)", "(12)", "(23)", "(13)"]
    return _perm_group("S_3", perms, labels)


def dihedral4() -> FiniteGroup:
    """Symmetries of the square: r of order 4, s a reflection, s r s = r^3."""
    rot = (1, 2, 3, 0)
    flip = (1, 0, 3, 2)

    def comp(p, q):
        return tuple(p[q[i]] for i in range(4))

    perms, labels = [], []
    r_pow = (0, 1, 2, 3)
    for k in range(4):
        perms.append(r_pow)
        labels.append("e" if k == 0 else f"r{k}" if k > 1 else "r")
        r_pow = comp(rot, r_pow)
    r_pow = (0, 1, 2, 3)
    for k in range(4):
        perms.append(comp(flip, r_pow))
        labels.append("s" if k == 0 else f"sr{k}" if k > 1 else "sr")
        r_pow = comp(rot, r_pow)
    return _perm_group("D_4", perms, labels)


def quaternion8() -> FiniteGroup:
    """The unit quaternions {±1, ±i, ±j, ±k}."""
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    # encode q = (sign, axis) with axis in {1, i, j, k} = {0, 1, 2, 3}
    def decode(n):
        return (1 if n % 2 == 0 else -1, n // 2)

    def encode(sign, axis):
        return axis * 2 + (0 if sign == 1 else 1)

    axis_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
        (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
    }
    table = []
    for a in range(8):
        sa, xa = decode(a)
        row = []
        for b in range(8):
            sb, xb = decode(b)
            sm, xm = axis_mul[(xa, xb)]
            row.append(encode(sa * sb * sm, xm))
        table.append(tuple(row))
    return FiniteGroup(name="Q_8", elements=tuple(labels), table=tuple(table))


def standard_groups_up_to_8() -> list[FiniteGroup]:
    """The deterministic corpus used by the classification cross-checks."""
    return [cyclic(2), cyclic(3), cyclic(4), klein_four(), cyclic(5),
            cyclic(6), symmetric3(), cyclic(7), cyclic(8),
            direct_product(cyclic(4), cyclic(2)),
            direct_product(cyclic(2), klein_four()),
            dihedral4(), quaternion8()]


# ------------------------------------------------------------------ internal

def _subgroup_closure(g: FiniteGroup, seed) -> frozenset[int]:
    out = {0} | set(seed)
    frontier = list(out)
    while frontier:
        a = frontier.pop()
        for b in list(out):
            for c in (g.mul(a, b), g.mul(b, a), g.inv(a)):
                if c not in out:
                    out.add(c)
                    frontier.append(c)
    return frozenset(out)


def _coset_table(g: FiniteGroup, sub: frozenset[int]) -> list[frozenset[int]]:
    seen, cosets = set(), []
    for a in range(g.order):
        cs = frozenset(g.mul(a, s) for s in sub)
        if cs not in seen:
            seen.add(cs)
            cosets.append(cs)
    return cosets


def _quotient_group(g: FiniteGroup, sub: frozenset[int],
                    cosets: list[frozenset[int]]) -> FiniteGroup:
    reps = [min(c) for c in cosets]
    where = {}
    for k, c in enumerate(cosets):
        for x in c:
            where[x] = k
    table = tuple(tuple(where[g.mul(ra, rb)] for rb in reps) for ra in reps)
    labels = tuple(g.elements[r] for r in reps)
    return FiniteGroup(name=f"{g.name}/[,]", elements=labels, table=table)


def _abelian_invariants_from_table(g: FiniteGroup) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of a finite abelian table group."""
    n = g.order
    if n == 1:
        return ()
    remaining = g
    factors = []
    while remaining.order > 1:
        d = max(remaining.element_order(a) for a in range(remaining.order))
        factors.append(d)
        gen = max(range(remaining.order), key=remaining.element_order)
        sub = _subgroup_closure(remaining, {gen})
        cosets = _coset_table(remaining, sub)
        remaining = _quotient_group(remaining, sub, cosets)
    factors.reverse()  # ascending divisibility d1 | d2 | ...
    return tuple(factors)


def all_elements(g: FiniteGroup) -> range:
    return range(g.order)


def hom_is_valid(g: FiniteGroup, images: dict[int, int],
                 target: FiniteGroup) -> bool:
    """Check a total map element->element is a homomorphism."""
    return all(target.mul(images[a], images[b]) == images[g.mul(a, b)]
               for a, b in itertools.product(range(g.order), repeat=2))
