"""Symbolic homotopy groups and Postnikov data for extension spaces.

The space X classified here sits in a fibration over an aspherical stage:
pi_1(X) is reported as the outer unit-class group, pi_2(X) as the free
abelian group on the lattice rank, and everything above comes from the
classifying space of the ambient group G (contractible for G = R^n, so
all higher entries vanish; the compact SU2 family contributes its known
low-degree groups).

An alternative statement-level reading takes pi_1(X) to be the full
automorphism class group rather than its outer quotient; every report
records that tension in a flag and follows the outer reading.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..densegroup.autrho import aut_rho
from ..densegroup.lattice import EmbeddedLattice
from ..errors import NotAnAction, UnknownGDescriptor
from .abgroup import abelian_name
from .fpgroup import (FPGroup, abelianization, group_name, simplify)
from .groups import FiniteGroup

# pi_i(BG) tables, indexed 1..5.  BR^n is contractible.  For the compact
# family, pi_i(BSU2) = pi_{i-1}(S^3): 0, 0, 0, Z, Z_2 in degrees 1..5.
_BG_TABLE = {
    "R": {i: "0" for i in range(1, 6)},
    "SU2": {1: "0", 2: "0", 3: "0", 4: "Z", 5: "Z_2"},
}
_CONTRACTIBLE = ("R", "R^1", "R^2", "R^n")
_COMPACT = ("SU2", "SU2xR")


def _bg_family(g_desc: str) -> str:
    if g_desc in _CONTRACTIBLE:
        return "R"
    if g_desc in _COMPACT:
        return "SU2"
    raise UnknownGDescriptor(
        f"unrecognized ambient group descriptor {g_desc!r}",
        witness={"g_desc": g_desc,
                 "supported": list(_CONTRACTIBLE + _COMPACT)})


@dataclass(frozen=True)
class HomotopyReport:
    g_desc: str
    i_max: int
    out_name: str
    gamma_name: str
    x_row: tuple[tuple[int, str], ...]
    b_row: tuple[tuple[int, str], ...]
    bg_row: tuple[tuple[int, str], ...]
    complete: bool
    flags: dict = field(default_factory=dict)

    def serialize(self) -> dict:
        return {"g": self.g_desc,
                "i_max": self.i_max,
                "out": self.out_name,
                "gamma": self.gamma_name,
                "X": {f"pi_{i}": v for i, v in self.x_row},
                "B": {f"pi_{i}": v for i, v in self.b_row},
                "BG": {f"pi_{i}": v for i, v in self.bg_row},
                "complete": self.complete,
                "flags": dict(sorted(self.flags.items()))}


def homotopy_groups(lat: EmbeddedLattice, g_desc: str,
                    i_max: int = 5, bound: int = 5) -> HomotopyReport:
    family = _bg_family(g_desc)
    table = _BG_TABLE[family]
    desc = aut_rho(lat, bound)
    out_name = desc.name
    gamma_name = abelian_name((), lat.rank)

    def bg(i: int) -> str:
        return table.get(i, "not tabulated")

    x_row = [(1, out_name), (2, gamma_name)]
    x_row += [(i, bg(i)) for i in range(3, i_max + 1)]
    b_row = [(1, gamma_name)]
    b_row += [(i, bg(i)) for i in range(2, i_max + 1)]
    bg_row = [(i, bg(i)) for i in range(1, i_max + 1)]

    flags = {
        "pi1_reading": "outer",
        "reading_tension": (
            "an alternative statement-level reading takes pi_1(X) to be the "
            "full automorphism class group rather than its outer quotient; "
            "this report follows the outer reading"),
    }
    if not desc.complete:
        flags["incomplete_unit_group"] = True
    if family == "SU2" and i_max > 5:
        flags["table_exhausted_above"] = 5
    return HomotopyReport(
        g_desc=g_desc, i_max=i_max, out_name=out_name,
        gamma_name=gamma_name, x_row=tuple(x_row), b_row=tuple(b_row),
        bg_row=tuple(bg_row), complete=desc.complete, flags=flags)


@dataclass(frozen=True)
class PostnikovReport:
    g_desc: str
    stages: tuple[str, ...]
    assertion: str
    flags: dict = field(default_factory=dict)

    def serialize(self) -> dict:
        return {"g": self.g_desc,
                "stages": list(self.stages),
                "assertion": self.assertion,
                "flags": dict(sorted(self.flags.items()))}


def postnikov_report(lat: EmbeddedLattice, g_desc: str,
                     bound: int = 5) -> PostnikovReport:
    family = _bg_family(g_desc)
    desc = aut_rho(lat, bound)
    out_name = desc.name
    gamma_name = abelian_name((), lat.rank)
    stage2 = f"X_(2): fiber K({gamma_name},2) over K({out_name},1)"
    flags: dict = {}
    if not desc.complete:
        flags["incomplete_unit_group"] = True
    if family == "R":
        assertion = f"X = {stage2}"
        stages = (f"X_(1) = K({out_name},1)", stage2)
    else:
        assertion = "X_(3) = X_(2)"
        stages = (f"X_(1) = K({out_name},1)", stage2,
                  "fiber of X -> X_(2) is BSU2")
    return PostnikovReport(g_desc=g_desc, stages=stages,
                           assertion=assertion, flags=flags)


def postnikov_split_toy() -> PostnikovReport:
    """Symbolic discrete-center model: the unit action on the coefficient
    group is trivial, so the two-stage tower is a product of
    Eilenberg-MacLane spaces."""
    return PostnikovReport(
        g_desc="R",
        stages=("X_(1) = K(Out(rho),1)",
                "X_(2): fiber K(Gamma_0,2) over K(Out(rho),1)"),
        assertion="X_(2) = K(Out(rho),1) x K(Gamma_0,2)",
        flags={"split": True, "reason": "trivial outer action on Gamma_0"})


# ---------------------------------------------------------------------------
# Nerve of a finite action groupoid, truncated at dimension 3.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComponentPi1:
    points: tuple[str, ...]
    pi1_name: str
    order: int | None
    iso_images: tuple[tuple[str, str], ...] | None
    certificates: tuple[tuple[str, bool], ...]


@dataclass(frozen=True)
class GroupoidNerveReport:
    group_name: str
    points: tuple[str, ...]
    simplex_counts: tuple[int, int, int, int]
    components: tuple[ComponentPi1, ...]

    def serialize(self) -> dict:
        return {"group": self.group_name,
                "points": list(self.points),
                "simplices": {f"dim_{d}": n
                              for d, n in enumerate(self.simplex_counts)},
                "components": [
                    {"points": list(c.points),
                     "pi1": c.pi1_name,
                     "order": c.order,
                     "iso": ([list(p) for p in c.iso_images]
                             if c.iso_images is not None else None),
                     "certificates": {k: v for k, v in c.certificates}}
                    for c in self.components]}


def groupoid_nerve(group: FiniteGroup, points: tuple[str, ...],
                   table: tuple[tuple[int, ...], ...]) -> GroupoidNerveReport:
    """Nerve of the action groupoid of a finite RIGHT action.

    ``table[x][g]`` is the index of ``points[x] . g``.  Arrows are pairs
    (point, group element); k-simplices are a point with a composable
    k-tuple, so the truncated counts are |T| * |G|^k for k = 0..3.
    Raises NotAnAction when the table is not a right action.
    """
    npts, ng = len(points), group.order
    if len(table) != npts or any(len(row) != ng for row in table):
        raise NotAnAction("action table shape mismatch",
                          witness={"points": npts, "order": ng})
    for x in range(npts):
        y = table[x][0]
        if y != x:
            raise NotAnAction(
                "identity does not act trivially",
                witness={"point": points[x], "image": points[y]})
        for v in table[x]:
            if not 0 <= v < npts:
                raise NotAnAction("action table entry out of range",
                                  witness={"point": points[x], "entry": v})
    for x in range(npts):
        for g in range(ng):
            for h in range(ng):
                if table[table[x][g]][h] != table[x][group.mul(g, h)]:
                    raise NotAnAction(
                        "action is not compatible with multiplication",
                        witness={"point": points[x],
                                 "g": group.elements[g],
                                 "h": group.elements[h]})

    counts = tuple(npts * ng ** k for k in range(4))

    # connected components = orbits
    seen: set[int] = set()
    comps: list[list[int]] = []
    for x in range(npts):
        if x in seen:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for g in range(ng):
                z = table[y][g]
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        orbit_sorted = sorted(orbit)
        comps.append(orbit_sorted)
        seen |= orbit

    out_components = []
    for orbit in comps:
        out_components.append(
            _component_pi1(group, points, table, orbit))
    return GroupoidNerveReport(
        group_name=group.name, points=points,
        simplex_counts=counts, components=tuple(out_components))


def _component_pi1(group: FiniteGroup, points, table,
                   orbit: list[int]) -> ComponentPi1:
    ng = group.order
    # generators: non-identity arrows (x, g) with x in the orbit
    arrows = [(x, g) for x in orbit for g in range(1, ng)]
    gen_index = {a: k + 1 for k, a in enumerate(arrows)}

    # spanning tree on the orbit via BFS with arrows sorted by (x, g)
    base = orbit[0]
    tree_word: dict[int, list[int]] = {base: []}
    queue = [base]
    while queue:
        x = queue.pop(0)
        for g in range(1, ng):
            y = table[x][g]
            if y not in tree_word:
                tree_word[y] = tree_word[x] + [gen_index[(x, g)]]
                queue.append(y)

    def arrow_letter(x: int, g: int) -> list[int]:
        if g == 0:
            return []
        return [gen_index[(x, g)]]

    relators: list[tuple[int, ...]] = []
    # 2-simplices: (x, g1, g2) gives  a(x,g1) a(x.g1, g2) a(x, g1 g2)^-1
    for x in orbit:
        for g1 in range(ng):
            for g2 in range(ng):
                word = (arrow_letter(x, g1)
                        + arrow_letter(table[x][g1], g2)
                        + [-t for t in
                           reversed(arrow_letter(x, group.mul(g1, g2)))])
                if word:
                    relators.append(tuple(word))
    # kill the tree: each tree arrow is a relator
    tree_arrows: set[tuple[int, int]] = set()
    for y, word in tree_word.items():
        for letter in word:
            tree_arrows.add(arrows[letter - 1])
    for a in sorted(tree_arrows):
        relators.append((gen_index[a],))

    gen_names = tuple(f"a_{points[x]}_{group.elements[g]}"
                      for x, g in arrows)
    raw = FPGroup(generators=gen_names, relators=tuple(relators))
    fp = simplify(raw)
    name = group_name(fp)

    certificates: list[tuple[str, bool]] = []
    order: int | None = None
    iso_images = None
    if len(orbit) == 1:
        # Point action: the presentation is the multiplication table
        # x_{g1} x_{g2} = x_{g1 g2}.  Certify pi_1 ~ group explicitly:
        #   (a) x_g -> g kills every relator, giving a surjection onto
        #       the group (every generator is hit), so |pi_1| >= |group|;
        #   (b) the table relators rewrite any product of letters to a
        #       single letter (closure), so |pi_1| <= |group|.
        def phi(word: tuple[int, ...]) -> int:
            acc = 0
            for letter in word:
                g = arrows[abs(letter) - 1][1]
                acc = group.mul(acc, g if letter > 0 else group.inv(g))
            return acc

        hom_ok = all(phi(r) == 0 for r in raw.relators)
        relator_set = set(raw.relators)
        closure_ok = True
        for g1 in range(1, ng):
            for g2 in range(1, ng):
                prod = group.mul(g1, g2)
                want = (gen_index[(orbit[0], g1)], gen_index[(orbit[0], g2)])
                if prod != 0:
                    want = want + (-gen_index[(orbit[0], prod)],)
                if want not in relator_set:
                    closure_ok = False
        surj_ok = ({arrows[k][1] for k in range(len(arrows))} | {0}
                   == set(range(ng)))
        certificates.append(("relators_killed_by_x_g_to_g", hom_ok))
        certificates.append(("letters_closed_under_product", closure_ok))
        certificates.append(("surjective_on_group", surj_ok))
        ab_fp = abelianization(raw)
        ab_group = group.abelianization_invariants()
        certificates.append(
            ("abelianization_matches",
             tuple(ab_fp.torsion) == tuple(ab_group)
             and ab_fp.free_rank == 0))
        if hom_ok and closure_ok and surj_ok:
            order = ng
            name = group.name
        if ng <= 24:
            iso_images = tuple(
                (f"x_{group.elements[g]}", group.elements[g])
                for g in range(1, ng))
    else:
        certificates.append(("tree_quotient_presentation", True))
        if not fp.generators:
            order = 1
    return ComponentPi1(
        points=tuple(points[x] for x in orbit),
        pi1_name=name, order=order, iso_images=iso_images,
        certificates=tuple(certificates))
