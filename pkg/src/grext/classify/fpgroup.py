"""Finitely presented groups from nerves: edge-path presentations.

Words are tuples of nonzero signed integers: +k / -k is the k-th generator
(1-based) or its inverse.  The simplifier applies conservative Tietze moves
only — free/cyclic reduction, dropping trivial generators, eliminating a
generator that occurs exactly once in some relator — which is enough to
collapse the nerve presentations used here (sphere to the trivial group,
the 7-vertex torus to two commuting generators).
"""

from __future__ import annotations

from dataclasses import dataclass

from .abgroup import FgAbelian, cokernel
from .groups import FiniteGroup
from .nerve import Nerve, non_tree_edges, spanning_tree

Word = tuple[int, ...]


@dataclass(frozen=True)
class FPGroup:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def serialize(self) -> dict:
        return {"generators": list(self.generators),
                "relators": [list(w) for w in self.relators]}


def free_reduce(word) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word) -> Word:
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def invert_word(word) -> Word:
    return tuple(-x for x in reversed(word))


def _canonical_relator(word: Word) -> Word:
    """Least rotation over the relator and its inverse (dedup key)."""
    w = cyclic_reduce(word)
    if not w:
        return ()
    candidates = []
    for base in (w, invert_word(w)):
        for r in range(len(base)):
            candidates.append(base[r:] + base[:r])
    return min(candidates)


def edge_path_group(nerve: Nerve) -> FPGroup:
    """Generators: edges off the canonical spanning tree; relators: triangles."""
    tree = spanning_tree(nerve)
    gens = non_tree_edges(tree)
    gen_index = {e: k + 1 for k, e in enumerate(gens)}

    def letter(a: int, b: int) -> tuple[int, ...]:
        e = (a, b) if a < b else (b, a)
        if e in tree.tree_edges:
            return ()
        sign = 1 if a < b else -1
        return (sign * gen_index[e],)

    relators = []
    for i, j, k in nerve.triangles:
        word = free_reduce(letter(i, j) + letter(j, k) + letter(k, i))
        if word:
            relators.append(word)
    names = tuple(f"e{a}_{b}" for a, b in gens)
    return FPGroup(generators=names, relators=tuple(sorted(set(relators))))


# ------------------------------------------------------------ simplification

def simplify(fp: FPGroup, max_rounds: int = 10_000) -> FPGroup:
    gens = list(fp.generators)
    relators = [cyclic_reduce(w) for w in fp.relators]
    for _ in range(max_rounds):
        relators = sorted({_canonical_relator(w) for w in relators} - {()})
        # rule 1: a length-1 relator kills its generator
        killed = None
        for w in relators:
            if len(w) == 1:
                killed = abs(w[0])
                break
        if killed is not None:
            relators = [tuple(x for x in w if abs(x) != killed)
                        for w in relators]
            relators = [cyclic_reduce(w) for w in relators]
            gens, relators = _renumber(gens, relators, killed)
            continue
        # rule 2: eliminate a generator occurring exactly once in a relator
        pick = None
        for wi, w in enumerate(relators):
            for g in sorted({abs(x) for x in w}):
                if sum(1 for x in w if abs(x) == g) == 1:
                    if pick is None or len(w) < len(relators[pick[0]]):
                        pick = (wi, g)
                    break
        if pick is None:
            break
        wi, g = pick
        w = relators[wi]
        pos = next(i for i, x in enumerate(w) if abs(x) == g)
        rest = w[pos + 1:] + w[:pos]      # w cyclically = letter . rest
        # letter * rest = 1  =>  g^{±1} = rest^{-1}
        replacement = invert_word(rest)
        if w[pos] < 0:
            replacement = invert_word(replacement)
        # substitute g -> replacement in every other relator
        new_relators = []
        for wj, other in enumerate(relators):
            if wj == wi:
                continue
            out: list[int] = []
            for x in other:
                if abs(x) != g:
                    out.append(x)
                elif x > 0:
                    out.extend(replacement)
                else:
                    out.extend(invert_word(replacement))
            new_relators.append(cyclic_reduce(tuple(out)))
        gens, relators = _renumber(gens, new_relators, g)
    relators = sorted({_canonical_relator(w) for w in relators} - {()})
    return FPGroup(generators=tuple(gens), relators=tuple(relators))


def _renumber(gens: list[str], relators: list[Word],
              dead: int) -> tuple[list[str], list[Word]]:
    """Drop generator number `dead` (1-based) and shift higher indices down."""
    def shift(x: int) -> int:
        a = abs(x)
        return x if a < dead else (x - 1 if x > 0 else x + 1)

    new_gens = gens[:dead - 1] + gens[dead:]
    new_relators = [tuple(shift(x) for x in w) for w in relators]
    return new_gens, new_relators


# ------------------------------------------------------------------ analysis

def abelianization(fp: FPGroup) -> FgAbelian:
    n = len(fp.generators)
    cols = []
    for w in fp.relators:
        vec = [0] * n
        for x in w:
            vec[abs(x) - 1] += 1 if x > 0 else -1
        cols.append(vec)
    return cokernel(cols, n)


def group_name(fp: FPGroup) -> str:
    """Canonical name when the presentation is recognizably free/abelian,
    otherwise a descriptor with the abelianization attached."""
    s = simplify(fp)
    if not s.generators:
        return "0"
    if not s.relators:
        return "Z" if len(s.generators) == 1 else f"F_{len(s.generators)}"
    ab = abelianization(s)
    if len(s.generators) == 1:
        # a one-generator group is a quotient of Z, hence abelian
        return ab.name
    if _is_abelian_presentation(s):
        return ab.name
    return (f"fp(generators={len(s.generators)}, "
            f"relators={len(s.relators)}; abelianization {ab.name})")


def _is_abelian_presentation(fp: FPGroup) -> bool:
    """True when every relator is a commutator of two generators and all
    generator pairs commute — the presentation is then Z^n exactly."""
    n = len(fp.generators)
    need = {(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)}
    got = set()
    for w in fp.relators:
        c = _as_commutator(w)
        if c is None:
            return False
        got.add(c)
    return got == need


def _as_commutator(word: Word) -> tuple[int, int] | None:
    if len(word) != 4:
        return None
    a, b, c, d = word
    if a == -c and b == -d and abs(a) != abs(b):
        pair = tuple(sorted((abs(a), abs(b))))
        return (pair[0], pair[1])
    return None


# -------------------------------------------------------- finite hom counts

def word_eval(word: Word, images: list[int], group: FiniteGroup) -> int:
    out = 0
    for x in word:
        g = images[abs(x) - 1]
        if x < 0:
            g = group.inv(g)
        out = group.mul(out, g)
    return out


def hom_images(fp: FPGroup, group: FiniteGroup) -> list[tuple[int, ...]]:
    """All homomorphisms fp -> group as generator-image tuples, sorted.

    Backtracking over generator images; a relator is checked as soon as all
    its generators are assigned.
    """
    n = len(fp.generators)
    by_last: dict[int, list[Word]] = {i: [] for i in range(n)}
    for w in fp.relators:
        if w:
            by_last[max(abs(x) for x in w) - 1].append(w)
    out: list[tuple[int, ...]] = []
    images = [0] * n

    def walk(i: int) -> None:
        if i == n:
            out.append(tuple(images))
            return
        for g in range(group.order):
            images[i] = g
            if all(word_eval(w, images, group) == 0 for w in by_last[i]):
                walk(i + 1)
        images[i] = 0

    if n == 0:
        return [()]
    walk(0)
    return out


def hom_conjugacy_orbits(homs: list[tuple[int, ...]],
                         group: FiniteGroup) -> list[tuple[int, ...]]:
    """Orbit representatives (lexicographic minima) of the conjugation action
    on generator-image tuples."""
    reps = set()
    for h in homs:
        orbit_min = min(tuple(group.conj(g, x) for x in h)
                        for g in range(group.order))
        reps.add(orbit_min)
    return sorted(reps)
