"""Seeded identity suites over the automorphism algebra of Gamma x| G.

Each law is checked on `samples` independently drawn tuples with a seeded
RNG, entirely in exact arithmetic; a single failure is reported with its
witness tuple.  Suites:

* ``grpd``      — semidirect group axioms, the groupoid action psi, the
                  boundary map mu, and the two crossed-module axioms;
* ``sequences`` — the five exact-sequence verifications (instances the
                  lattice does not support are recorded as skipped);
* ``all``       — both of the above.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..densegroup.autrho import power_element
from ..densegroup.lattice import EmbeddedLattice
from ..errors import UnsupportedInstance
from .crossedmod import (ad_crossed_module, crossed_module_verify,
                         groupoid_crossed_module)
from .groupoid import (AutGroupoidElement, GroupoidElement, aut_compose,
                       aut_inverse, check_mu_normality, compose,
                       identity_arrow, identity_aut, mu, psi_apply)
from .sequences import SEQUENCE_IDS, exact_sequence_verify

SUITES = ("all", "grpd", "sequences")


@dataclass(frozen=True)
class LawResult:
    name: str
    checked: int
    failures: int

    def serialize(self) -> dict:
        return {"law": self.name, "checked": self.checked,
                "failures": self.failures}


@dataclass(frozen=True)
class VerifySuiteReport:
    suite: str
    samples: int
    seed: int
    laws: tuple[LawResult, ...]
    sequences: tuple = ()
    flags: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        laws_ok = all(r.failures == 0 for r in self.laws)
        seqs_ok = all(rep.holds for _sid, rep in self.sequences)
        return laws_ok and seqs_ok

    def serialize(self) -> dict:
        return {"suite": self.suite,
                "samples": self.samples,
                "seed": self.seed,
                "ok": self.ok,
                "laws": [r.serialize() for r in self.laws],
                "sequences": [{"id": sid, **rep.serialize()}
                              for sid, rep in self.sequences],
                "flags": dict(sorted(self.flags.items()))}


def _rand_point(lat: EmbeddedLattice, rng: random.Random):
    f = lat.field
    out = []
    for _ in range(lat.ambient_dim):
        coeffs = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                       for _ in range(f.degree))
        out.append(f.element(coeffs))
    return tuple(out)


def _rand_gamma(lat: EmbeddedLattice, rng: random.Random):
    return tuple(rng.randint(-9, 9) for _ in range(lat.rank))


def _rand_aut(lat: EmbeddedLattice, rng: random.Random) -> AutGroupoidElement:
    return AutGroupoidElement(
        alpha=power_element(lat, rng.choice((1, -1)), rng.randint(-3, 3)),
        g=_rand_point(lat, rng))


def _rand_arrow(lat: EmbeddedLattice, rng: random.Random) -> GroupoidElement:
    return GroupoidElement(lattice=lat, gamma=_rand_gamma(lat, rng),
                           x=_rand_point(lat, rng))


def _aut_equal(p: AutGroupoidElement, q: AutGroupoidElement) -> bool:
    if p.alpha.t_matrix != q.alpha.t_matrix:
        return False
    return all((a - b).is_zero() for a, b in zip(p.g, q.g))


def _arrow_equal(e: GroupoidElement, f: GroupoidElement) -> bool:
    if e.gamma != f.gamma:
        return False
    return all((a - b).is_zero() for a, b in zip(e.x, f.x))


def verify_suite(lat: EmbeddedLattice, suite: str = "all",
                 samples: int = 100, seed: int = 0) -> VerifySuiteReport:
    if suite not in SUITES:
        raise ValueError(f"suite must be one of {SUITES}, got {suite!r}")
    laws: list[LawResult] = []
    seq_reports: list = []
    flags: dict = {}

    if suite in ("all", "grpd"):
        laws.extend(_grpd_laws(lat, samples, seed))
        laws.extend(_crossed_laws(lat, samples, seed))
    if suite in ("all", "sequences"):
        for sid in SEQUENCE_IDS:
            try:
                rep = exact_sequence_verify(sid, lat, samples=min(samples, 200),
                                            seed=seed)
            except UnsupportedInstance as exc:
                flags[f"skipped_{sid}"] = dict(sorted(exc.witness.items()))
                continue
            seq_reports.append((sid, rep))
    return VerifySuiteReport(suite=suite, samples=samples, seed=seed,
                             laws=tuple(laws), sequences=tuple(seq_reports),
                             flags=flags)


def _grpd_laws(lat: EmbeddedLattice, samples: int,
               seed: int) -> list[LawResult]:
    rng = random.Random(seed)
    one = identity_aut(lat)
    n_assoc = n_ident = n_inv = n_invform = 0
    n_psi_hom = n_psi_comp = n_mu_hom = n_mu_conj = 0
    for _ in range(samples):
        p, q, r = (_rand_aut(lat, rng) for _ in range(3))
        g1, g2 = _rand_gamma(lat, rng), _rand_gamma(lat, rng)
        # semidirect group axioms
        if not _aut_equal(aut_compose(aut_compose(p, q), r),
                          aut_compose(p, aut_compose(q, r))):
            n_assoc += 1
        if not (_aut_equal(aut_compose(p, one), p)
                and _aut_equal(aut_compose(one, p), p)):
            n_ident += 1
        if not _aut_equal(aut_compose(p, aut_inverse(p)), one):
            n_inv += 1
        # inverse formula: (alpha, g)^{-1} = (alpha^{-1}, alpha^{-1}(-g))
        inv = aut_inverse(p)
        t_prod = [[sum(inv.alpha.t_matrix[i][k] * p.alpha.t_matrix[k][j]
                       for k in range(lat.rank))
                   for j in range(lat.rank)] for i in range(lat.rank)]
        t_is_identity = all(t_prod[i][j] == (1 if i == j else 0)
                            for i in range(lat.rank)
                            for j in range(lat.rank))
        alpha_inv_minus_g = inv.alpha.apply_ambient(tuple(-c for c in p.g))
        if not (t_is_identity
                and all((a - b).is_zero()
                        for a, b in zip(inv.g, alpha_inv_minus_g))):
            n_invform += 1
        # psi is a homomorphism into groupoid functors, and each psi(p)
        # respects arrow composition
        e1 = _rand_arrow(lat, rng)
        if not _arrow_equal(psi_apply(aut_compose(p, q), e1),
                            psi_apply(p, psi_apply(q, e1))):
            n_psi_hom += 1
        e2 = GroupoidElement(lattice=lat, gamma=_rand_gamma(lat, rng),
                             x=e1.target())
        if not _arrow_equal(psi_apply(p, compose(e2, e1)),
                            compose(psi_apply(p, e2), psi_apply(p, e1))):
            n_psi_comp += 1
        # mu is a homomorphism and its image is normal
        sum_gamma = tuple(a + b for a, b in zip(g1, g2))
        if not _aut_equal(mu(lat, sum_gamma),
                          aut_compose(mu(lat, g1), mu(lat, g2))):
            n_mu_hom += 1
        if not check_mu_normality(p, g1).holds:
            n_mu_conj += 1
    return [
        LawResult("aut-compose-associative", samples, n_assoc),
        LawResult("aut-identity-neutral", samples, n_ident),
        LawResult("aut-inverse-law", samples, n_inv),
        LawResult("aut-inverse-formula", samples, n_invform),
        LawResult("psi-homomorphism", samples, n_psi_hom),
        LawResult("psi-respects-composition", samples, n_psi_comp),
        LawResult("mu-homomorphism", samples, n_mu_hom),
        LawResult("mu-conjugation-normality", samples, n_mu_conj),
    ]


def _crossed_laws(lat: EmbeddedLattice, samples: int,
                  seed: int) -> list[LawResult]:
    out = []
    for label, spec in (("ad", ad_crossed_module(lat)),
                        ("groupoid", groupoid_crossed_module(lat))):
        rep = crossed_module_verify(spec, samples, random.Random(seed))
        out.append(LawResult(f"crossed-{label}-mu-homomorphism",
                             samples, len(rep.homomorphism_failures)))
        out.append(LawResult(f"crossed-{label}-equivariance",
                             samples, len(rep.axiom1_failures)))
        out.append(LawResult(f"crossed-{label}-peiffer",
                             samples, len(rep.axiom2_failures)))
    return out
