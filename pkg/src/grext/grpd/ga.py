"""The group of orientation-preserving affine maps of the line, exactly.

Elements are pairs (a, b) with a > 0 in a real number field, representing
x -> a x + b — equivalently the matrices [[a, b], [0, 1]].  The hyperbolic
SL(2,Z) family report supplies a generator dictionary {A, V1, V2} whose
words are evaluated here; conjugating a translation by the homothety A
scales the translation part by the small eigenvalue, exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..densegroup.carriere import CarriereReport
from ..exactnum.field import FieldElement


@dataclass(frozen=True)
class GAElement:
    """Affine map x -> a x + b with a > 0."""

    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if self.a.sign() <= 0:
            raise ValueError("affine coefficient must be positive")

    def serialize(self) -> dict:
        return {"a": self.a.serialize(), "b": self.b.serialize()}


def ga_identity(field) -> GAElement:
    return GAElement(a=field.one(), b=field.zero())


def ga_compose(h2: GAElement, h1: GAElement) -> GAElement:
    """h2 after h1: x -> a2(a1 x + b1) + b2 = (a2 a1) x + (a2 b1 + b2)."""
    return GAElement(a=h2.a * h1.a, b=h2.a * h1.b + h2.b)


def ga_inverse(h: GAElement) -> GAElement:
    inv = h.a.inverse()
    return GAElement(a=inv, b=-(inv * h.b))


def ga_equal(h1: GAElement, h2: GAElement) -> bool:
    return (h1.a - h2.a).is_zero() and (h1.b - h2.b).is_zero()


_SUBSCRIPTS = {"V₁": "V1", "V₂": "V2"}


def _normalize_token(tok: str) -> tuple[str, bool]:
    t = tok.replace("⁻¹", "^-1")
    for uni, ascii_ in _SUBSCRIPTS.items():
        t = t.replace(uni, ascii_)
    inverse = t.endswith("^-1")
    if inverse:
        t = t[:-3]
    return t, inverse


def ga_word_eval(report: CarriereReport, word: str | list[str]) -> GAElement:
    """Evaluate a word over {A, V1, V2} (with ^-1 suffixes) in GA.

    The empty word is the identity.  Tokens map through the report's
    generator dictionary; evaluation is the left-associated group product.
    """
    tokens = word.split() if isinstance(word, str) else list(word)
    result = ga_identity(report.field)
    for tok in tokens:
        name, inverse = _normalize_token(tok)
        if name not in report.dictionary:
            raise ValueError(f"unknown generator {tok!r}; expected A, V1 or V2")
        a, b = report.dictionary[name]
        elt = GAElement(a=a, b=b)
        if inverse:
            elt = ga_inverse(elt)
        result = ga_compose(result, elt)
    return result
