"""Problem and nerve documents: JSON in, validated exact data out.

A problem document carries a number field (defining polynomial plus an
isolating interval), an ambient dimension, and a lattice basis whose
coordinates are written as comma-separated rational coefficient vectors
in the power basis of the field ("1,0" is 1, "0,1" is theta).  A 2x2
integer ``ga_matrix`` may accompany or replace the lattice data for the
affine-family commands.

All rationals travel as strings so no float ever touches the data.  The
first schema violation is reported as a SchemaError whose witness carries
a JSON-pointer path to the offending value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from ..classify.nerve import Nerve, make_nerve
from ..densegroup.lattice import EmbeddedLattice, make_lattice
from ..errors import ParseError, SchemaError
from ..exactnum.field import NumberField

Coeffs = tuple[Fraction, ...]


@dataclass(frozen=True)
class ProblemDocument:
    """Validated problem input: a lattice description and/or a GA matrix."""

    min_poly: Optional[tuple[int, ...]]
    root_interval: Optional[tuple[Fraction, Fraction]]
    ambient_dim: Optional[int]
    lattice_basis: Optional[tuple[tuple[Coeffs, ...], ...]]
    ga_matrix: Optional[tuple[tuple[int, int], tuple[int, int]]]

    @property
    def has_lattice(self) -> bool:
        return self.min_poly is not None


def _schema(message: str, path: str, **extra: Any) -> SchemaError:
    witness = {"path": path}
    witness.update(extra)
    return SchemaError(f"{message} at {path}", witness=witness)


def _rational(text: Any, path: str) -> Fraction:
    if not isinstance(text, str):
        raise _schema("rational values must be strings like 'p/q'", path,
                      got=repr(text))
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _schema("not a rational 'p/q' string", path, got=text)


def _coeff_vector(text: Any, degree: int, path: str) -> Coeffs:
    if not isinstance(text, str):
        raise _schema("coordinates are comma-separated rational strings",
                      path, got=repr(text))
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != degree:
        raise _schema(f"expected {degree} coefficients, got {len(parts)}",
                      path, got=text)
    return tuple(_rational(p, path) for p in parts)


def validate_document(obj: Any) -> ProblemDocument:
    """Validate a decoded JSON object against the problem schema."""
    if not isinstance(obj, dict):
        raise _schema("problem document must be a JSON object", "",
                      got=type(obj).__name__)

    known = {"field", "ambient_dim", "lattice_basis", "ga_matrix"}
    for key in obj:
        if key not in known:
            raise _schema("unknown key", f"/{key}")

    ga_matrix = None
    if "ga_matrix" in obj:
        rows = obj["ga_matrix"]
        if (not isinstance(rows, list) or len(rows) != 2
                or any(not isinstance(r, list) or len(r) != 2 for r in rows)):
            raise _schema("ga_matrix must be a 2x2 integer array",
                          "/ga_matrix")
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if not isinstance(x, int) or isinstance(x, bool):
                    raise _schema("matrix entries must be integers",
                                  f"/ga_matrix/{i}/{j}", got=repr(x))
        ga_matrix = ((rows[0][0], rows[0][1]), (rows[1][0], rows[1][1]))

    if "field" not in obj:
        if ga_matrix is None:
            raise _schema("document needs a field block or a ga_matrix", "")
        return ProblemDocument(min_poly=None, root_interval=None,
                               ambient_dim=None, lattice_basis=None,
                               ga_matrix=ga_matrix)

    fld = obj["field"]
    if not isinstance(fld, dict):
        raise _schema("field must be an object", "/field")
    for key in fld:
        if key not in ("min_poly", "root_interval"):
            raise _schema("unknown key", f"/field/{key}")

    if "min_poly" not in fld:
        raise _schema("missing min_poly", "/field/min_poly")
    poly = fld["min_poly"]
    if not isinstance(poly, list) or len(poly) < 2:
        raise _schema("min_poly must be an integer array of degree >= 1",
                      "/field/min_poly")
    for i, c in enumerate(poly):
        if not isinstance(c, int) or isinstance(c, bool):
            raise _schema("coefficients must be integers",
                          f"/field/min_poly/{i}", got=repr(c))
    if poly[-1] != 1:
        raise _schema("min_poly must be monic (leading coefficient 1)",
                      "/field/min_poly", leading=poly[-1])

    if "root_interval" not in fld:
        raise _schema("missing root_interval", "/field/root_interval")
    interval = fld["root_interval"]
    if not isinstance(interval, list) or len(interval) != 2:
        raise _schema("root_interval must be [lo, hi] rational strings",
                      "/field/root_interval")
    lo = _rational(interval[0], "/field/root_interval/0")
    hi = _rational(interval[1], "/field/root_interval/1")
    if not lo < hi:
        raise _schema("interval endpoints must satisfy lo < hi",
                      "/field/root_interval", lo=str(lo), hi=str(hi))

    if "ambient_dim" not in obj:
        raise _schema("missing ambient_dim", "/ambient_dim")
    dim = obj["ambient_dim"]
    if dim not in (1, 2) or isinstance(dim, bool):
        raise _schema("ambient_dim must be 1 or 2", "/ambient_dim",
                      got=repr(dim))

    if "lattice_basis" not in obj:
        raise _schema("missing lattice_basis", "/lattice_basis")
    basis = obj["lattice_basis"]
    if not isinstance(basis, list) or not basis:
        raise _schema("lattice_basis must be a non-empty array",
                      "/lattice_basis")
    degree = len(poly) - 1
    gens = []
    for i, gen in enumerate(basis):
        if not isinstance(gen, list) or len(gen) != dim:
            raise _schema(f"generator needs {dim} coordinate string(s)",
                          f"/lattice_basis/{i}")
        gens.append(tuple(_coeff_vector(gen[j], degree,
                                        f"/lattice_basis/{i}/{j}")
                          for j in range(dim)))

    return ProblemDocument(min_poly=tuple(poly),
                           root_interval=(lo, hi),
                           ambient_dim=dim,
                           lattice_basis=tuple(gens),
                           ga_matrix=ga_matrix)


def parse_problem(text: str) -> ProblemDocument:
    """Parse UTF-8 JSON text into a validated ProblemDocument."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}",
                         witness={"line": exc.lineno, "column": exc.colno})
    return validate_document(obj)


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def serialize_document(doc: ProblemDocument) -> dict:
    """Canonical echo of a document; re-parses to an equal document."""
    out: dict[str, Any] = {}
    if doc.has_lattice:
        lo, hi = doc.root_interval
        out["field"] = {"min_poly": list(doc.min_poly),
                        "root_interval": [_frac_str(lo), _frac_str(hi)]}
        out["ambient_dim"] = doc.ambient_dim
        out["lattice_basis"] = [
            [",".join(_frac_str(c) for c in coord) for coord in gen]
            for gen in doc.lattice_basis]
    if doc.ga_matrix is not None:
        out["ga_matrix"] = [list(r) for r in doc.ga_matrix]
    return out


def document_to_lattice(doc: ProblemDocument) -> EmbeddedLattice:
    """Build the embedded lattice a document describes (exact throughout)."""
    if not doc.has_lattice:
        raise SchemaError("document has no field/lattice block",
                          witness={"path": "/field"})
    lo, hi = doc.root_interval
    fld = NumberField.create(doc.min_poly, lo, hi)
    gens = [tuple(fld.element(coord) for coord in gen)
            for gen in doc.lattice_basis]
    return make_lattice(fld, doc.ambient_dim, gens)


def validate_nerve_document(obj: Any) -> Nerve:
    """Validate a decoded JSON object describing a finite nerve."""
    if not isinstance(obj, dict):
        raise _schema("nerve document must be a JSON object", "",
                      got=type(obj).__name__)
    for key in obj:
        if key not in ("vertices", "edges", "triangles", "basepoint"):
            raise _schema("unknown key", f"/{key}")
    if "vertices" not in obj:
        raise _schema("missing vertices", "/vertices")
    verts = obj["vertices"]
    if not isinstance(verts, list) or not verts:
        raise _schema("vertices must be a non-empty integer array",
                      "/vertices")
    for i, v in enumerate(verts):
        if not isinstance(v, int) or isinstance(v, bool):
            raise _schema("vertices must be integers", f"/vertices/{i}",
                          got=repr(v))

    def simplices(key: str, size: int) -> list:
        rows = obj.get(key, [])
        if not isinstance(rows, list):
            raise _schema(f"{key} must be an array", f"/{key}")
        for i, row in enumerate(rows):
            if (not isinstance(row, list) or len(row) != size
                    or any(not isinstance(v, int) or isinstance(v, bool)
                           for v in row)):
                raise _schema(f"each entry needs {size} integer vertices",
                              f"/{key}/{i}", got=repr(row))
        return rows

    edges = simplices("edges", 2)
    triangles = simplices("triangles", 3)
    basepoint = obj.get("basepoint")
    if basepoint is not None and (not isinstance(basepoint, int)
                                  or isinstance(basepoint, bool)):
        raise _schema("basepoint must be an integer vertex", "/basepoint",
                      got=repr(basepoint))
    return make_nerve(verts, edges, triangles, basepoint=basepoint)


def parse_nerve(text: str) -> Nerve:
    """Parse UTF-8 JSON text into a validated nerve."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}",
                         witness={"line": exc.lineno, "column": exc.colno})
    return validate_nerve_document(obj)
