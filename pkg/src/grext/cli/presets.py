"""Named problem and nerve presets resolvable wherever a file is accepted.

``-i NAME`` (with or without a ``.json`` suffix) looks the name up here
before touching the filesystem, so the standard instances work out of the
box: ``lsqrt2`` (the rank-2 line lattice generated by 1 and sqrt(2)),
``cubic`` (1 and the real root of x^3 - x - 1), ``complex-alpha-sqrt2``
(the rank-3 plane lattice spanned by (1,0), (0,1), (0,sqrt(2))), and
``carriere-211`` (the affine family of the matrix [[2,1],[1,1]]).
"""

from __future__ import annotations

import json
from pathlib import Path

from ..classify.nerve import PRESETS as NERVE_PRESETS
from ..classify.nerve import Nerve
from ..errors import ParseError
from .documents import (ProblemDocument, parse_nerve, parse_problem,
                        validate_document, validate_nerve_document)

PROBLEM_PRESETS: dict[str, dict] = {
    "lsqrt2": {
        "field": {"min_poly": [-2, 0, 1], "root_interval": ["1", "2"]},
        "ambient_dim": 1,
        "lattice_basis": [["1,0"], ["0,1"]],
    },
    "cubic": {
        "field": {"min_poly": [-1, -1, 0, 1], "root_interval": ["1", "2"]},
        "ambient_dim": 1,
        "lattice_basis": [["1,0,0"], ["0,1,0"]],
    },
    "complex-alpha-sqrt2": {
        "field": {"min_poly": [-2, 0, 1], "root_interval": ["1", "2"]},
        "ambient_dim": 2,
        "lattice_basis": [["1,0", "0,0"], ["0,0", "1,0"], ["0,0", "0,1"]],
    },
    "carriere-211": {
        "ga_matrix": [[2, 1], [1, 1]],
    },
}


def _preset_key(name: str, registry: dict) -> str | None:
    if name in registry:
        return name
    if name.endswith(".json") and name[:-5] in registry:
        return name[:-5]
    return None


def load_problem(spec: str) -> ProblemDocument:
    """Resolve ``-i``: preset name first, then filesystem path."""
    key = _preset_key(spec, PROBLEM_PRESETS)
    if key is not None:
        return validate_document(PROBLEM_PRESETS[key])
    path = Path(spec)
    if not path.is_file():
        raise ParseError(
            "no such preset or readable file",
            witness={"input": spec,
                     "presets": sorted(PROBLEM_PRESETS)})
    return parse_problem(path.read_text(encoding="utf-8"))


def load_nerve(spec: str) -> Nerve:
    """Resolve ``-n``: nerve preset name first, then filesystem path."""
    key = _preset_key(spec, NERVE_PRESETS)
    if key is not None:
        return NERVE_PRESETS[key]()
    path = Path(spec)
    if not path.is_file():
        raise ParseError(
            "no such preset or readable file",
            witness={"input": spec, "presets": sorted(NERVE_PRESETS)})
    return parse_nerve(path.read_text(encoding="utf-8"))


def preset_document_json(name: str) -> str:
    """The raw JSON text of a problem preset (for fixture generation)."""
    return json.dumps(PROBLEM_PRESETS[name], indent=2, sort_keys=True) + "\n"
