"""Deterministic report rendering: canonical JSON and a flat text view.

Canonical form: keys sorted, rationals as reduced ``p/q`` strings, field
elements as coefficient vectors (JSON) or power-basis polynomials in theta
(display strings), two-space indentation, trailing newline.  Two runs with
the same inputs and seed produce byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any

from .. import __version__


def jsonable(x: Any) -> Any:
    """Recursively coerce exact/report data into JSON-encodable values."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        raise TypeError(f"float leaked into a report: {x!r}")
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "serialize"):
        return jsonable(x.serialize())
    return str(x)


def _frac_term(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def render_field_element(elt) -> str:
    """Human form of a field element: '1+θ', '-1', '2θ', '1/2+θ^2'."""
    parts: list[str] = []
    for power, c in enumerate(elt.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if power == 0:
            body = _frac_term(mag)
        else:
            sym = "θ" if power == 1 else f"θ^{power}"
            body = sym if mag == 1 else f"{_frac_term(mag)}{sym}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if c > 0 else f"-{body}")
    return "".join(parts) if parts else "0"


def render_extension(ext) -> Any:
    """Display form of an ambient extension: string (line) or matrix."""
    if isinstance(ext, tuple):
        return [[render_field_element(e) for e in row] for row in ext]
    return render_field_element(ext)


@dataclass(frozen=True)
class Report:
    command: str
    inputs: dict
    results: dict
    flags: dict = dc_field(default_factory=dict)
    seed: int = 0
    version: str = __version__

    def serialize(self) -> dict:
        return {"command": self.command,
                "inputs": jsonable(self.inputs),
                "results": jsonable(self.results),
                "flags": jsonable(self.flags),
                "seed": self.seed,
                "version": self.version}


def canonical_json(report: Report) -> str:
    return json.dumps(report.serialize(), sort_keys=True, indent=2) + "\n"


def _text_lines(value: Any, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v:
                out.append(f"{pad}{k}:")
                _text_lines(v, indent + 1, out)
            else:
                out.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and v:
                out.append(f"{pad}-")
                _text_lines(v, indent + 1, out)
            else:
                out.append(f"{pad}- {_scalar_text(v)}")
    else:
        out.append(f"{pad}{_scalar_text(value)}")


def _scalar_text(v: Any) -> str:
    if v is None:
        return "null"
    if v is True:
        return "true"
    if v is False:
        return "false"
    if isinstance(v, (dict, list)):
        return "{}" if isinstance(v, dict) else "[]"
    return str(v)


def render_text(report: Report) -> str:
    out: list[str] = []
    _text_lines(report.serialize(), 0, out)
    return "\n".join(out) + "\n"


def render_report(report: Report, fmt: str) -> str:
    if fmt == "text":
        return render_text(report)
    return canonical_json(report)


def error_payload(command: str, exc: BaseException) -> Report:
    """Structured error report: the error's name and exact witness."""
    err: dict[str, Any] = {"name": type(exc).__name__,
                           "message": str(exc.args[0]) if exc.args else ""}
    witness = getattr(exc, "witness", None)
    if witness is not None:
        err["witness"] = witness
    return Report(command=command, inputs={}, results={"error": err})
