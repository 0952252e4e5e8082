"""Command-line front end for the exact extension calculator."""

from .documents import (ProblemDocument, document_to_lattice, parse_nerve,
                        parse_problem, serialize_document,
                        validate_document, validate_nerve_document)
from .main import build_parser, main, run
from .presets import PROBLEM_PRESETS, load_nerve, load_problem
from .reports import (Report, canonical_json, error_payload, jsonable,
                      render_extension, render_field_element, render_report,
                      render_text)

__all__ = [
    "PROBLEM_PRESETS",
    "ProblemDocument",
    "Report",
    "build_parser",
    "canonical_json",
    "document_to_lattice",
    "error_payload",
    "jsonable",
    "load_nerve",
    "load_problem",
    "main",
    "parse_nerve",
    "parse_problem",
    "render_extension",
    "render_field_element",
    "render_report",
    "render_text",
    "run",
    "serialize_document",
    "validate_document",
    "validate_nerve_document",
]
