"""Command-line front end: parse problem documents, dispatch, report.

Exit codes: 0 success, 2 input-validation failure (malformed documents,
schema violations, mathematically invalid inputs — every named library
error surfaces with its witness), 1 internal error.  Reports are written
to standard output in canonical JSON (default) or flat text; identical
invocations with the same seed produce byte-identical output.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, Optional

from ..classify.extensions import MODES, classify_extensions
from ..classify.homotopy import homotopy_groups, postnikov_report
from ..classify.nerve import PRESETS as NERVE_PRESETS
from ..classify.nerve import h2_free
from ..densegroup.autrho import aut_rho, out_rho
from ..densegroup.carriere import carriere_family
from ..densegroup.lattice import EmbeddedLattice
from ..errors import GrextError, SchemaError
from ..exactnum.pell import pell_fundamental
from ..grpd.ga import ga_word_eval
from ..grpd.verify import SUITES, verify_suite
from .documents import ProblemDocument, document_to_lattice, serialize_document
from .presets import load_nerve, load_problem
from .reports import (Report, error_payload, render_extension,
                      render_field_element, render_report)

DEFAULT_BUDGET = 1_000_000


def _lattice_flags(lat: EmbeddedLattice) -> dict:
    return {"dense": lat.dense,
            "density_checked": lat.density_checked,
            "orbit_space_non_hausdorff": lat.dense}


def _problem_inputs(doc: ProblemDocument) -> dict:
    return {"problem": serialize_document(doc)}


def _cmd_aut_rho(args) -> Report:
    doc = load_problem(args.input)
    lat = document_to_lattice(doc)
    desc = aut_rho(lat, args.bound)
    results = {
        "name": desc.name,
        "complete": desc.complete,
        "generators": [render_extension(g.extension)
                       for g in desc.generators],
        "t_matrices": [[list(r) for r in g.t_matrix]
                       for g in desc.generators],
        "extensions": [g.serialize()["extension"] for g in desc.generators],
    }
    if lat.ambient_dim == 1:
        rep = out_rho(lat, args.bound)
        results["int_name"] = rep.int_name
        results["out_name"] = rep.out.name
        results["gamma0_name"] = rep.gamma0_name
    flags = _lattice_flags(lat)
    flags["complete"] = desc.complete
    return Report(command="aut-rho", inputs=_problem_inputs(doc),
                  results=results, flags=flags)


def _cmd_classify(args) -> Report:
    doc = load_problem(args.input)
    lat = document_to_lattice(doc)
    nerve = load_nerve(args.nerve)
    rep = classify_extensions(lat, nerve, args.mode, bound=args.bound)
    inputs = _problem_inputs(doc)
    inputs["nerve"] = nerve.serialize()
    flags = _lattice_flags(lat)
    flags.update(rep.flags)
    return Report(command="classify", inputs=inputs,
                  results=rep.serialize(), flags=flags)


def _cmd_homotopy(args) -> Report:
    doc = load_problem(args.input)
    lat = document_to_lattice(doc)
    rep = homotopy_groups(lat, args.g, i_max=args.max, bound=args.bound)
    flags = _lattice_flags(lat)
    flags.update(rep.flags)
    return Report(command="homotopy", inputs=_problem_inputs(doc),
                  results=rep.serialize(), flags=flags)


def _cmd_postnikov(args) -> Report:
    doc = load_problem(args.input)
    lat = document_to_lattice(doc)
    rep = postnikov_report(lat, args.g, bound=args.bound)
    flags = _lattice_flags(lat)
    flags.update(rep.flags)
    return Report(command="postnikov", inputs=_problem_inputs(doc),
                  results=rep.serialize(), flags=flags)


def _cmd_verify(args) -> Report:
    doc = load_problem(args.input)
    lat = document_to_lattice(doc)
    rep = verify_suite(lat, suite=args.suite, samples=args.samples,
                       seed=args.seed)
    flags = _lattice_flags(lat)
    flags["all_checks_passed"] = rep.ok
    return Report(command="verify", inputs=_problem_inputs(doc),
                  results=rep.serialize(), flags=flags, seed=args.seed)


def _cmd_pell(args) -> Report:
    sol = pell_fundamental(args.d)
    results = {"d": sol.d, "x": sol.x, "y": sol.y, "norm": sol.norm}
    return Report(command="pell", inputs={"d": args.d}, results=results)


def _cmd_carriere(args) -> Report:
    if args.matrix is not None:
        parts = args.matrix.split(",")
        if len(parts) != 4:
            raise SchemaError("expected --matrix a,b,c,d (four integers)",
                              witness={"got": args.matrix})
        try:
            a, b, c, d = (int(p.strip()) for p in parts)
        except ValueError:
            raise SchemaError("matrix entries must be integers",
                              witness={"got": args.matrix})
        matrix = ((a, b), (c, d))
        inputs = {"matrix": [list(r) for r in matrix]}
    elif args.input is not None:
        doc = load_problem(args.input)
        if doc.ga_matrix is None:
            raise SchemaError("document has no ga_matrix",
                              witness={"path": "/ga_matrix"})
        matrix = doc.ga_matrix
        inputs = _problem_inputs(doc)
    else:
        raise SchemaError("carriere needs --matrix a,b,c,d or -i DOC",
                          witness={"got": None})
    rep = carriere_family(matrix)
    word = "A V1 A^-1"
    conj = ga_word_eval(rep, word)
    expected_b = rep.lam1 * rep.v1[1]
    holds = ((conj.a - rep.field.one()).is_zero()
             and (conj.b - expected_b).is_zero())
    results = rep.serialize()
    results["lam1_str"] = render_field_element(rep.lam1)
    results["lam2_str"] = render_field_element(rep.lam2)
    results["word_test"] = {
        "word": word,
        "result": {"a": conj.a.serialize(), "b": conj.b.serialize()},
        "translation_scaled_by_lam1": holds,
    }
    return Report(command="carriere", inputs=inputs, results=results)


def _cmd_nerve(args) -> Report:
    if args.preset is not None:
        nerve = NERVE_PRESETS[args.preset]()
        inputs = {"preset": args.preset}
    elif args.nerve is not None:
        nerve = load_nerve(args.nerve)
        inputs = {"nerve": nerve.serialize()}
    else:
        raise SchemaError("nerve needs --preset or -n DOC",
                          witness={"got": None})
    results = {
        "nerve": nerve.serialize(),
        "counts": {"vertices": len(nerve.vertices),
                   "edges": len(nerve.edges),
                   "triangles": len(nerve.triangles)},
        "euler_characteristic": nerve.euler_characteristic,
        "h2_free": h2_free(nerve).name,
    }
    return Report(command="nerve", inputs=inputs, results=results)


_COMMANDS: dict[str, Callable] = {
    "aut-rho": _cmd_aut_rho,
    "classify": _cmd_classify,
    "homotopy": _cmd_homotopy,
    "postnikov": _cmd_postnikov,
    "verify": _cmd_verify,
    "pell": _cmd_pell,
    "carriere": _cmd_carriere,
    "nerve": _cmd_nerve,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json",
                        help="report format (default json)")
    common.add_argument("--bound", type=int, default=5,
                        help="search bound for unit/automorphism discovery")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="state budget for enumerations "
                             "(GREXT_BUDGET overrides)")
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for interface stability; "
                             "never affects output bytes")

    parser = argparse.ArgumentParser(
        prog="grext",
        description="Exact calculator for automorphism groups of dense "
                    "translation lattices and classification of the "
                    "associated groupoid extensions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("aut-rho", parents=[common],
                       help="automorphism group of the lattice embedding")
    p.add_argument("-i", "--input", required=True,
                   help="problem document (preset name or JSON file)")

    p = sub.add_parser("classify", parents=[common],
                       help="classify extensions over a finite nerve")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-n", "--nerve", required=True,
                   help="nerve document (circle|sphere|torus or JSON file)")
    p.add_argument("--mode", choices=MODES, required=True)

    p = sub.add_parser("homotopy", parents=[common],
                       help="homotopy groups of the classifying spaces")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--g", choices=("R", "SU2"), default="R",
                   help="ambient group family")
    p.add_argument("--max", type=int, default=5,
                   help="largest degree reported")

    p = sub.add_parser("postnikov", parents=[common],
                       help="Postnikov tower report")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--g", choices=("R", "SU2"), default="R")

    p = sub.add_parser("verify", parents=[common],
                       help="seeded exact identity suites")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("pell", parents=[common],
                       help="fundamental solution of x^2 - d y^2 = +-1")
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("carriere", parents=[common],
                       help="exact eigen-data of an SL(2,Z) affine family")
    p.add_argument("--matrix", help="a,b,c,d row-major integers")
    p.add_argument("-i", "--input",
                   help="problem document with a ga_matrix")

    p = sub.add_parser("nerve", parents=[common],
                       help="validate and describe a finite nerve")
    p.add_argument("--preset", choices=sorted(NERVE_PRESETS))
    p.add_argument("-n", "--nerve", help="nerve JSON file")

    return parser


def run(argv: Optional[list[str]] = None) -> tuple[int, str]:
    """Parse argv, execute, and return (exit_code, report_text)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    env_budget = os.environ.get("GREXT_BUDGET")
    if env_budget is not None:
        try:
            args.budget = int(env_budget)
        except ValueError:
            exc = SchemaError("GREXT_BUDGET must be an integer",
                              witness={"got": env_budget})
            return 2, render_report(error_payload(args.command, exc),
                                    args.format)
    try:
        report = _COMMANDS[args.command](args)
    except (GrextError, ValueError) as exc:
        return 2, render_report(error_payload(args.command, exc), args.format)
    except Exception as exc:  # pragma: no cover - internal failure path
        return 1, render_report(error_payload(args.command, exc), args.format)
    return 0, render_report(report, args.format)


def main(argv: Optional[list[str]] = None) -> int:
    code, text = run(argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
