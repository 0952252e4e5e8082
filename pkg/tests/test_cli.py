"""Command-line contract: parsing, dispatch, exit codes, determinism."""

from __future__ import annotations

import json

import pytest

from grext.cli import (
    PROBLEM_PRESETS,
    load_problem,
    parse_problem,
    render_field_element,
    run,
    serialize_document,
    validate_document,
    validate_nerve_document,
)
from grext.cli.reports import jsonable
from grext.errors import ParseError, SchemaError
from grext.exactnum.field import NumberField


def run_json(argv):
    code, text = run(argv + ["--format", "json"])
    return code, json.loads(text)


# ------------------------------------------------------------- documents


GOOD_DOC = {
    "field": {"min_poly": [-2, 0, 1], "root_interval": ["1", "2"]},
    "ambient_dim": 1,
    "lattice_basis": [["1,0"], ["0,1"]],
}


class TestProblemDocuments:
    def test_good_document_parses(self):
        doc = validate_document(GOOD_DOC)
        assert doc.min_poly == (-2, 0, 1)
        assert doc.ambient_dim == 1
        assert len(doc.lattice_basis) == 2

    def test_parse_problem_text(self):
        doc = parse_problem(json.dumps(GOOD_DOC))
        assert doc == validate_document(GOOD_DOC)

    def test_invalid_json_is_parse_error(self):
        with pytest.raises(ParseError) as ei:
            parse_problem("{nope")
        assert "line" in ei.value.witness

    def test_not_monic_pointer(self):
        bad = json.loads(json.dumps(GOOD_DOC))
        bad["field"]["min_poly"] = [-2, 0, 2]
        with pytest.raises(SchemaError) as ei:
            validate_document(bad)
        assert ei.value.witness["path"] == "/field/min_poly"

    def test_reversed_interval_pointer(self):
        bad = json.loads(json.dumps(GOOD_DOC))
        bad["field"]["root_interval"] = ["2", "1"]
        with pytest.raises(SchemaError) as ei:
            validate_document(bad)
        assert ei.value.witness["path"] == "/field/root_interval"

    def test_bad_ambient_dim_pointer(self):
        bad = json.loads(json.dumps(GOOD_DOC))
        bad["ambient_dim"] = 3
        with pytest.raises(SchemaError) as ei:
            validate_document(bad)
        assert ei.value.witness["path"] == "/ambient_dim"

    def test_bad_coefficient_vector_pointer(self):
        bad = json.loads(json.dumps(GOOD_DOC))
        bad["lattice_basis"][1] = ["0,1,5"]
        with pytest.raises(SchemaError) as ei:
            validate_document(bad)
        assert ei.value.witness["path"] == "/lattice_basis/1/0"

    def test_non_rational_interval_pointer(self):
        bad = json.loads(json.dumps(GOOD_DOC))
        bad["field"]["root_interval"] = ["1", "two"]
        with pytest.raises(SchemaError) as ei:
            validate_document(bad)
        assert ei.value.witness["path"] == "/field/root_interval/1"

    def test_bad_ga_matrix_pointer(self):
        with pytest.raises(SchemaError) as ei:
            validate_document({"ga_matrix": [[2, 1], [1, "1"]]})
        assert ei.value.witness["path"] == "/ga_matrix/1/1"

    def test_unknown_key_pointer(self):
        bad = json.loads(json.dumps(GOOD_DOC))
        bad["extra"] = 1
        with pytest.raises(SchemaError) as ei:
            validate_document(bad)
        assert ei.value.witness["path"] == "/extra"

    def test_empty_document_rejected(self):
        with pytest.raises(SchemaError):
            validate_document({})

    def test_round_trip_through_echo(self):
        doc = validate_document(GOOD_DOC)
        assert validate_document(serialize_document(doc)) == doc

    def test_round_trip_all_presets(self):
        for name in PROBLEM_PRESETS:
            doc = load_problem(name)
            assert validate_document(serialize_document(doc)) == doc


class TestNerveDocuments:
    def test_good_nerve(self):
        nerve = validate_nerve_document(
            {"vertices": [0, 1, 2], "edges": [[0, 1], [1, 2], [0, 2]]})
        assert len(nerve.edges) == 3

    def test_missing_vertices_pointer(self):
        with pytest.raises(SchemaError) as ei:
            validate_nerve_document({"edges": []})
        assert ei.value.witness["path"] == "/vertices"

    def test_bad_edge_pointer(self):
        with pytest.raises(SchemaError) as ei:
            validate_nerve_document({"vertices": [0, 1], "edges": [[0]]})
        assert ei.value.witness["path"] == "/edges/0"

    def test_bad_basepoint_pointer(self):
        with pytest.raises(SchemaError) as ei:
            validate_nerve_document(
                {"vertices": [0, 1], "edges": [[0, 1]], "basepoint": "a"})
        assert ei.value.witness["path"] == "/basepoint"


# --------------------------------------------------------------- presets


class TestPresets:
    def test_names_resolve(self):
        for name in ("lsqrt2", "cubic", "complex-alpha-sqrt2",
                     "carriere-211"):
            assert load_problem(name) is not None

    def test_json_suffix_resolves_to_preset(self):
        assert load_problem("lsqrt2.json") == load_problem("lsqrt2")

    def test_real_file_wins_when_it_exists(self, tmp_path):
        path = tmp_path / "prob.json"
        path.write_text(json.dumps(GOOD_DOC), encoding="utf-8")
        assert load_problem(str(path)) == validate_document(GOOD_DOC)

    def test_unknown_name_raises(self):
        with pytest.raises(ParseError) as ei:
            load_problem("never-a-preset")
        assert "presets" in ei.value.witness


# ------------------------------------------------------------ subcommands


class TestAutRhoCommand:
    def test_lsqrt2_pin(self):
        code, rep = run_json(["aut-rho", "-i", "lsqrt2"])
        assert code == 0
        res = rep["results"]
        assert res["name"] == "Z_2 x Z"
        assert res["complete"] is True
        assert res["generators"] == ["-1", "1+θ"]
        assert res["t_matrices"][1] == [[1, 2], [1, 1]]
        assert res["out_name"] == "Z_2 x Z"
        assert res["int_name"] == "trivial"
        assert rep["flags"]["dense"] is True
        assert rep["flags"]["density_checked"] is True

    def test_cubic_pin(self):
        code, rep = run_json(["aut-rho", "-i", "cubic"])
        assert code == 0
        assert rep["results"]["name"] == "Z_2"
        assert rep["results"]["generators"] == ["-1"]

    def test_plane_preset_reports_incomplete(self):
        code, rep = run_json(["aut-rho", "-i", "complex-alpha-sqrt2"])
        assert code == 0
        assert rep["results"]["complete"] is False
        assert rep["flags"]["density_checked"] is False

    def test_file_input(self, tmp_path):
        path = tmp_path / "doc.json"
        path.write_text(json.dumps(GOOD_DOC), encoding="utf-8")
        code, rep = run_json(["aut-rho", "-i", str(path)])
        assert code == 0
        assert rep["results"]["name"] == "Z_2 x Z"


class TestClassifyCommand:
    def test_circle_pointed(self):
        code, rep = run_json(["classify", "-i", "lsqrt2", "-n", "circle",
                              "--mode", "pointed-iso"])
        assert code == 0
        res = rep["results"]
        assert res["pi1"] == "Z"
        assert res["unit_group"] == "Z_2 x Z"
        assert res["description"] == (
            "maps of Z into Z_2 x Z ≅ elements of Z_2 x Z")

    def test_sphere_equivalence(self):
        code, rep = run_json(["classify", "-i", "lsqrt2", "-n", "sphere",
                              "--mode", "equivalence"])
        assert code == 0
        assert rep["results"]["fiber"] == "Z^2"

    def test_nerve_from_file(self, tmp_path):
        path = tmp_path / "nerve.json"
        path.write_text(json.dumps(
            {"vertices": [0, 1, 2], "edges": [[0, 1], [1, 2], [0, 2]]}),
            encoding="utf-8")
        code, rep = run_json(["classify", "-i", "lsqrt2", "-n", str(path),
                              "--mode", "pointed-iso"])
        assert code == 0
        assert rep["results"]["pi1"] == "Z"

    def test_bad_mode_is_usage_error(self):
        with pytest.raises(SystemExit) as ei:
            run(["classify", "-i", "lsqrt2", "-n", "circle",
                 "--mode", "up-to-hugs"])
        assert ei.value.code == 2


class TestHomotopyCommands:
    def test_homotopy_lsqrt2_r(self):
        code, rep = run_json(["homotopy", "-i", "lsqrt2", "--g", "R"])
        assert code == 0
        x = rep["results"]["X"]
        assert x["pi_1"] == "Z_2 x Z"
        assert x["pi_2"] == "Z^2"
        assert x["pi_3"] == "0"
        assert rep["results"]["B"]["pi_1"] == "Z^2"

    def test_homotopy_su2(self):
        code, rep = run_json(["homotopy", "-i", "lsqrt2", "--g", "SU2"])
        assert code == 0
        assert rep["results"]["X"]["pi_4"] == "Z"
        assert rep["results"]["X"]["pi_5"] == "Z_2"

    def test_postnikov_assertion_pin(self):
        code, rep = run_json(["postnikov", "-i", "lsqrt2", "--g", "R"])
        assert code == 0
        assert rep["results"]["assertion"] == (
            "X = X_(2): fiber K(Z^2,2) over K(Z_2 x Z,1)")

    def test_postnikov_su2(self):
        code, rep = run_json(["postnikov", "-i", "lsqrt2", "--g", "SU2"])
        assert code == 0
        assert rep["results"]["assertion"] == "X_(3) = X_(2)"


class TestVerifyCommand:
    def test_small_run_passes(self):
        code, rep = run_json(["verify", "-i", "lsqrt2", "--suite", "grpd",
                              "--samples", "25", "--seed", "7"])
        assert code == 0
        assert rep["flags"]["all_checks_passed"] is True
        assert rep["seed"] == 7
        assert all(law["failures"] == 0 for law in rep["results"]["laws"])

    def test_sequences_suite(self):
        code, rep = run_json(["verify", "-i", "lsqrt2", "--suite",
                              "sequences", "--samples", "10", "--seed", "1"])
        assert code == 0
        assert rep["results"]["sequences"]


class TestPellCommand:
    def test_d2_pin(self):
        code, rep = run_json(["pell", "--d", "2"])
        assert code == 0
        assert rep["results"] == {"d": 2, "x": 1, "y": 1, "norm": -1}

    def test_square_rejected(self):
        code, rep = run_json(["pell", "--d", "9"])
        assert code == 2
        assert rep["results"]["error"]["name"] == "PerfectSquare"


class TestCarriereCommand:
    def test_matrix_flag(self):
        code, rep = run_json(["carriere", "--matrix", "2,1,1,1"])
        assert code == 0
        res = rep["results"]
        assert res["trace"] == 3
        assert res["lam1_str"] == "3/2-1/2θ"
        assert res["lam2_str"] == "3/2+1/2θ"
        assert res["word_test"]["translation_scaled_by_lam1"] is True

    def test_preset_document(self):
        code, rep = run_json(["carriere", "-i", "carriere-211"])
        assert code == 0
        assert rep["results"]["matrix"] == [[2, 1], [1, 1]]

    def test_bad_matrix_string(self):
        code, rep = run_json(["carriere", "--matrix", "2,1,1"])
        assert code == 2
        assert rep["results"]["error"]["name"] == "SchemaError"

    def test_non_sl2_rejected(self):
        code, rep = run_json(["carriere", "--matrix", "2,0,0,2"])
        assert code == 2
        assert rep["results"]["error"]["name"] == "NotSL2"

    def test_missing_input_rejected(self):
        code, rep = run_json(["carriere"])
        assert code == 2


class TestNerveCommand:
    def test_presets(self):
        for name, counts in (("circle", [3, 3, 0]), ("sphere", [4, 6, 4]),
                             ("torus", [7, 21, 14])):
            code, rep = run_json(["nerve", "--preset", name])
            assert code == 0
            got = rep["results"]["counts"]
            assert [got["vertices"], got["edges"], got["triangles"]] == counts

    def test_file(self, tmp_path):
        path = tmp_path / "n.json"
        path.write_text(json.dumps(
            {"vertices": [0, 1, 2], "edges": [[0, 1], [1, 2], [0, 2]]}),
            encoding="utf-8")
        code, rep = run_json(["nerve", "-n", str(path)])
        assert code == 0
        assert rep["results"]["euler_characteristic"] == 0

    def test_bad_file_is_exit_2(self, tmp_path):
        path = tmp_path / "n.json"
        path.write_text(json.dumps(
            {"vertices": [0, 1, 2], "edges": [[0, 1]],
             "triangles": [[0, 1, 2]]}), encoding="utf-8")
        code, rep = run_json(["nerve", "-n", str(path)])
        assert code == 2
        assert rep["results"]["error"]["name"] == "MissingEdgeOfTriangle"


# ---------------------------------------------------------- exit contract


class TestExitContract:
    def test_schema_error_exits_2(self, tmp_path):
        path = tmp_path / "bad.json"
        doc = json.loads(json.dumps(GOOD_DOC))
        doc["field"]["min_poly"] = [-2, 0, 2]
        path.write_text(json.dumps(doc), encoding="utf-8")
        code, rep = run_json(["aut-rho", "-i", str(path)])
        assert code == 2
        err = rep["results"]["error"]
        assert err["name"] == "SchemaError"
        assert err["witness"]["path"] == "/field/min_poly"

    def test_parse_error_exits_2(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{oops", encoding="utf-8")
        code, rep = run_json(["aut-rho", "-i", str(path)])
        assert code == 2
        assert rep["results"]["error"]["name"] == "ParseError"

    def test_library_error_surfaces_with_witness(self, tmp_path):
        path = tmp_path / "dep.json"
        doc = {"field": {"min_poly": [-2, 0, 1], "root_interval": ["1", "2"]},
               "ambient_dim": 1,
               "lattice_basis": [["1,0"], ["2,0"]]}
        path.write_text(json.dumps(doc), encoding="utf-8")
        code, rep = run_json(["aut-rho", "-i", str(path)])
        assert code == 2
        err = rep["results"]["error"]
        assert err["name"] == "DependentGenerators"
        assert err["witness"] is not None

    def test_internal_error_exits_1(self, monkeypatch):
        import sys

        def boom(*args, **kwargs):
            raise RuntimeError("wires crossed")
        monkeypatch.setattr(sys.modules["grext.cli.main"], "aut_rho", boom)
        code, rep = run_json(["aut-rho", "-i", "lsqrt2"])
        assert code == 1
        assert rep["results"]["error"]["name"] == "RuntimeError"

    def test_missing_required_flag_is_usage_error(self):
        with pytest.raises(SystemExit) as ei:
            run(["aut-rho"])
        assert ei.value.code == 2

    def test_budget_env_override_bad_value(self, monkeypatch):
        monkeypatch.setenv("GREXT_BUDGET", "plenty")
        code, rep = run_json(["aut-rho", "-i", "lsqrt2"])
        assert code == 2
        assert rep["results"]["error"]["name"] == "SchemaError"

    def test_budget_env_override_good_value(self, monkeypatch):
        monkeypatch.setenv("GREXT_BUDGET", "5000")
        code, rep = run_json(["aut-rho", "-i", "lsqrt2"])
        assert code == 0


# ------------------------------------------------------------ determinism


DETERMINISM_CASES = [
    ["aut-rho", "-i", "lsqrt2"],
    ["aut-rho", "-i", "complex-alpha-sqrt2"],
    ["classify", "-i", "lsqrt2", "-n", "circle", "--mode", "pointed-iso"],
    ["homotopy", "-i", "lsqrt2", "--g", "R"],
    ["postnikov", "-i", "lsqrt2", "--g", "SU2"],
    ["verify", "-i", "lsqrt2", "--suite", "grpd", "--samples", "20",
     "--seed", "11"],
    ["pell", "--d", "7"],
    ["carriere", "--matrix", "2,1,1,1"],
    ["nerve", "--preset", "torus"],
]


class TestDeterminism:
    @pytest.mark.parametrize("argv", DETERMINISM_CASES,
                             ids=[c[0] + "-" + c[-1] for c in DETERMINISM_CASES])
    def test_byte_identical_repeat(self, argv):
        code1, text1 = run(argv)
        code2, text2 = run(argv)
        assert code1 == code2 == 0
        assert text1 == text2

    def test_threads_flag_never_changes_bytes(self):
        _, base = run(["aut-rho", "-i", "lsqrt2"])
        _, threaded = run(["aut-rho", "-i", "lsqrt2", "--threads", "8"])
        assert base == threaded

    def test_text_format_deterministic(self):
        _, a = run(["homotopy", "-i", "lsqrt2", "--format", "text"])
        _, b = run(["homotopy", "-i", "lsqrt2", "--format", "text"])
        assert a == b
        assert a.startswith("command: homotopy")

    def test_echoed_inputs_reparse(self):
        for name in ("lsqrt2", "cubic", "complex-alpha-sqrt2"):
            _, rep = run_json(["aut-rho", "-i", name])
            echoed = rep["inputs"]["problem"]
            assert validate_document(echoed) == load_problem(name)


# ------------------------------------------------------------- rendering


class TestRendering:
    def test_field_element_strings(self):
        f = NumberField.create((-2, 0, 1), 1, 2)
        cases = [((1, 1), "1+θ"), ((-1, 0), "-1"), ((0, 1), "θ"),
                 ((0, -2), "-2θ"), ((0, 0), "0"),
                 ((-3, -1), "-3-θ")]
        from fractions import Fraction
        for coeffs, want in cases:
            elt = f.element(tuple(Fraction(c) for c in coeffs))
            assert render_field_element(elt) == want
        half = f.element((Fraction(1, 2), Fraction(3, 2)))
        assert render_field_element(half) == "1/2+3/2θ"

    def test_cubic_power_term(self):
        f = NumberField.create((-1, -1, 0, 1), 1, 2)
        from fractions import Fraction
        elt = f.element((Fraction(0), Fraction(0), Fraction(1)))
        assert render_field_element(elt) == "θ^2"

    def test_jsonable_rejects_floats(self):
        with pytest.raises(TypeError):
            jsonable({"oops": 0.5})

    def test_jsonable_normalizes_fractions(self):
        from fractions import Fraction
        assert jsonable(Fraction(2, 4)) == "1/2"

    def test_json_output_has_sorted_keys(self):
        _, text = run(["pell", "--d", "2"])
        rep = json.loads(text)
        assert list(rep) == sorted(rep)
        assert text == json.dumps(rep, sort_keys=True, indent=2) + "\n"
