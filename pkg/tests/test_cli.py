"""End-to-end CLI behavior: JSON documents, exit codes, determinism."""

import json

import pytest

from gorlef.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestSeqCheck:
    def test_si_sequence(self, capsys):
        code, doc = run_json(capsys, "seq", "check", "1,3,5,5,3,1")
        assert code == 0
        assert doc["is_O_sequence"] and doc["is_SI"]
        # the full symmetric sequence has a negative first difference,
        # so plain differentiability reports False even though SI holds
        assert doc["is_differentiable"] is False
        assert doc["hbar"] == {"t": 2, "s": 5, "values": [1, 3, 5],
                               "delta": [1, 2, 2]}

    def test_differentiable_first_half(self, capsys):
        code, doc = run_json(capsys, "seq", "check", "1,3,5")
        assert code == 0
        assert doc["is_differentiable"] is True

    def test_o_sequence_but_not_si(self, capsys):
        code, doc = run_json(capsys, "seq", "check", "1,13,12,13,1")
        assert code == 0
        assert doc["is_O_sequence"] is True
        assert doc["is_SI"] is False
        assert doc["hbar"] is None

    def test_not_o_sequence(self, capsys):
        code, doc = run_json(capsys, "seq", "check", "1,2,5")
        assert code == 0
        assert doc["is_O_sequence"] is False

    def test_invalid_input_is_exit_two(self, capsys):
        code, doc = run_json(capsys, "seq", "check", "1,-2,3")
        assert code == 2
        assert "error" in doc


class TestConstruct:
    def test_flagship(self, capsys):
        code, doc = run_json(capsys, "construct", "--h", "1,3,5,5,3,1",
                             "--seed", "42")
        assert code == 0
        assert doc["h"] == [1, 3, 5, 5, 3, 1]
        assert doc["hilbert"] == [1, 3, 5, 5, 3, 1]
        assert doc["certificate"]["verdict"] is True

    def test_byte_identical_reruns(self, capsys):
        args = ("construct", "--h", "1,3,5,5,3,1", "--seed", "42")
        code1, out1 = run(capsys, *args)
        code2, out2 = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert out1.endswith("}\n")

    def test_seed_changes_output(self, capsys):
        _, out1 = run(capsys, "construct", "--h", "1,2,2,1", "--seed", "1")
        _, out2 = run(capsys, "construct", "--h", "1,2,2,1", "--seed", "2")
        assert out1 != out2

    def test_not_si_is_exit_two(self, capsys):
        code, doc = run_json(capsys, "construct", "--h", "1,13,12,13,1")
        assert code == 2
        assert doc["error"]["type"] == "NotSIError"

    def test_exhausted_search_is_exit_one(self, capsys):
        code, doc = run_json(capsys, "construct", "--h", "1,2,1",
                             "--attempts", "0")
        assert code == 1
        assert doc["error"]["type"] == "NoWitnessFoundError"
        assert doc["error"]["diagnostics"]["attempts"] == 0


class TestAnalyze:
    POLY = json.dumps({"n_vars": 3, "ring": "R",
                       "terms": [{"exp": [3, 0, 0], "coef": "1"},
                                 {"exp": [0, 3, 0], "coef": "1"},
                                 {"exp": [0, 0, 3], "coef": "1"}]})

    def test_poly_input(self, capsys):
        code, doc = run_json(capsys, "analyze", "--poly", self.POLY)
        assert code == 0
        assert doc["hilbert"] == [1, 3, 3, 1]
        assert doc["codimension"] == 3
        assert doc["slp"]["verdict"] is True
        assert doc["wlp"]["verdict"] is True

    def test_poly_from_file(self, capsys, tmp_path):
        path = tmp_path / "f.json"
        path.write_text(self.POLY)
        code, doc = run_json(capsys, "analyze", "--poly", str(path))
        assert code == 0
        assert doc["hilbert"] == [1, 3, 3, 1]

    def test_structured_input(self, capsys):
        points = json.dumps({"points": [["1", "0"], ["1", "1"], ["1", "2"]]})
        code, doc = run_json(capsys, "analyze", "--points", points,
                             "--alphas", "1,1,-1", "--d", "4",
                             "--expect-slp")
        assert code == 0
        assert doc["hilbert"] == [1, 2, 3, 2, 1]
        assert doc["slp"]["verdict"] is True

    def test_expect_slp_fails_without_witness(self, capsys):
        code, doc = run_json(capsys, "analyze", "--poly", self.POLY,
                             "--attempts", "0", "--expect-slp")
        assert code == 1
        assert doc["slp"]["verdict"] is False

    def test_missing_input_is_exit_two(self, capsys):
        code, doc = run_json(capsys, "analyze", "--alphas", "1,1")
        assert code == 2
        assert "error" in doc


class TestPointsGen:
    def test_generic(self, capsys):
        code, doc = run_json(capsys, "points", "gen", "--kind", "generic",
                             "--n", "2", "--s", "5", "--seed", "7")
        assert code == 0
        assert doc["size"] == 5
        assert doc["hilbert"] == [1, 3, 5]
        assert doc["tau"] == 2
        assert "davis_hint" in doc

    def test_two_lines(self, capsys):
        code, doc = run_json(capsys, "points", "gen", "--kind", "two-lines",
                             "--s1", "3", "--s2", "3")
        assert code == 0
        assert doc["size"] == 6 and doc["tau"] == 3
        assert doc["delta"] == [1, 2, 2, 1]

    def test_two_lines_missing_args(self, capsys):
        code, doc = run_json(capsys, "points", "gen", "--kind", "two-lines")
        assert code == 2

    def test_rnc_with_params(self, capsys):
        code, doc = run_json(capsys, "points", "gen", "--kind", "rnc",
                             "--n", "3", "--s", "7", "--params",
                             "0,1,2,3,4,5,6")
        assert code == 0
        assert doc["size"] == 7 and doc["tau"] == 2

    def test_distraction(self, capsys):
        code, doc = run_json(capsys, "points", "gen", "--kind", "distraction",
                             "--delta", "1,2,2")
        assert code == 0
        assert doc["size"] == 5
        assert len(doc["order_ideal"]) == 5
        assert [0, 0] in doc["order_ideal"]

    def test_collinear(self, capsys):
        code, doc = run_json(capsys, "points", "gen", "--kind", "collinear",
                             "--n", "2", "--s", "4")
        assert code == 0
        assert doc["delta"] == [1, 1, 1, 1]
        assert doc["davis_hint"] is not None


class TestVerify:
    def test_rnc_default_degree(self, capsys):
        code, doc = run_json(capsys, "verify", "--theorem", "rnc", "--s", "5")
        assert code == 0
        assert doc["d"] == 4 and doc["verdict"] is True
        assert doc["certificate"]["verdict"] is True

    def test_conic(self, capsys):
        code, doc = run_json(capsys, "verify", "--theorem", "conic",
                             "--s1", "3", "--s2", "3", "--eval-points", "2")
        assert code == 0
        assert doc["d"] == 6 and doc["display_match"] is True
        assert doc["decomposition_checks"] > 0

    def test_tails(self, capsys):
        code, doc = run_json(capsys, "verify", "--theorem", "tails",
                             "--kind", "line", "--tau", "3", "--off", "1",
                             "--trials", "5")
        assert code == 0
        assert doc["k"] == 2 and doc["tau"] == 3
        assert [w["j"] for w in doc["witnesses"]] == [1, 2, 3]
        assert all(w["det"] != "0" for w in doc["witnesses"])

    def test_tails_infeasible_is_exit_one(self, capsys):
        code, doc = run_json(capsys, "verify", "--theorem", "tails",
                             "--kind", "conic", "--tau", "2", "--off", "1")
        assert code == 1
        assert doc["error"]["type"] == "ShapeMismatchError"

    def test_families(self, capsys):
        code, doc = run_json(capsys, "verify", "--theorem", "families",
                             "--m", "2")
        assert code == 0
        assert len(doc["results"]) == 5
        assert all(r["verdict"] for r in doc["results"])

    def test_s_minus(self, capsys):
        code, doc = run_json(capsys, "verify", "--theorem", "s-minus",
                             "--s", "7", "--d", "6", "--j", "2")
        assert code == 0
        assert doc["det"] != "0"

    def test_missing_required_flag(self, capsys):
        code, doc = run_json(capsys, "verify", "--theorem", "rnc")
        assert code == 2


class TestPlumbing:
    def test_out_file_matches_stdout(self, capsys, tmp_path):
        path = tmp_path / "doc.json"
        code, out = run(capsys, "seq", "check", "1,3,3,1", "--out", str(path))
        assert code == 0
        assert path.read_text() == out

    def test_json_is_pretty_printed(self, capsys):
        _, out = run(capsys, "seq", "check", "1,1")
        assert out.startswith("{\n  ")
        assert out.endswith("\n")

    def test_unknown_command_is_exit_two(self, capsys):
        assert main(["frobnicate"]) == 2
        capsys.readouterr()

    def test_no_command_is_exit_two(self, capsys):
        assert main([]) == 2
        capsys.readouterr()

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        out = capsys.readouterr().out
        assert "gorlef" in out
