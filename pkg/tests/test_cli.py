"""Command-line behavior: exit codes, report shapes, text rendering."""

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from kgraph.cli import main, render_text

FIXDIR = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def fixture_path(name):
    return str(FIXDIR / f"{name}.json")


class TestFixtureCommand:
    @pytest.mark.parametrize("name", ["T2", "F", "D", "D2"])
    def test_matches_checked_in_file(self, capsys, name):
        code, out, _ = run(capsys, "fixture", name)
        assert code == 0
        assert out == (FIXDIR / f"{name}.json").read_text()

    def test_unknown_name_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["fixture", "T3"])
        assert info.value.code == 3

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "kgraph.cli", "fixture", "T2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == (FIXDIR / "T2.json").read_text()


class TestValidate:
    def test_valid_graph(self, capsys):
        code, data, _ = run_json(capsys, "validate", fixture_path("F"))
        assert code == 0
        assert data["verdict"] == "valid"
        assert len(data["reports"]) == 3

    def test_unsound_square_table(self, capsys, tmp_path):
        doc = json.loads((FIXDIR / "T2.json").read_text())
        doc["squares"] = []
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        code, data, _ = run_json(capsys, "validate", str(bad))
        assert code == 1
        assert data["verdict"] == "invalid"
        # skeleton report passed, square report did not, cubes never ran
        assert len(data["reports"]) == 2

    def test_malformed_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        code, out, err = run(capsys, "validate", str(bad))
        assert code == 3
        assert out == ""
        assert err.startswith("error: line 1 column ")

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "validate", "/no/such/file.json")
        assert code == 3
        assert "error:" in err


class TestScans:
    def test_periodic_graph_exits_one(self, capsys):
        code, data, _ = run_json(capsys, "aperiodic", fixture_path("T2"), "--bound", "1")
        assert code == 1
        assert data["verdict"] == "periodic"
        assert data["bound"] == 1
        assert data["p"] == [-1, -1]

    def test_aperiodic_graph_exits_zero(self, capsys):
        code, data, _ = run_json(capsys, "aperiodic", fixture_path("F"), "--bound", "1")
        assert code == 0
        assert data["verdict"] == "aperiodic"
        assert data["bound"] == 1

    def test_default_bound_is_reported(self, capsys):
        code, data, _ = run_json(capsys, "aperiodic", fixture_path("T2"))
        assert code == 1
        assert data["bound"] == 2

    def test_structurally_invalid_input_exits_three(self, capsys, tmp_path):
        doc = json.loads((FIXDIR / "T2.json").read_text())
        doc["squares"] = []
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        code, out, err = run(capsys, "aperiodic", str(bad))
        assert code == 3
        assert out == ""
        assert err


class TestSimple:
    def test_f_simple(self, capsys):
        code, data, _ = run_json(capsys, "simple", fixture_path("F"), "--bound", "2")
        assert code == 0
        assert data["summary"] == "Simple (up to bound 2)"
        assert data["bound"] == 2

    def test_t2_not_simple(self, capsys):
        code, data, _ = run_json(capsys, "simple", fixture_path("T2"), "--bound", "1")
        assert code == 1
        assert data["verdict"] == "not_simple"
        assert data["reason"] == "locally_periodic"

    def test_d_not_cofinal(self, capsys):
        code, data, _ = run_json(capsys, "simple", fixture_path("D"))
        assert code == 1
        assert data["reason"] == "not_cofinal"
        assert data["not_cofinal"] == ["u"]


class TestCofinal:
    def test_cofinal_graph(self, capsys):
        code, data, _ = run_json(capsys, "cofinal", fixture_path("F"))
        assert code == 0
        assert data == {"verdict": "cofinal"}

    def test_obstructed_graph(self, capsys):
        code, data, _ = run_json(capsys, "cofinal", fixture_path("D"))
        assert code == 1
        assert data == {"verdict": "not_cofinal", "certificate": ["u"]}

    def test_reads_standard_input(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO((FIXDIR / "F.json").read_text()))
        code, data, _ = run_json(capsys, "cofinal", "-")
        assert code == 0
        assert data["verdict"] == "cofinal"


class TestIdeals:
    def test_d_lattice(self, capsys):
        code, data, _ = run_json(capsys, "ideals", fixture_path("D"))
        assert code == 0
        assert data == {"count": 4, "sets": [[], ["u"], ["w"], ["u", "w"]]}

    def test_d2_lattice(self, capsys):
        code, data, _ = run_json(capsys, "ideals", fixture_path("D2"))
        assert code == 0
        assert data["sets"] == [[], ["u"], ["u", "w"]]


class TestQuotient:
    def test_collapse_d2(self, capsys):
        code, data, _ = run_json(capsys, "quotient", fixture_path("D2"), "--set", "u")
        assert code == 0
        assert data["vertices"] == ["w"]
        assert [e["id"] for e in data["edges"]] == ["bw", "rw"]
        assert data["squares"] == [{"pair": ["bw", "rw"], "image": ["rw", "bw"]}]

    def test_empty_set_reprints_the_graph(self, capsys):
        code, out, _ = run(capsys, "quotient", fixture_path("D"), "--set", "")
        assert code == 0
        assert out == (FIXDIR / "D.json").read_text()

    def test_non_hereditary_set(self, capsys):
        code, data, _ = run_json(capsys, "quotient", fixture_path("D2"), "--set", "w")
        assert code == 1
        assert data["verdict"] == "error"

    def test_full_set(self, capsys):
        code, data, _ = run_json(capsys, "quotient", fixture_path("T2"), "--set", "v")
        assert code == 1
        assert data["verdict"] == "error"


class TestUsageErrors:
    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 3

    def test_unknown_flag(self):
        with pytest.raises(SystemExit) as info:
            main(["simple", "x.json", "--frobnicate"])
        assert info.value.code == 3

    def test_non_integer_bound(self):
        with pytest.raises(SystemExit) as info:
            main(["simple", "x.json", "--bound", "soon"])
        assert info.value.code == 3

    # an integer bound below 1 passes argparse but is still bad input,
    # not a scan verdict
    def test_zero_bound_exits_3(self, capsys):
        code, _, err = run(capsys, "aperiodic", fixture_path("T2"), "--bound", "0")
        assert code == 3
        assert err.startswith("error: ")

    def test_zero_bound_on_simple_exits_3(self, capsys):
        code, _, err = run(capsys, "simple", fixture_path("F"), "--bound", "0")
        assert code == 3
        assert err.startswith("error: ")


class TestTextRendering:
    def test_mirrors_the_json_object(self, capsys):
        _, data, _ = run_json(capsys, "simple", fixture_path("F"), "--bound", "2")
        code, out, _ = run(capsys, "simple", fixture_path("F"), "--bound", "2", "--text")
        assert code == 0
        assert out.splitlines() == render_text(data)
        assert "summary: Simple (up to bound 2)" in out

    def test_lists_render_as_items(self):
        lines = render_text({"xs": [1, {"a": 2}]})
        assert lines == ["xs:", "  - 1", "  -", "    a: 2"]

    def test_scalar_roundtrip(self):
        assert render_text(True) == ["true"]
        assert render_text("plain") == ["plain"]
