import io
import json
import subprocess
import sys

import pytest

from kummercover import catalog_lookup, parse_config
from kummercover.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def bad_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"degree":2,"curves":5,"points":{"2":10}}')
    return path


class TestAnalyze:
    def test_hesse_md(self, capsys):
        code, out, _ = run(capsys, "analyze", "hesse-conics", "--n-range", "2..5")
        assert code == 0
        for text in ("2.0625", "2.25", "2.2388", "13/6 (2.1667)"):
            assert text in out

    def test_hesse_json_exact(self, capsys):
        code, out, _ = run(capsys, "analyze", "hesse-conics", "--format", "json")
        doc = json.loads(out)
        slopes = [(r["slope"]["num"], r["slope"]["den"]) for r in doc["table"]]
        assert slopes == [(33, 16), (9, 4), (9, 4), (150, 67)]
        assert doc["gamma"] == {"num": 13, "den": 6}
        assert doc["polynomials"]["c2"] == {"a2": 54, "a1": -126, "a0": 84, "scale_exponent": 9}
        for row in doc["table"]:
            assert row["H_scaled"] == 3 * row["c2"] - row["c1sq"]
            assert row["H_scaled"] == row["n"] ** 9 * row["H"]
        assert [v["verdict"] for v in doc["ball_quotient"]] == ["excluded"] * 3

    def test_generic_conics(self, capsys):
        code, out, _ = run(capsys, "analyze", "generic-conics(4)", "--n-range", "2..2", "--format", "json")
        (row,) = json.loads(out)["table"]
        assert (row["c1sq"], row["c2"], row["slope"]) == (8, 40, {"num": 1, "den": 5})

    def test_file_and_stdin(self, capsys, tmp_path, monkeypatch):
        path = tmp_path / "dh.json"
        path.write_text('{"degree":1,"curves":9,"points":{"3":12}}')
        code, out, _ = run(capsys, "analyze", str(path), "--format", "json")
        assert code == 0 and json.loads(out)["gamma"] == {"num": 8, "den": 3}
        monkeypatch.setattr(sys, "stdin", io.StringIO(path.read_text()))
        code, out2, _ = run(capsys, "analyze", "-", "--format", "json")
        assert code == 0 and out2 == out

    def test_invalid_configuration(self, capsys, bad_file):
        code, out, _ = run(capsys, "analyze", str(bad_file), "--format", "json")
        assert code == 2
        doc = json.loads(out)
        assert doc["validation"]["violations"][0]["rule"] == "pairwise_identity"

    def test_parse_error(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"degree":2,"curves":4,"points":{"2":1.5}}')
        code, _, err = run(capsys, "analyze", str(path))
        assert code == 1 and "$.points['2']" in err

    def test_unknown_source(self, capsys):
        code, _, err = run(capsys, "analyze", "no-such-thing")
        assert code == 1 and "unknown catalog key" in err

    def test_gamma_undefined_exit(self, capsys, tmp_path):
        path = tmp_path / "pencil.json"
        path.write_text('{"degree":1,"curves":6,"points":{"5":1,"2":5}}')
        code, out, _ = run(capsys, "analyze", str(path), "--format", "json")
        assert code == 3
        doc = json.loads(out)
        assert doc["gamma"] is None and "gamma undefined" in doc["gamma_note"]

    def test_bad_n_range(self, capsys):
        assert main(["analyze", "hesse-conics", "--n-range", "1..3"]) == 1
        with pytest.raises(SystemExit) as info:
            main(["analyze", "hesse-conics", "--n-range", "5..3"])
        assert info.value.code == 1

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "analyze", "hesse-conics", "--format", "csv")
        assert code == 0
        assert "2,50688,24576,33,16,2.0625,45,23040" in out
        assert "# inequalities" in out

    def test_precision(self, capsys):
        _, out, _ = run(capsys, "analyze", "hesse-conics", "--precision", "2")
        assert "2.24" in out and "2.2388" not in out


class TestSearch:
    def test_lines(self, capsys):
        code, out, _ = run(capsys, "search", "-d", "1..1", "--tau", "6..100", "--format", "json")
        doc = json.loads(out)
        candidates = [r["tau"] for r in doc["rows"] if r["status"] == "combinatorial-candidate"]
        assert {39, 51, 63, 75, 87, 99} <= set(candidates)
        assert doc["summary"]["candidates"] == len(candidates)

    def test_conics_md(self, capsys):
        code, out, _ = run(capsys, "search", "--degree", "2..2", "--curves", "4..30")
        assert code == 0
        assert "combinatorial-candidate" not in out
        assert out.rstrip().endswith("0 combinatorial candidate(s) among 9 row(s)")

    def test_inverted_range(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["search", "-d", "4..3", "--tau", "4..10"])
        assert info.value.code == 1

    def test_csv(self, capsys):
        _, out, _ = run(capsys, "search", "-d", "2", "--tau", "9..9", "--format", "csv")
        assert "2,9,9,9,54,excluded-nonzero-H" in out


class TestCatalog:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "catalog", "list")
        assert out.split() == ["hesse-conics", "dual-hesse", "generic-conics", "L", "C"]

    def test_show_dual_hesse(self, capsys):
        code, out, _ = run(capsys, "catalog", "show", "dual-hesse", "--format", "json")
        doc = json.loads(out)
        assert {k: doc[k] for k in ("degree", "curves", "points")} == {"degree": 1, "curves": 9, "points": {"3": 12}}

    def test_show_L2_fails(self, capsys):
        code, _, err = run(capsys, "catalog", "show", "L(2)")
        assert code == 1 and "m >= 3" in err

    @pytest.mark.parametrize("key", ["hesse-conics", "dual-hesse", "generic-conics(7)", "L(5)", "C(2,12)"])
    def test_round_trip(self, capsys, key):
        for fmt in ("json", "md"):
            _, out, _ = run(capsys, "catalog", "show", key, "--format", fmt)
            assert parse_config(out) == catalog_lookup(key)


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "kummercover", "analyze", "L(4)", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["ball_quotient"][0]["verdict"] == "candidate"
