"""Spec-file parsing, commands, exit codes, output determinism."""

import json
from pathlib import Path

import pytest

from ascart import GF, parse_spec_text, validate
from ascart.cartier import CartierMatrix
from ascart.cli import main
from ascart.errors import DuplicatePoleLocation, ParseError, PoleOrderDivisibleByP

CURVES = Path(__file__).resolve().parent.parent / "curves"

CUBIC = "p = 7\npole inf: 0 0 0 1\n"
TWO_POLE = "p = 3\npole inf: 0 0 1\npole 1: 1\n"


def write(tmp_path, text, name="c.curve"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


class TestParse:
    def test_cubic(self):
        spec = parse_spec_text(CUBIC)
        assert spec.field == GF(7)
        assert validate(spec).orders == (3,)

    def test_comments_and_blanks(self):
        spec = parse_spec_text("# curve\n\np = 7  # char\n\npole inf: 0 0 0 1\n")
        assert validate(spec).g == 6

    def test_negative_and_large_ints_reduced(self):
        spec = parse_spec_text("p = 5\npole inf: 0 -1 6\n")
        assert spec.poles[0].coeffs == (GF(5)(0), GF(5)(4), GF(5)(1))

    def test_extension_field_tuples(self):
        spec = parse_spec_text(
            "p = 3\nfield_degree = 2\npole inf: 1 (0,1) 2\npole (0,1): (1,1)\n"
        )
        F = GF(3, 2)
        assert spec.field == F
        assert spec.poles[1].location == F.gen

    def test_duplicate_pole_location(self):
        with pytest.raises(DuplicatePoleLocation):
            parse_spec_text("p = 5\npole inf: 0 1\npole 3: 1\npole 3: 2\n")

    def test_validation_runs(self):
        with pytest.raises(PoleOrderDivisibleByP):
            parse_spec_text("p = 3\npole inf: 0 0 0 1\n")

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("pole inf: 0 1\n", "p must be set"),
            ("p = 7\np = 7\npole inf: 0 1\n", "twice"),
            ("p = 7\nwidth = 2\npole inf: 0 1\n", "unknown key"),
            ("p = 7\npole inf 0 1\n", "pole"),
            ("p = 7\npole inf: (1,2\n", "unterminated"),
            ("p = 7\npole inf: zz\n", "bad field element"),
            ("p = 7\npole inf:\n", "no coefficients"),
            ("p = 7\nnonsense line\n", "cannot parse"),
            ("p = 7\n", "no poles"),
            ("", "does not set p"),
            ("p = 3\nfield_degree = 1\npole inf: 0 1\nfield_degree = 2\n", "before the poles"),
        ],
    )
    def test_parse_errors(self, text, fragment):
        with pytest.raises(ParseError) as exc:
            parse_spec_text(text)
        assert fragment in str(exc.value)

    def test_shipped_examples_parse(self):
        for path in CURVES.glob("*.curve"):
            if path.name == "p5_x3.curve":
                continue  # valid too, just not theorem-applicable
            spec = parse_spec_text(path.read_text())
            assert validate(spec).g >= 0


class TestCommands:
    def test_info(self, tmp_path, capsys):
        assert main(["info", write(tmp_path, CUBIC)]) == 0
        out = capsys.readouterr().out
        assert "genus g = 6" in out
        assert "p-rank s = 0" in out

    def test_info_invalid_returns_2(self, tmp_path, capsys):
        path = write(tmp_path, "p = 3\npole inf: 0 0 0 1\n")
        assert main(["info", path]) == 2
        assert "invalid curve" in capsys.readouterr().out

    def test_info_json(self, tmp_path, capsys):
        assert main(["info", write(tmp_path, TWO_POLE), "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["genus"] == 3 and data["p_rank"] == 2 and data["valid"]

    def test_missing_file_returns_2(self, capsys):
        assert main(["info", "/nonexistent.curve"]) == 2

    def test_matrix_json_round_trip(self, tmp_path, capsys):
        assert main(["matrix", write(tmp_path, CUBIC), "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        M = CartierMatrix.from_json(data)
        assert M.dimension == 6
        assert M.entry(0, 4) == GF(7)(1)  # row dx, column y^2 dx
        assert M.entry(2, 5) == GF(7)(3)  # row y dx, column y^3 dx
        assert M.to_json() == data

    def test_matrix_both_pipelines(self, tmp_path, capsys):
        assert main(["matrix", write(tmp_path, TWO_POLE), "--pipeline", "both"]) == 0
        assert "pipelines agree: True" in capsys.readouterr().out

    def test_anumber(self, tmp_path, capsys):
        assert main(["anumber", write(tmp_path, CUBIC), "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data == {
            "genus": 6, "rank": 2, "a_rank": 4, "a_formula": 4, "match": True,
        }

    def test_anumber_formula_only(self, tmp_path, capsys):
        assert main(["anumber", write(tmp_path, CUBIC), "--method", "formula"]) == 0
        assert "= 4" in capsys.readouterr().out

    def test_anumber_rank_only(self, tmp_path, capsys):
        path = write(tmp_path, "p = 5\npole inf: 0 0 0 1\n")  # formula N/A
        assert main(["anumber", path, "--method", "rank", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert set(data) == {"genus", "rank", "a_rank"}

    def test_anumber_formula_not_applicable(self, tmp_path):
        path = write(tmp_path, "p = 5\npole inf: 0 0 0 1\n")
        assert main(["anumber", path, "--method", "formula"]) == 2

    def test_verify_ok(self, tmp_path, capsys):
        assert main(["verify", write(tmp_path, CUBIC)]) == 0
        assert "VERIFIED" in capsys.readouterr().out

    def test_verify_condition_not_satisfied(self, tmp_path, capsys):
        path = write(tmp_path, "p = 5\npole inf: 0 0 0 1\n")
        assert main(["verify", path]) == 2
        assert "not 1 mod" in capsys.readouterr().err

    def test_zeta(self, tmp_path, capsys):
        path = write(tmp_path, "p = 3\npole inf: 0 0 1\n")
        assert main(["zeta", path, "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["l"] == [1, 0, 3]
        assert data["newton"] == [[1, 2, 2]]
        assert data["hodge"] == [[1, 2, 1]]
        assert data["comparison"] == "equal"
        assert data["counts"] == [4]

    def test_oracle(self, tmp_path, capsys):
        assert main(["oracle", write(tmp_path, TWO_POLE), "--json"]) == 0
        assert json.loads(capsys.readouterr().out)["pipelines_agree"]

    def test_shipped_gf9_curve(self, capsys):
        assert main(["verify", str(CURVES / "p3_gf9_twopole.curve")]) == 0


class TestSweepCommand:
    ARGS = ["sweep", "--p", "7", "--orders", "3", "--samples", "8", "--seed", "5"]

    def test_deterministic_bytes(self, capsys):
        assert main(self.ARGS) == 0
        first = capsys.readouterr().out
        assert main(self.ARGS) == 0
        assert capsys.readouterr().out == first
        assert "pass: True" in first
        assert "generator: sha256-split/mt19937" in first

    def test_csv(self, tmp_path, capsys):
        csv_path = tmp_path / "sweep.csv"
        assert main(self.ARGS + ["--csv", str(csv_path)]) == 0
        capsys.readouterr()
        lines = csv_path.read_text().splitlines()
        assert lines[0] == "sample,seed,a,s,g,rank"
        assert len(lines) == 9
        for line in lines[1:]:
            sample, seed, a, s, g, rank = line.split(",")
            assert (a, s, g, rank) == ("4", "0", "6", "2")

    def test_json(self, capsys):
        assert main(self.ARGS + ["--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["pass"] is True
        assert data["theorem_a"] == 4
        assert len(data["results"]) == 8

    def test_exploratory_regime(self, capsys):
        # 3 != 1 mod 4: per-sample values reported, no verdict
        assert main(["sweep", "--p", "3", "--orders", "4", "--samples", "5",
                     "--seed", "1", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["pass"] is None
        assert data["theorem_a"] is None
        assert len(data["results"]) == 5

    def test_extension_field(self, capsys):
        assert main(["sweep", "--p", "3", "--orders", "2,1", "--field-degree",
                     "2", "--samples", "5", "--seed", "2", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["pass"] is True
        assert all(r["a"] == 1 and r["s"] == 2 for r in data["results"])

    def test_invalid_orders(self, capsys):
        assert main(["sweep", "--p", "3", "--orders", "3", "--samples", "2"]) == 2
        assert main(["sweep", "--p", "3", "--orders", "2,,1"]) == 2

    def test_field_too_small(self, capsys):
        # 4 distinct finite poles cannot fit in GF(3)
        assert main(["sweep", "--p", "3", "--orders", "2,1,1,1,1", "--samples", "1"]) == 2
