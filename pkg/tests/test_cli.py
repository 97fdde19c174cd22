"""End-to-end CLI tests driven through main() with on-disk files."""

import csv
import io
import json

import pytest

from ringlat.cli import main
from ringlat.formats import format_matrix_text
from ringlat.matrix import IntMatrix

WITNESS_TEXT = "3\n6 -8 -5\n3 -7 -4\n6 1 -1\n"


@pytest.fixture
def witness_file(tmp_path):
    p = tmp_path / "counterexample.txt"
    p.write_text(WITNESS_TEXT)
    return str(p)


@pytest.fixture
def diag12_file(tmp_path):
    p = tmp_path / "diag-1-2.txt"
    p.write_text("2\n1 0\n0 2\n")
    return str(p)


class TestIdentify:
    def test_witness_exits_zero_with_class(self, witness_file, capsys):
        assert main(["identify", witness_file, "--json"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["ideal"] is True
        assert out["d"] == "1"

    def test_witness_class_contains_documented_ring(self, witness_file, capsys):
        from ringlat.formats import ring_class_from_json
        from ringlat.identify import class_contains
        from ringlat.polyring import parse_poly

        main(["identify", witness_file, "--json"])
        rc = ring_class_from_json(json.loads(capsys.readouterr().out))
        assert class_contains(rc, parse_poly("x^3+3x^2+x-3"))

    def test_not_ideal_exits_one(self, diag12_file, capsys):
        assert main(["identify", diag12_file]) == 1
        assert "not ideal" in capsys.readouterr().out

    def test_no_precheck_same_outcome(self, witness_file, diag12_file):
        assert main(["identify", witness_file, "--no-precheck"]) == 0
        assert main(["identify", diag12_file, "--no-precheck"]) == 1

    def test_malformed_matrix_exits_two(self, tmp_path, capsys):
        p = tmp_path / "bad.txt"
        p.write_text("2\n1 zebra\n0 1\n")
        assert main(["identify", str(p)]) == 2
        err = capsys.readouterr().err
        assert "line 2" in err

    def test_missing_file_exits_two(self):
        assert main(["identify", "/nonexistent/matrix.txt"]) == 2

    def test_stdin_input(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(WITNESS_TEXT))
        assert main(["identify", "-"]) == 0


class TestVerify:
    def test_documented_ring_ok(self, witness_file):
        assert main(["verify", witness_file, "x^3+3x^2+x-3"]) == 0
        assert main(["verify", witness_file, "[-3,1,3]"]) == 0

    def test_wrong_ring_fails(self, witness_file):
        assert main(["verify", witness_file, "x^3+x+1"]) == 1

    def test_bad_poly_exits_two(self, witness_file):
        assert main(["verify", witness_file, "3x^3+1"]) == 2


class TestGenSampleFlow:
    def test_gen_writes_basis(self, tmp_path, capsys):
        out = tmp_path / "basis.txt"
        assert main(["gen", "--f", "x^2+1", "--g", "[0,1]", "-o", str(out)]) == 0
        assert out.read_text() == format_matrix_text(IntMatrix([[0, 1], [-1, 0]]))

    def test_gen_degenerate_generator(self, capsys):
        assert main(["gen", "--f", "x^2-1", "--g", "[1,1]"]) == 1

    def test_identify_then_verify_every_sample(self, witness_file, tmp_path, capsys):
        main(["identify", witness_file, "--json"])
        class_file = tmp_path / "class.json"
        class_file.write_text(capsys.readouterr().out)
        assert main(["sample", str(class_file), "-k", "6", "--seed", "11", "--json"]) == 0
        polys = json.loads(capsys.readouterr().out)["polys"]
        assert len(polys) == 6
        for coeffs in polys:
            as_list = "[" + ",".join(coeffs) + "]"
            assert main(["verify", witness_file, as_list]) == 0

    def test_sample_deterministic(self, witness_file, tmp_path, capsys):
        main(["identify", witness_file, "--json"])
        class_file = tmp_path / "class.json"
        class_file.write_text(capsys.readouterr().out)
        main(["sample", str(class_file), "-k", "4", "--seed", "5"])
        first = capsys.readouterr().out
        main(["sample", str(class_file), "-k", "4", "--seed", "5"])
        assert capsys.readouterr().out == first


class TestDl:
    def test_witness_prints_false(self, witness_file, capsys):
        assert main(["dl", witness_file]) == 1
        assert capsys.readouterr().out.strip() == "false"

    def test_accepting_instance(self, tmp_path, capsys):
        from ringlat.harness import random_principal
        from ringlat.dinglindner import dl_identify

        for trial in range(40):
            _, _, b = random_principal(4, 3, 5000 + trial)
            if dl_identify(b) is not None:
                p = tmp_path / "pos.txt"
                p.write_text(format_matrix_text(b))
                assert main(["dl", str(p)]) == 0
                assert capsys.readouterr().out.startswith("[")
                return
        pytest.fail("no accepting instance found in the corpus")


class TestSweeps:
    def test_density_csv(self, tmp_path, capsys):
        out = tmp_path / "density.csv"
        assert main(["density", "--dims", "1,2", "--bounds", "1", "--trials", "20", "--seed", "3", "-o", str(out)]) == 0
        rows = list(csv.reader(io.StringIO(out.read_text())))
        assert rows[0] == ["dim", "bound", "trials", "ideal_count", "proportion", "seed"]
        assert len(rows) == 3
        assert rows[1][0] == "1" and float(rows[1][4]) == 1.0

    def test_bench_csv_with_svg(self, tmp_path):
        out = tmp_path / "bench.csv"
        svg = tmp_path / "bench.svg"
        code = main(
            [
                "bench", "--dims", "2,3", "--bounds", "2", "--trials", "2",
                "--mode", "principal-ideal", "--no-warmup", "--seed", "1",
                "-o", str(out), "--svg", str(svg),
            ]
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out.read_text())))
        assert rows[0] == ["dim", "bound", "trials", "mode", "mean_seconds", "seed"]
        assert len(rows) == 3
        assert svg.exists()


class TestUsage:
    def test_no_command_exits_two(self, capsys):
        assert main([]) == 2

    def test_unknown_command_exits_two(self, capsys):
        assert main(["frobnicate"]) == 2
