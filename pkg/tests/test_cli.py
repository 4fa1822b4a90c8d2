import json

import pytest

from bishift import io as formats
from bishift.cli import main
from bishift.fields import FloatField, PrimeField, RationalField
from bishift.sequences import FiniteSeq, PeriodicSeq

Q = RationalField()
GF2 = PrimeField(2)
F = FloatField()

DIFFERENCE_DOC = {
    "rank": 1,
    "field": "gf:2",
    "k": 1,
    "l": 1,
    "entries": [["X - X^-1"]],
}


@pytest.fixture
def difference_file(tmp_path):
    path = tmp_path / "system.json"
    path.write_text(json.dumps(DIFFERENCE_DOC))
    return path


class TestPair:
    def test_weighted_golden(self, tmp_path, capsys):
        seq = tmp_path / "w.csv"
        seq.write_text("-1,3\n2,4\n")
        code = main(["pair", "--poly", "X^-1 + 2*X^2", "--seq", str(seq)])
        assert code == 0
        assert capsys.readouterr().out.strip() == "11"

    def test_symmetric_golden(self, tmp_path, capsys):
        seq = tmp_path / "w.csv"
        seq.write_text("-1,1\n1,2\n")
        code = main(["pair", "--poly", "X^-1 + X", "--seq", str(seq)])
        assert code == 0
        assert capsys.readouterr().out.strip() == "3"

    def test_zero_poly(self, tmp_path, capsys):
        seq = tmp_path / "w.csv"
        seq.write_text("0,5\n")
        code = main(["pair", "--poly", "0", "--seq", str(seq)])
        assert code == 0
        assert capsys.readouterr().out.strip() == "0"

    def test_parse_error_exits_2(self, tmp_path, capsys):
        seq = tmp_path / "w.csv"
        seq.write_text("0,5\n")
        code = main(["pair", "--poly", "X^", "--seq", str(seq)])
        assert code == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "error" in captured.err


class TestFilter:
    def test_smoothing_case_study(self, tmp_path, capsys):
        inp = tmp_path / "in.csv"
        inp.write_text("-1,1\n0,2\n1,3\n")
        out = tmp_path / "out.csv"
        code = main(
            [
                "filter",
                "--kernel",
                "0.5*X^-1 + 0.5*X",
                "--input",
                str(inp),
                "--output",
                str(out),
                "--field",
                "float",
            ]
        )
        assert code == 0
        # interior samples smooth to (1, 2, 1); the defining sum also
        # produces the edge samples 0.5 and 1.5
        assert out.read_text().splitlines() == [
            "-2,0.5",
            "-1,1.0",
            "0,2.0",
            "1,1.0",
            "2,1.5",
        ]

    def test_identity_kernel(self, tmp_path):
        inp = tmp_path / "in.csv"
        inp.write_text("-4,7\n9,1/3\n")
        out = tmp_path / "out.csv"
        assert main(["filter", "--kernel", "1", "--input", str(inp), "--output", str(out)]) == 0
        assert formats.read_seq_csv(out, 1, Q) == formats.read_seq_csv(inp, 1, Q)

    def test_monomial_kernel_moves_delta(self, tmp_path):
        inp = tmp_path / "in.csv"
        inp.write_text("0,1\n")
        out = tmp_path / "out.csv"
        assert main(["filter", "--kernel", "X", "--input", str(inp), "--output", str(out)]) == 0
        assert formats.read_seq_csv(out, 1, Q) == FiniteSeq.delta(1, Q, (-1,))

    def test_shift_alias(self, tmp_path):
        inp = tmp_path / "in.csv"
        inp.write_text("0,1\n")
        out = tmp_path / "out.csv"
        assert main(["shift", "--kernel", "X", "--input", str(inp), "--output", str(out)]) == 0
        assert formats.read_seq_csv(out, 1, Q) == FiniteSeq.delta(1, Q, (-1,))

    def test_pgm_requires_float_field(self, tmp_path, capsys):
        img = tmp_path / "img.pgm"
        img.write_bytes(b"P5\n1 1\n255\n\x7f")
        out = tmp_path / "out.pgm"
        code = main(
            ["filter", "--kernel", "1", "--input", str(img), "--output", str(out), "--pgm"]
        )
        assert code == 2

    def test_pgm_filtering(self, tmp_path):
        img = tmp_path / "img.pgm"
        img.write_bytes(b"P5\n3 1\n255\n" + bytes([0, 200, 0]))
        out = tmp_path / "out.pgm"
        code = main(
            [
                "filter",
                "--kernel",
                "0.5*X1^-1 + 0.5*X1",
                "--input",
                str(img),
                "--output",
                str(out),
                "--pgm",
                "--field",
                "float",
            ]
        )
        assert code == 0
        seq, w, h, maxval = formats.read_pgm(out)
        assert (w, h, maxval) == (3, 1, 255)
        assert round(seq.coeff((0, 0)).payload * 255) == 100
        assert seq.coeff((1, 0)).payload == 0.0
        assert round(seq.coeff((2, 0)).payload * 255) == 100


class TestKernel:
    def test_difference_dimension(self, difference_file, tmp_path, capsys):
        report = tmp_path / "report.json"
        code = main(
            ["kernel", "--system", str(difference_file), "--period", "2",
             "--report", str(report)]
        )
        assert code == 0
        assert capsys.readouterr().out.strip() == "dimension: 2"
        doc = json.loads(report.read_text())
        assert doc["dimension"] == 2

    def test_identity_system(self, tmp_path, capsys):
        path = tmp_path / "sys.json"
        path.write_text(
            json.dumps({"rank": 1, "field": "gf:2", "k": 1, "l": 1, "entries": [["1"]]})
        )
        assert main(["kernel", "--system", str(path), "--period", "4"]) == 0
        assert capsys.readouterr().out.strip() == "dimension: 0"

    def test_two_variable_dimension(self, tmp_path, capsys):
        path = tmp_path / "sys.json"
        path.write_text(
            json.dumps(
                {
                    "rank": 1,
                    "field": "gf:3",
                    "k": 2,
                    "l": 2,
                    "entries": [["X + X^-1", "1"], ["0", "X^-1 - 1"]],
                }
            )
        )
        assert main(["kernel", "--system", str(path), "--period", "4"]) == 0
        assert capsys.readouterr().out.strip() == "dimension: 3"

    def test_float_system_rejected(self, tmp_path, capsys):
        path = tmp_path / "sys.json"
        path.write_text(
            json.dumps(
                {"rank": 1, "field": "float", "k": 1, "l": 1, "entries": [["0.5*X"]]}
            )
        )
        assert main(["kernel", "--system", str(path), "--period", "2"]) == 2

    def test_bad_period_rejected(self, difference_file):
        assert main(["kernel", "--system", str(difference_file), "--period", "0"]) == 2
        assert main(["kernel", "--system", str(difference_file), "--period", "x"]) == 2


class TestMember:
    def test_periodic_member(self, difference_file, tmp_path, capsys):
        doc = tmp_path / "w.json"
        formats.write_periodic_json(doc, PeriodicSeq(1, GF2, (2,), [1, 0]))
        code = main(["member", "--system", str(difference_file), "--periodic", str(doc)])
        assert code == 0
        assert capsys.readouterr().out.strip() == "yes"

    def test_delta_not_member(self, difference_file, tmp_path, capsys):
        seq = tmp_path / "w.csv"
        seq.write_text("0,1\n")
        code = main(["member", "--system", str(difference_file), "--seq", str(seq)])
        assert code == 1
        assert capsys.readouterr().out.strip() == "no"

    def test_zero_signal_member(self, difference_file, tmp_path, capsys):
        seq = tmp_path / "zero.csv"
        seq.write_text("")
        code = main(["member", "--system", str(difference_file), "--seq", str(seq)])
        assert code == 0
        assert capsys.readouterr().out.strip() == "yes"

    def test_vector_membership_needs_all_components(self, tmp_path, capsys):
        path = tmp_path / "sys.json"
        path.write_text(
            json.dumps(
                {
                    "rank": 1,
                    "field": "rational",
                    "k": 2,
                    "l": 2,
                    "entries": [["X + X^-1", "1"], ["0", "X^-1 - 1"]],
                }
            )
        )
        seq = tmp_path / "w.csv"
        seq.write_text("")
        assert main(["member", "--system", str(path), "--seq", str(seq)]) == 2
        code = main(
            ["member", "--system", str(path), "--seq", str(seq), "--seq", str(seq)]
        )
        assert code == 0


class TestSelftest:
    def test_small_run_passes(self, capsys):
        code = main(["selftest", "--trials", "25", "--seed", "7", "--field", "gf:7"])
        assert code == 0
        out = capsys.readouterr().out
        assert "adjoint[gf:7,r=1,finite]" in out
        assert "all suites passed (seed 7)" in out

    def test_zero_trials_vacuous_pass(self, capsys):
        code = main(["selftest", "--trials", "0", "--field", "gf:2"])
        assert code == 0
        captured = capsys.readouterr()
        assert "vacuous" in captured.err

    def test_float_field_rejected(self, capsys):
        assert main(["selftest", "--trials", "5", "--field", "float"]) == 2

    def test_negative_trials_rejected(self):
        assert main(["selftest", "--trials", "-1", "--field", "gf:2"]) == 2

    def test_same_seed_same_output(self, capsys):
        main(["selftest", "--trials", "10", "--seed", "3", "--field", "gf:2"])
        first = capsys.readouterr().out
        main(["selftest", "--trials", "10", "--seed", "3", "--field", "gf:2"])
        second = capsys.readouterr().out
        assert first == second


class TestUsage:
    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_missing_required_flag(self, capsys):
        assert main(["pair", "--poly", "X"]) == 2

    def test_missing_file(self, tmp_path, capsys):
        assert main(["pair", "--poly", "X", "--seq", str(tmp_path / "nope.csv")]) == 2
