import io

import pytest

from vershik_ga.cli import main
from vershik_ga.dcsp import Chromosome, is_solution, load_instance
from vershik_ga.words import GroupSpec, parse_word


def call(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


class TestReduce:
    def test_normal_form(self):
        assert call("reduce", "--rank", "8", "6 8 -1 2 -8 -2 6 4 5") == (0, "-1 4 6 6 5\n")

    def test_pseudo(self):
        assert call("reduce", "--rank", "8", "--pseudo", "6 8 -1 2 -8 -2 6 4 5") == (0, "6 -1 6 4 5\n")

    def test_empty(self):
        assert call("reduce", "--rank", "3", "") == (0, "\n")

    def test_file(self, tmp_path):
        path = tmp_path / "words.txt"
        path.write_text("1 -1\n3 1\n")
        assert call("reduce", "--rank", "4", str(path)) == (0, "\n1 3\n")

    @pytest.mark.parametrize("word", ["0", "9", "a b"])
    def test_bad_word(self, word, capsys):
        code, _ = call("reduce", "--rank", "8", word)
        assert code == 1
        assert "error" in capsys.readouterr().err

    def test_missing_rank(self, capsys):
        assert call("reduce", "1 2")[0] == 1


class TestGenSolve:
    def test_gen_to_file_then_solve(self, tmp_path):
        path = tmp_path / "inst.txt"
        assert call("gen", "--rank", "10", "--la", "12", "--lx", "2", "--ly", "2",
                    "--seed", "3", "-o", str(path))[0] == 0
        inst, witness = load_instance(path)
        assert is_solution(inst, witness)
        code, text = call("solve", str(path), "--sigma", "400", "--seed", "1")
        assert code == 0
        lines = dict(line.split(": ", 1) for line in text.splitlines())
        x, y = parse_word(lines["x"], inst.spec), parse_word(lines["y"], inst.spec)
        assert is_solution(inst, Chromosome(x, y))

    def test_gen_stdout_explicit_subgroups(self):
        code, text = call("gen", "--rank", "6", "--la", "5", "--lx", "1", "--ly", "1",
                          "--Y", "1,2", "--Z", "5 6")
        assert code == 0 and "Y: 1 2" in text and "Z: 5 6" in text

    def test_gen_rejects_mixed(self):
        assert call("gen", "--rank", "6", "--la", "5", "--lx", "1", "--ly", "1", "--Y", "1")[0] == 1

    def test_timeout_exit_code(self, tmp_path):
        path = tmp_path / "inst.txt"
        call("gen", "--rank", "10", "--la", "60", "--lx", "10", "--ly", "10", "-o", str(path))
        code, text = call("solve", str(path), "--sigma", "1")
        assert code == 2 and text.startswith("timeout")

    def test_malformed_instance(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("n: 10\nY: 1\n")
        assert call("solve", str(path))[0] == 1
        assert "missing key" in capsys.readouterr().err

    def test_missing_file(self):
        assert call("solve", "/nonexistent/instance.txt")[0] == 1

    def test_params_and_pop(self, tmp_path):
        path = tmp_path / "inst.txt"
        call("gen", "--rank", "10", "--la", "6", "--lx", "1", "--ly", "1", "-o", str(path))
        assert call("solve", str(path), "--pop", "20", "--params", "1,4,1,9,5,0",
                    "--sigma", "300")[0] == 0
        assert call("solve", str(path), "--pop", "20")[0] == 1
        assert call("solve", str(path), "--params", "1,1,1")[0] == 1

    def test_trace(self, tmp_path, capsys):
        path = tmp_path / "inst.txt"
        call("gen", "--rank", "10", "--la", "6", "--lx", "1", "--ly", "1", "-o", str(path))
        call("solve", str(path), "--sigma", "2", "--trace")
        err = capsys.readouterr().err
        assert "-- generation 0" in err and "cost" in err


class TestBench:
    def test_bench_writes_csv(self, tmp_path):
        suite = tmp_path / "suite.txt"
        suite.write_text("sigma 300\ninstance gen n=10 la=8 lx=1 ly=1 id=B repeat 2 seed 0\n")
        out = tmp_path / "runs.csv"
        code, text = call("bench", "--config", str(suite), "--out", str(out))
        assert code == 0
        assert "B" in text
        assert out.read_text().count("\nB,") == 2

    def test_bad_suite(self, tmp_path):
        suite = tmp_path / "suite.txt"
        suite.write_text("nonsense\n")
        assert call("bench", "--config", str(suite))[0] == 1
