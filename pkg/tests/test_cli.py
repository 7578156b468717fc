import io
import subprocess
import sys

import pytest

from paritysolve.cli import main
from paritysolve.families import gen_solitaire, gen_weak
from paritysolve.pgsolver import parse_pgsolver, write_pgsolver


@pytest.fixture
def game_file(tmp_path):
    def make(game, name="g.pg"):
        p = tmp_path / name
        p.write_text(write_pgsolver(game))
        return str(p)

    return make


def stats_of(out):
    return {k: int(v) for k, v in (line.split(": ") for line in out.splitlines()[2:])}


def test_generate_to_stdout(capsys):
    assert main(["generate", "--family", "weak", "--n", "4"]) == 0
    assert parse_pgsolver(capsys.readouterr().out) == gen_weak(4)


def test_generate_to_file(tmp_path):
    out = tmp_path / "s.pg"
    assert main(["generate", "--family", "random-dull", "--n", "6", "--seed", "2", "--out", str(out)]) == 0
    assert len(parse_pgsolver(out.read_text())) == 6


def test_solve_with_stats(game_file, capsys):
    assert main(["solve", "--algorithm", "recursive", "--stats", game_file(gen_solitaire(3))]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == "even: 0 1 2 3 4 5 6 7 8"
    assert lines[1] == "odd:"
    assert stats_of(out)["recursive_calls"] >= 8


def test_solve_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(write_pgsolver(gen_weak(2))))
    assert main(["solve", "--algorithm", "recursive-scc"]) == 0
    assert capsys.readouterr().out.splitlines()[:2] == ["even: 0 1 4", "odd: 2 3 5"]


@pytest.mark.parametrize("algorithm", ["recursive", "recursive-scc", "weak", "oracle"])
def test_solve_output_identical_across_algorithms(algorithm, game_file, capsys):
    assert main(["solve", "--algorithm", algorithm, game_file(gen_weak(3))]) == 0
    assert capsys.readouterr().out == "even: 0 1 2 6\nodd: 3 4 5 7\n"


def test_precondition_failure_prints_witness(game_file, capsys):
    assert main(["solve", "--algorithm", "weak", game_file(gen_solitaire(3))]) == 2
    err = capsys.readouterr().err
    assert "not weak" in err and "->" in err


def test_classify(game_file, capsys):
    assert main(["classify", game_file(gen_weak(4))]) == 0
    out = capsys.readouterr().out
    assert "weak: true" in out and "dull: true" in out


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.pg"
    bad.write_text("0 0 2 0;")
    assert main(["solve", str(bad)]) == 3
    bad.write_text("0 0 0;")
    assert main(["classify", str(bad)]) == 3


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["generate", "--family", "nope", "--n", "3"],
        ["generate", "--family", "weak", "--n", "0"],
        ["solve", "--algorithm", "magic"],
        ["solve", "/nonexistent/file.pg"],
        ["bench", "--family", "weak", "--min", "5", "--max", "2", "--csv", "-"],
        ["bench", "--family", "weak,nope", "--min", "1", "--max", "2", "--csv", "-"],
        ["bench", "--family", "weak", "--min", "1", "--max", "2", "--algorithms", "x", "--csv", "-"],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == 1


def test_bench_csv_and_plot(tmp_path, capsys):
    csv_path, png = tmp_path / "b.csv", tmp_path / "b.png"
    argv = ["bench", "--family", "weak,solitaire", "--min", "1", "--max", "3",
            "--algorithms", "recursive,recursive-scc", "--csv", str(csv_path), "--plot", str(png)]
    assert main(argv) == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0].startswith("family,n,vertices,edges,priorities,algorithm,recursive_calls")
    assert len(lines) == 1 + 2 * 3 * 2
    assert png.stat().st_size > 0


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "paritysolve", "generate", "--family", "whitegame", "--n", "2"],
        capture_output=True, text=True, check=True,
    )
    assert len(parse_pgsolver(r.stdout)) == 6
