import io

import pytest

from paritysolve.bench import (
    COLUMNS,
    SKIPPED,
    TIMEOUT,
    BenchRow,
    read_csv,
    run_bench,
    run_cell,
    write_csv,
)


def test_row_fields_and_invariants():
    row = run_cell("solitaire", 4, "recursive")
    assert (row.vertices, row.edges, row.priorities) == (12, 16, 9)
    assert row.completed and row.runtime_nanoseconds > 0
    assert row.even_region_size + row.odd_region_size == row.vertices
    assert row.recursive_calls >= 16


def test_precondition_failure_is_skipped():
    row = run_cell("whitegame", 3, "weak")
    assert row.runtime_nanoseconds == SKIPPED and not row.completed
    assert row.recursive_calls is None


def test_timeout_marks_row_and_stops_larger_sizes():
    rows = run_bench(["solitaire"], [2, 22, 23], ["recursive"], timeout=0.2)
    assert rows[0].completed
    assert [r.runtime_nanoseconds for r in rows[1:]] == [TIMEOUT, TIMEOUT]
    assert rows[2].vertices == 69


def test_whitegame_bench_shape():
    rows = run_bench(["whitegame"], range(2, 13), ["recursive", "recursive-scc"])
    assert len(rows) == 22
    assert [r.n for r in rows] == sorted(r.n for r in rows)
    for alg in ("recursive", "recursive-scc"):
        calls = [r.recursive_calls for r in rows if r.algorithm == alg]
        assert all(b > a for a, b in zip(calls, calls[1:]))
    for r in rows:
        assert r.even_region_size + r.odd_region_size == r.vertices
        assert (r.odd_region_size == 0) == (r.n % 2 == 0)


def test_csv_round_trip():
    rows = run_bench(["weak", "whitegame"], [1, 2], ["recursive", "weak"])
    buf = io.StringIO()
    write_csv(rows, buf)
    text = buf.getvalue()
    assert text.splitlines()[0] == ",".join(COLUMNS)
    assert read_csv(io.StringIO(text)) == rows
    assert any(r.runtime_nanoseconds == SKIPPED for r in rows)


def test_plot_metrics(tmp_path):
    pytest.importorskip("matplotlib")
    from paritysolve.report import plot_bench

    rows = run_bench(["whitegame", "solitaire-strong"], range(2, 7), ["recursive"])
    rows.append(BenchRow("whitegame", 7, 21, 39, 9, "recursive", runtime_nanoseconds=TIMEOUT))
    for metric in ("runtime", "calls"):
        out = tmp_path / f"{metric}.png"
        plot_bench(rows, str(out), metric)
        assert out.read_bytes()[:4] == b"\x89PNG"
