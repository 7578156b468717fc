"""Benchmark harness: one row per (family, n, algorithm), written as CSV."""
from __future__ import annotations

import csv
import multiprocessing
import time
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Optional

from .families import FamilySpec, generate
from .game import ParityGame, PreconditionError
from .oracle import solve_oracle
from .special import solve_nested_solitaire, solve_weak
from .zielonka import solve_recursive, solve_recursive_scc

ALGORITHMS = {
    "recursive": solve_recursive,
    "recursive-scc": solve_recursive_scc,
    "weak": solve_weak,
    "nested-solitaire": solve_nested_solitaire,
    "oracle": solve_oracle,
}

# command-line family names -> generator family names
FAMILY_NAMES = {
    "weak": "weak_W",
    "solitaire": "solitaire_S",
    "solitaire-strong": "solitaire_S_strong",
    "whitegame": "whitegame_H",
    "random": "random",
    "random-weak": "random_weak",
    "random-dull": "random_dull",
    "random-solitaire": "random_solitaire",
    "random-nested-solitaire": "random_nested_solitaire",
}

TIMEOUT = "timeout"
SKIPPED = "skipped"


@dataclass
class BenchRow:
    family: str
    n: int
    vertices: int
    edges: int
    priorities: int
    algorithm: str
    recursive_calls: Optional[int] = None
    for_iterations: Optional[int] = None
    attractor_edge_visits: Optional[int] = None
    # nanoseconds, or TIMEOUT / SKIPPED when no solve completed
    runtime_nanoseconds: Optional[int | str] = None
    even_region_size: Optional[int] = None
    odd_region_size: Optional[int] = None

    @property
    def completed(self) -> bool:
        return isinstance(self.runtime_nanoseconds, int)


COLUMNS = [f.name for f in fields(BenchRow)]


def measure(game: ParityGame, algorithm: str) -> dict:
    solver = ALGORITHMS[algorithm]
    start = time.perf_counter_ns()
    sol = solver(game)
    elapsed = time.perf_counter_ns() - start
    return {
        "recursive_calls": sol.stats.recursive_calls,
        "for_iterations": sol.stats.for_iterations,
        "attractor_edge_visits": sol.stats.attractor_edge_visits,
        "runtime_nanoseconds": elapsed,
        "even_region_size": len(sol.even_region),
        "odd_region_size": len(sol.odd_region),
    }


def _child(conn, game, algorithm):
    try:
        conn.send(("ok", measure(game, algorithm)))
    except PreconditionError as e:
        conn.send(("precondition", str(e)))
    finally:
        conn.close()


def _measure_with_timeout(game: ParityGame, algorithm: str, timeout: float):
    ctx = multiprocessing.get_context("fork")
    recv, send = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_child, args=(send, game, algorithm), daemon=True)
    proc.start()
    send.close()
    if recv.poll(timeout):
        status, payload = recv.recv()
        proc.join()
        return status, payload
    proc.terminate()
    proc.join()
    return "timeout", None


def run_cell(
    family: str, n: int, algorithm: str, seed: int = 0, timeout: Optional[float] = None
) -> BenchRow:
    game = generate(FamilySpec(FAMILY_NAMES.get(family, family), n, seed))
    row = BenchRow(family, n, len(game), game.edge_count, game.priority_count, algorithm)
    if timeout is None:
        try:
            status, payload = "ok", measure(game, algorithm)
        except PreconditionError:
            status, payload = "precondition", None
    else:
        status, payload = _measure_with_timeout(game, algorithm, timeout)
    if status == "ok":
        for k, v in payload.items():
            setattr(row, k, v)
    else:
        row.runtime_nanoseconds = TIMEOUT if status == "timeout" else SKIPPED
    return row


def run_bench(
    families: Iterable[str],
    n_values: Iterable[int],
    algorithms: Iterable[str],
    seed: int = 0,
    timeout: Optional[float] = None,
    log=None,
) -> list[BenchRow]:
    """Run every cell; once an algorithm times out on a family, larger n are not attempted."""
    families, n_values, algorithms = list(families), sorted(n_values), list(algorithms)
    rows = []
    for family in families:
        gave_up: set[str] = set()
        for n in n_values:
            for alg in algorithms:
                if alg in gave_up:
                    game = generate(FamilySpec(FAMILY_NAMES.get(family, family), n, seed))
                    row = BenchRow(
                        family, n, len(game), game.edge_count, game.priority_count, alg,
                        runtime_nanoseconds=TIMEOUT,
                    )
                else:
                    row = run_cell(family, n, alg, seed, timeout)
                    if row.runtime_nanoseconds == TIMEOUT:
                        gave_up.add(alg)
                if log is not None:
                    log(row)
                rows.append(row)
    return rows


def write_csv(rows: Iterable[BenchRow], out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(COLUMNS)
    for row in rows:
        w.writerow(["" if x is None else x for x in astuple(row)])


def read_csv(src) -> list[BenchRow]:
    rows = []
    for rec in csv.DictReader(src):
        values = {}
        for name in COLUMNS:
            raw = rec[name]
            if name in ("family", "algorithm"):
                values[name] = raw
            elif raw == "":
                values[name] = None
            elif raw in (TIMEOUT, SKIPPED):
                values[name] = raw
            else:
                values[name] = int(raw)
        rows.append(BenchRow(**values))
    return rows
