"""Zielonka's recursive algorithm and its SCC-integrated variant.

Both solvers work on bitmask subgames of one immutable parent game and
count their work in a ``SolveStats``.  ``recursive_calls`` counts every
invocation, including those on the empty game.

An optional ``on_call(kind, subgame)`` hook sees every invocation; ``kind``
is ``"root"``, ``"first"`` or ``"second"``.  It exists for instrumented
checks and is not needed to solve.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass, field

from .game import NotTotal, Player, PseudoParityGame, VertexSet, as_view, is_total, top_level
from .graph import attract_bits, tarjan_bits


class BudgetExceeded(RuntimeError):
    """Raised when a solve exceeds its ``max_calls`` budget."""


@dataclass
class SolveStats:
    recursive_calls: int = 0
    for_iterations: int = 0
    attractor_edge_visits: int = 0
    second_calls_total: int = 0
    second_calls_empty: int = 0
    max_recursion_depth: int = 0

    @property
    def second_calls_nonempty(self) -> int:
        return self.second_calls_total - self.second_calls_empty

    def as_dict(self) -> dict[str, int]:
        return {
            "recursive_calls": self.recursive_calls,
            "for_iterations": self.for_iterations,
            "attractor_edge_visits": self.attractor_edge_visits,
            "second_calls_total": self.second_calls_total,
            "second_calls_empty": self.second_calls_empty,
            "max_recursion_depth": self.max_recursion_depth,
        }


@dataclass
class Solution:
    """Winning regions of Even and Odd, plus the counters of the solve."""

    even_region: VertexSet
    odd_region: VertexSet
    stats: SolveStats = field(default_factory=SolveStats)

    def region(self, player: Player) -> VertexSet:
        return self.even_region if player == Player.EVEN else self.odd_region

    def winner(self, v: int) -> Player:
        if v in self.even_region:
            return Player.EVEN
        if v in self.odd_region:
            return Player.ODD
        raise KeyError(v)

    def partition(self) -> tuple[list[int], list[int]]:
        return self.even_region.sorted(), self.odd_region.sorted()

    def same_partition(self, other: "Solution") -> bool:
        return (
            self.even_region.bits == other.even_region.bits
            and self.odd_region.bits == other.odd_region.bits
        )


def _ensure_depth(n: int) -> None:
    # every nested call loses at least one vertex, so depth <= n + 1
    need = 3 * n + 1000
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


class _Run:
    __slots__ = ("game", "stats", "on_call", "max_calls")

    def __init__(self, game, stats, on_call, max_calls):
        self.game = game
        self.stats = stats
        self.on_call = on_call
        self.max_calls = max_calls

    def enter(self, live: int, kind: str, depth: int) -> None:
        stats = self.stats
        stats.recursive_calls += 1
        if depth > stats.max_recursion_depth:
            stats.max_recursion_depth = depth
        if self.max_calls is not None and stats.recursive_calls > self.max_calls:
            raise BudgetExceeded(f"more than {self.max_calls} recursive calls")
        if self.on_call is not None:
            self.on_call(kind, PseudoParityGame(self.game, live))

    def zielonka(self, live: int, kind: str, depth: int, hint: int | None) -> list[int]:
        self.enter(live, kind, depth)
        if not live:
            return [0, 0]
        game, stats = self.game, self.stats
        i = top_level(game, live, hint)
        p = game.levels[i] & 1
        q = 1 - p
        a = attract_bits(game, live, p, live & game.level_bits[i], stats)
        w = self.zielonka(live & ~a, "first", depth + 1, i - 1 if i > 0 else None)
        if not w[q]:
            w[p] |= a
            return w
        b = attract_bits(game, live, q, w[q], stats)
        rest = live & ~b
        stats.second_calls_total += 1
        if not rest:
            stats.second_calls_empty += 1
        w = self.zielonka(rest, "second", depth + 1, i)
        w[q] |= b
        return w

    def zielonka_scc(self, live: int, kind: str, depth: int) -> list[int]:
        self.enter(live, kind, depth)
        won = [0, 0]
        game, stats = self.game, self.stats
        residual = live
        while residual:
            # the first component Tarjan completes is a sink of the condensation
            (c,) = tarjan_bits(game, residual, first_only=True)
            stats.for_iterations += 1
            i = top_level(game, c)
            p = game.levels[i] & 1
            q = 1 - p
            a = attract_bits(game, c, p, c & game.level_bits[i], stats)
            w = self.zielonka_scc(c & ~a, "first", depth + 1)
            if not w[q]:
                w[p] |= a
            else:
                b = attract_bits(game, c, q, w[q], stats)
                rest = c & ~b
                stats.second_calls_total += 1
                if not rest:
                    stats.second_calls_empty += 1
                w = self.zielonka_scc(rest, "second", depth + 1)
                w[q] |= b
            even = attract_bits(game, residual, 0, w[0], stats)
            odd = attract_bits(game, residual, 1, w[1], stats)
            won[0] |= even
            won[1] |= odd
            residual &= ~(even | odd)
        return won


def _solve(g, method: str, on_call, max_calls) -> Solution:
    g = as_view(g)
    if not is_total(g):
        raise NotTotal("solver input is not total: some vertex has no successor")
    _ensure_depth(len(g.game))
    stats = SolveStats()
    run = _Run(g.game, stats, on_call, max_calls)
    if method == "scc":
        w = run.zielonka_scc(g.live, "root", 0)
    else:
        w = run.zielonka(g.live, "root", 0, None)
    return Solution(VertexSet.from_bits(w[0]), VertexSet.from_bits(w[1]), stats)


def solve_recursive(g, *, on_call=None, max_calls: int | None = None) -> Solution:
    """Solve a total (sub)game with Zielonka's recursive algorithm."""
    return _solve(g, "plain", on_call, max_calls)


def solve_recursive_scc(g, *, on_call=None, max_calls: int | None = None) -> Solution:
    """Zielonka's algorithm with an SCC decomposition in every call.

    Each loop iteration solves one final SCC of the residual game, attracts
    both winning sets within the residual, removes them and re-decomposes.
    ``for_iterations`` counts processed SCCs over the whole recursion tree.
    """
    return _solve(g, "scc", on_call, max_calls)
