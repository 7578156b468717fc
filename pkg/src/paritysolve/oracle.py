"""Brute-force solver: enumerate every pair of positional strategies.

Parity games are positionally determined, so ``v`` is won by Even iff some
positional Even strategy beats every positional Odd strategy from ``v``.
Only usable on tiny games; it exists to check the real solvers.
"""
from __future__ import annotations

import itertools
import math

from .game import ParityGame, Player, PreconditionError, VertexSet, as_view, iter_bits
from .zielonka import Solution, SolveStats


class TooLarge(PreconditionError):
    pass


def _play_winners(succ_of: list[int], priorities, order: list[int]) -> int:
    """Bitmask of start vertices won by Even in the functional graph ``succ_of``."""
    n = len(succ_of)
    winner = [-1] * n
    even = 0
    for start in order:
        if winner[start] >= 0:
            continue
        path = []
        pos = {}
        v = start
        while winner[v] < 0 and v not in pos:
            pos[v] = len(path)
            path.append(v)
            v = succ_of[v]
        if winner[v] >= 0:
            w = winner[v]
        else:
            w = max(priorities[x] for x in path[pos[v] :]) & 1
        for x in path:
            winner[x] = w
            if w == 0:
                even |= 1 << x
    return even


def solve_oracle(g, max_vertices: int = 10, max_profiles: int = 200_000) -> Solution:
    g = as_view(g)
    game: ParityGame = g.game
    live = g.live
    verts = iter_bits(live)
    if len(verts) > max_vertices:
        raise TooLarge(f"{len(verts)} vertices exceed the oracle bound of {max_vertices}")
    choices = {v: g.successors(v) for v in verts}
    if any(not c for c in choices.values()):
        raise PreconditionError("oracle input is not total")
    profiles = math.prod(len(c) for c in choices.values())
    if profiles > max_profiles:
        raise TooLarge(f"{profiles} strategy profiles exceed the bound of {max_profiles}")
    even_vs = [v for v in verts if game.owners[v] == Player.EVEN]
    odd_vs = [v for v in verts if game.owners[v] == Player.ODD]
    succ_of = [0] * len(game)
    won_even = 0
    for sigma in itertools.product(*(choices[v] for v in even_vs)):
        for v, w in zip(even_vs, sigma):
            succ_of[v] = w
        # vertices Even wins against every Odd reply
        safe = live
        for tau in itertools.product(*(choices[v] for v in odd_vs)):
            for v, w in zip(odd_vs, tau):
                succ_of[v] = w
            safe &= _play_winners(succ_of, game.priorities, verts)
            if not safe:
                break
        won_even |= safe
    return Solution(
        VertexSet.from_bits(won_even), VertexSet.from_bits(live & ~won_even), SolveStats()
    )
