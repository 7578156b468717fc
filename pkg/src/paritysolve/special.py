"""Weak, dull and (nested) solitaire games: detection and dedicated solvers."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .game import (
    ParityGame,
    Player,
    PreconditionError,
    PseudoParityGame,
    VertexSet,
    as_view,
    iter_bits,
)
from .graph import attract_bits, tarjan_bits
from .zielonka import Solution, SolveStats


class NotWeak(PreconditionError):
    pass


class NotDull(PreconditionError):
    pass


class NotNestedSolitaire(PreconditionError):
    pass


@dataclass(frozen=True)
class DullWitness:
    """A vertex lying on both an even cycle and an odd cycle."""

    vertex: int
    even_cycle: tuple[int, ...]
    odd_cycle: tuple[int, ...]


@dataclass(frozen=True)
class GameClassReport:
    is_weak: bool
    is_dull: bool
    is_solitaire: bool
    solitaire_owner: Optional[Player]
    is_nested_solitaire: bool
    weak_witness: Optional[tuple[int, int]] = None
    dull_witness: Optional[DullWitness] = None
    solitaire_witness: Optional[tuple[int, int]] = None
    nested_solitaire_witness: Optional[tuple[int, int]] = None

    def lines(self) -> list[str]:
        def flag(b):
            return "true" if b else "false"

        out = [f"weak: {flag(self.is_weak)}"]
        if self.weak_witness:
            v, w = self.weak_witness
            out[-1] += f"  (ascending edge {v} -> {w})"
        out.append(f"dull: {flag(self.is_dull)}")
        if self.dull_witness:
            d = self.dull_witness
            out[-1] += (
                f"  (vertex {d.vertex} on even cycle {list(d.even_cycle)}"
                f" and odd cycle {list(d.odd_cycle)})"
            )
        out.append(f"solitaire: {flag(self.is_solitaire)}")
        if self.is_solitaire:
            owner = "none" if self.solitaire_owner is None else self.solitaire_owner.name.lower()
            out[-1] += f"  (owner {owner})"
        elif self.solitaire_witness:
            out[-1] += "  (choice vertices %d and %d have different owners)" % self.solitaire_witness
        out.append(f"nested_solitaire: {flag(self.is_nested_solitaire)}")
        if self.nested_solitaire_witness:
            out[-1] += (
                "  (choice vertices %d and %d of different owners share an SCC)"
                % self.nested_solitaire_witness
            )
        return out


def cycle_parity(game: ParityGame, cycle) -> int:
    return max(game.priorities[v] for v in cycle) & 1


def _bfs_path(game: ParityGame, live: int, sources: list[int], goal: int) -> Optional[list[int]]:
    """Shortest path from one of ``sources`` to ``goal`` inside ``live``."""
    parent = {s: None for s in sources}
    queue = deque(sources)
    while queue:
        v = queue.popleft()
        if v == goal:
            path = [v]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in game.successors[v]:
            if live >> w & 1 and w not in parent:
                parent[w] = v
                queue.append(w)
    return None


def _cycle_through(game: ParityGame, live: int, v: int) -> Optional[list[int]]:
    """A basic cycle through ``v`` inside ``live``: ``v`` then a shortest path back."""
    if v in game.successors[v]:
        return [v]
    starts = [w for w in game.successors[v] if live >> w & 1]
    back = _bfs_path(game, live, starts, v) if starts else None
    if back is None:
        return None
    return [v] + back[:-1]


def dominant_parity_cycle(g, parity: int) -> Optional[list[int]]:
    """A basic cycle whose highest priority has ``parity``, or ``None``.

    For each priority q of that parity, ascending, look for a vertex of
    priority q on a cycle of the subgraph with priorities <= q.
    """
    g = as_view(g)
    game, live = g.game, g.live
    below = 0
    for q, level in zip(game.levels, game.level_bits):
        below |= level & live
        if q & 1 != parity or not level & live:
            continue
        for comp in tarjan_bits(game, below):
            hits = comp & level
            if not hits:
                continue
            for v in iter_bits(hits):
                if comp != 1 << v or v in game.successors[v]:
                    return _cycle_through(game, comp, v)
    return None


def has_cycle_of_dominant_parity(g, parity: int) -> bool:
    return dominant_parity_cycle(g, parity) is not None


def _overlap_witness(game: ParityGame, comp: int, cycle: list[int], top: int) -> DullWitness:
    # Walk a path from the cycle to the top vertex; every edge on it closes a
    # basic cycle, consecutive ones share a vertex, and the parities at the
    # two ends differ, so some adjacent pair overlaps with opposite parities.
    path = _bfs_path(game, comp, list(cycle), top)
    chain = [(None, cycle)]
    for x, y in zip(path, path[1:]):
        back = _bfs_path(game, comp, [y], x)
        chain.append((x, [x] + back[:-1]))
    for (_, c1), (shared, c2) in zip(chain, chain[1:]):
        p1, p2 = cycle_parity(game, c1), cycle_parity(game, c2)
        if p1 != p2:
            even, odd = (c1, c2) if p1 == 0 else (c2, c1)
            return DullWitness(shared, tuple(even), tuple(odd))
    raise AssertionError("no overlapping cycles of opposite parity found")


def _choice_vertices(game: ParityGame, live: int) -> list[int]:
    out = []
    for v in iter_bits(live):
        k = 0
        for w in game.successors[v]:
            if live >> w & 1:
                k += 1
                if k == 2:
                    out.append(v)
                    break
    return out


def _mixed_owners(game: ParityGame, vertices: list[int]) -> Optional[tuple[int, int]]:
    first = {}
    for v in vertices:
        first.setdefault(game.owners[v], v)
    if len(first) == 2:
        return tuple(sorted(first.values()))
    return None


def ascending_edge(game: ParityGame) -> Optional[tuple[int, int]]:
    pr = game.priorities
    for v, succ in enumerate(game.successors):
        for w in succ:
            if pr[v] < pr[w]:
                return v, w
    return None


def _dull_violation(game: ParityGame, comps: list[int]) -> Optional[DullWitness]:
    for comp in comps:
        if comp & (comp - 1) == 0:
            continue  # single vertex: its only possible cycle is a self-loop
        top = max(iter_bits(comp), key=game.priorities.__getitem__)
        other = 1 - (game.priorities[top] & 1)
        cycle = dominant_parity_cycle(PseudoParityGame(game, comp), other)
        if cycle is not None:
            return _overlap_witness(game, comp, cycle, top)
    return None


def _nested_violation(game: ParityGame, comps: list[int]) -> Optional[tuple[int, int]]:
    for comp in comps:
        mixed = _mixed_owners(game, _choice_vertices(game, comp))
        if mixed:
            return mixed
    return None


def classify(game: ParityGame) -> GameClassReport:
    comps = tarjan_bits(game, game.all_bits)
    weak_w = ascending_edge(game)
    dull_w = _dull_violation(game, comps)
    choices = _choice_vertices(game, game.all_bits)
    sol_w = _mixed_owners(game, choices)
    owner = None
    if not sol_w and choices:
        owner = game.owners[choices[0]]
    nested_w = _nested_violation(game, comps)
    return GameClassReport(
        is_weak=weak_w is None,
        is_dull=dull_w is None,
        is_solitaire=sol_w is None,
        solitaire_owner=owner,
        is_nested_solitaire=nested_w is None,
        weak_witness=weak_w,
        dull_witness=dull_w,
        solitaire_witness=sol_w,
        nested_solitaire_witness=nested_w,
    )


def _game_of(g) -> ParityGame:
    if isinstance(g, ParityGame):
        return g
    v = as_view(g)
    if v.live != v.game.all_bits:
        raise TypeError("dedicated solvers take a whole ParityGame, not a subgame view")
    return v.game


def solve_weak(g) -> Solution:
    """Solve a weak game by repeatedly claiming the attractor of its lowest priority."""
    game = _game_of(g)
    witness = ascending_edge(game)
    if witness is not None:
        raise NotWeak("game is not weak: edge %d -> %d ascends" % witness, witness)
    stats = SolveStats()
    won = [0, 0]
    residual = game.all_bits
    i = 0
    while residual:
        while not residual & game.level_bits[i]:
            i += 1
        low = residual & game.level_bits[i]
        for v in iter_bits(low):
            # lowest priorities cannot be left in a weak game
            assert all(not residual >> w & 1 or low >> w & 1 for w in game.successors[v])
        alpha = game.levels[i] & 1
        claimed = attract_bits(game, residual, alpha, low, stats)
        won[alpha] |= claimed
        residual &= ~claimed
    return Solution(VertexSet.from_bits(won[0]), VertexSet.from_bits(won[1]), stats)


def dull_to_weak(g) -> ParityGame:
    """Relabel priorities of a dull game so that it becomes weak.

    Every SCC gets ``2 * level + b`` where ``level`` is its longest-path
    height above the sinks of the condensation and ``b`` is the parity of the
    component's highest original priority.
    """
    game = _game_of(g)
    comps = tarjan_bits(game, game.all_bits)
    witness = _dull_violation(game, comps)
    if witness is not None:
        raise NotDull(
            f"game is not dull: vertex {witness.vertex} lies on an even and an odd cycle", witness
        )
    comp_of = [0] * len(game)
    for i, comp in enumerate(comps):
        for v in iter_bits(comp):
            comp_of[v] = i
    level = [0] * len(comps)
    for i, comp in enumerate(comps):
        # successors of component i all have smaller indices
        for v in iter_bits(comp):
            for w in game.successors[v]:
                j = comp_of[w]
                if j != i and level[j] + 1 > level[i]:
                    level[i] = level[j] + 1
    parity = [max(game.priorities[v] for v in iter_bits(c)) & 1 for c in comps]
    priorities = [2 * level[comp_of[v]] + parity[comp_of[v]] for v in range(len(game))]
    return ParityGame(game.owners, priorities, game.successors, game.names)


def solve_nested_solitaire(g) -> Solution:
    """Solve final SCCs one at a time by searching for a cycle of the chooser's parity."""
    game = _game_of(g)
    comps = tarjan_bits(game, game.all_bits)
    witness = _nested_violation(game, comps)
    if witness is not None:
        raise NotNestedSolitaire(
            "game is not nested solitaire: choice vertices %d and %d share an SCC" % witness,
            witness,
        )
    stats = SolveStats()
    won = [0, 0]
    residual = game.all_bits
    while residual:
        (comp,) = tarjan_bits(game, residual, first_only=True)
        choices = _choice_vertices(game, comp)
        chooser = game.owners[choices[0]] if choices else Player.EVEN
        found = dominant_parity_cycle(PseudoParityGame(game, comp), int(chooser))
        winner = int(chooser) if found is not None else 1 - int(chooser)
        claimed = attract_bits(game, residual, winner, comp, stats)
        won[winner] |= claimed
        residual &= ~claimed
    return Solution(VertexSet.from_bits(won[0]), VertexSet.from_bits(won[1]), stats)


__all__ = [
    "DullWitness",
    "GameClassReport",
    "NotDull",
    "NotNestedSolitaire",
    "NotWeak",
    "classify",
    "cycle_parity",
    "dominant_parity_cycle",
    "dull_to_weak",
    "has_cycle_of_dominant_parity",
    "solve_nested_solitaire",
    "solve_weak",
]
