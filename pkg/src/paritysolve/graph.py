"""Attractors and strongly connected components over subgame views."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .game import ParityGame, Player, PseudoParityGame, VertexSet, as_view, iter_bits


def attract_bits(game: ParityGame, live: int, player: int, target: int, stats=None) -> int:
    """Bitmask of the ``player``-attractor of ``target`` inside ``live``.

    Backward breadth-first propagation; opponent vertices carry a counter of
    live successors not yet attracted and join when it reaches zero.

    When the target is the larger part of ``live`` the search is seeded from
    the outside instead: every vertex outside the target is tested once
    against the target, and only the vertices that join are propagated.
    Both seedings reach the same least fixpoint.
    """
    owners = game.owners
    preds = game.predecessors
    succs = game.successors
    result = target
    remaining: dict[int, int] = {}
    visits = 0
    outside = live & ~target
    if 2 * target.bit_count() > live.bit_count():
        queue = deque()
        for u in iter_bits(outside):
            out = succs[u]
            visits += len(out)
            if owners[u] == player:
                if any(target >> w & 1 for w in out):
                    queue.append(u)
            else:
                left = 0
                for w in out:
                    if outside >> w & 1:
                        left += 1
                if left == 0:
                    queue.append(u)
                else:
                    remaining[u] = left
        for u in queue:
            result |= 1 << u
    else:
        queue = deque(iter_bits(target))
    while queue:
        v = queue.popleft()
        for u in preds[v]:
            visits += 1
            if not live >> u & 1 or result >> u & 1:
                continue
            if owners[u] == player:
                result |= 1 << u
                queue.append(u)
                continue
            left = remaining.get(u)
            if left is None:
                out = succs[u]
                visits += len(out)
                left = 0
                for w in out:
                    if live >> w & 1:
                        left += 1
            left -= 1
            if left == 0:
                result |= 1 << u
                queue.append(u)
            else:
                remaining[u] = left
    if stats is not None:
        stats.attractor_edge_visits += visits
    return result


def attractor(g, player: Player, target, stats=None) -> VertexSet:
    """The least set containing ``target`` into which ``player`` can force play."""
    g = as_view(g)
    bits = VertexSet(target).bits
    if bits & ~g.live:
        raise ValueError("attractor target is not contained in the game's vertices")
    player = Player(player)
    # in a non-total view, opponent dead ends are attracted vacuously
    for v in iter_bits(g.live):
        if g.game.owners[v] != player and not g.successors(v):
            bits |= 1 << v
    return VertexSet.from_bits(attract_bits(g.game, g.live, player, bits, stats))


def tarjan_bits(game: ParityGame, live: int, first_only: bool = False) -> list[int]:
    """SCCs of the live subgraph as bitmasks, sinks of the condensation first.

    Iterative Tarjan with roots taken in ascending id order.  With
    ``first_only`` the search stops at the first completed component, which
    is always a final (sink) component.
    """
    succs = game.successors
    n = len(succs)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[int] = []
    counter = 0
    for root in iter_bits(live):
        if index[root] >= 0:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, iter(succs[root]))]
        while work:
            v, it = work[-1]
            descended = False
            for w in it:
                if not live >> w & 1:
                    continue
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(succs[w])))
                    descended = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                comp = 0
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp |= 1 << w
                    if w == v:
                        break
                comps.append(comp)
                if first_only:
                    return comps
    return comps


@dataclass(frozen=True)
class SccDecomposition:
    """Maximal SCCs in reverse topological order of the condensation.

    ``successors[i]`` lists the components reachable by one edge from
    component ``i``; every entry is smaller than ``i``.
    """

    components: tuple[VertexSet, ...]
    component_of: dict[int, int]
    successors: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.components)

    def is_final(self, i: int) -> bool:
        return not self.successors[i]


def scc_decompose(g) -> SccDecomposition:
    g = as_view(g)
    masks = tarjan_bits(g.game, g.live)
    component_of = {}
    for i, m in enumerate(masks):
        for v in iter_bits(m):
            component_of[v] = i
    succ_sets = []
    for i, m in enumerate(masks):
        out = set()
        for v in iter_bits(m):
            for w in g.successors(v):
                j = component_of[w]
                if j != i:
                    out.add(j)
        succ_sets.append(frozenset(out))
    return SccDecomposition(
        tuple(VertexSet.from_bits(m) for m in masks), component_of, tuple(succ_sets)
    )


def final_sccs(d: SccDecomposition) -> list[VertexSet]:
    return [c for i, c in enumerate(d.components) if d.is_final(i)]


def is_trivial_component(g: PseudoParityGame, comp: VertexSet) -> bool:
    """True for a single vertex without a self-loop (no cycle inside)."""
    if len(comp) != 1:
        return False
    (v,) = comp
    return v not in g.successors(v)
