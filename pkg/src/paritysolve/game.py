"""Parity game model: players, vertex sets, total games and subgame views.

Games follow the max-parity convention: a play is won by Even iff the
highest priority occurring infinitely often is even.

Vertex sets are immutable bitsets over dense integer ids.  A subgame
(``PseudoParityGame``) is the parent game plus a live-vertex mask, so
restricting or removing vertices never copies the graph.
"""
from __future__ import annotations

import enum
from typing import Iterable, Iterator, Sequence


class GameError(ValueError):
    """Base class for malformed games and violated preconditions."""


class EmptySuccessors(GameError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} has no successors (edge relation not total)")
        self.vertex = vertex


class DanglingEdge(GameError):
    def __init__(self, vertex: int, target: int):
        super().__init__(f"edge {vertex} -> {target} points outside the game")
        self.vertex = vertex
        self.target = target


class EmptyRestriction(GameError):
    pass


class EmptyGame(GameError):
    pass


class PreconditionError(GameError):
    """A solver was handed a game outside its input class."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotTotal(PreconditionError):
    pass


class Player(enum.IntEnum):
    """The two players; the value doubles as the parity bit they win on."""

    EVEN = 0
    ODD = 1

    @property
    def opponent(self) -> "Player":
        return Player(1 - self)

    @property
    def symbol(self) -> str:
        return "◇" if self is Player.EVEN else "□"

    @classmethod
    def of_priority(cls, priority: int) -> "Player":
        return cls(priority & 1)


def opponent(player: Player) -> Player:
    return Player(1 - player)


def iter_bits(bits: int) -> list[int]:
    """Ascending positions of the set bits of ``bits``."""
    # str.find keeps the scan in C; Python work is proportional to the set bits
    s = bin(bits)[:1:-1]
    out = []
    i = s.find("1")
    while i >= 0:
        out.append(i)
        i = s.find("1", i + 1)
    return out


def bits_of(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


class VertexSet:
    """Immutable set of vertex ids backed by an integer bitmask."""

    __slots__ = ("bits",)

    def __init__(self, vertices: Iterable[int] = ()):
        if isinstance(vertices, VertexSet):
            self.bits = vertices.bits
        else:
            self.bits = bits_of(vertices)

    @classmethod
    def from_bits(cls, bits: int) -> "VertexSet":
        s = cls.__new__(cls)
        s.bits = bits
        return s

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(iter_bits(self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexSet):
            return self.bits == other.bits
        if isinstance(other, (set, frozenset)):
            return self.bits == bits_of(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.bits)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_bits(self.bits | VertexSet(other).bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_bits(self.bits & VertexSet(other).bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_bits(self.bits & ~VertexSet(other).bits)

    def __le__(self, other: "VertexSet") -> bool:
        return self.bits & ~VertexSet(other).bits == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self.bits & VertexSet(other).bits == 0

    def sorted(self) -> list[int]:
        return iter_bits(self.bits)

    def __repr__(self) -> str:
        return f"VertexSet({iter_bits(self.bits)})"


class ParityGame:
    """A finite total parity game with dense vertex ids ``0..n-1``.

    Successor lists are deduplicated and sorted; predecessor lists are their
    exact transpose.  Instances are immutable after construction.
    """

    __slots__ = (
        "owners",
        "priorities",
        "successors",
        "predecessors",
        "names",
        "all_bits",
        "levels",
        "level_bits",
        "edge_count",
    )

    def __init__(self, owners, priorities, successors, names=None):
        n = len(owners)
        self.owners: tuple[Player, ...] = tuple(Player(o) for o in owners)
        self.priorities: tuple[int, ...] = tuple(priorities)
        self.successors: tuple[tuple[int, ...], ...] = tuple(tuple(s) for s in successors)
        self.names = tuple(names) if names is not None else None
        preds: list[list[int]] = [[] for _ in range(n)]
        for v, succ in enumerate(self.successors):
            for w in succ:
                preds[w].append(v)
        self.predecessors = tuple(tuple(p) for p in preds)
        self.all_bits = (1 << n) - 1
        # distinct priorities ascending, with the vertex mask of each
        self.levels: tuple[int, ...] = tuple(sorted(set(self.priorities)))
        masks = {q: 0 for q in self.levels}
        for v, q in enumerate(self.priorities):
            masks[q] |= 1 << v
        self.level_bits: tuple[int, ...] = tuple(masks[q] for q in self.levels)
        self.edge_count = sum(len(s) for s in self.successors)

    def __len__(self) -> int:
        return len(self.owners)

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.from_bits(self.all_bits)

    @property
    def priority_count(self) -> int:
        return len(self.levels)

    def owner_set(self, player: Player) -> VertexSet:
        return VertexSet(v for v, o in enumerate(self.owners) if o == player)

    def records(self) -> list[tuple[Player, int, tuple[int, ...]]]:
        return list(zip(self.owners, self.priorities, self.successors))

    def view(self) -> "PseudoParityGame":
        return PseudoParityGame(self, self.all_bits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParityGame):
            return NotImplemented
        return (
            self.owners == other.owners
            and self.priorities == other.priorities
            and self.successors == other.successors
        )

    def __hash__(self) -> int:
        return hash((self.owners, self.priorities, self.successors))

    def __repr__(self) -> str:
        return (
            f"ParityGame(vertices={len(self)}, edges={self.edge_count}, "
            f"priorities={self.priority_count})"
        )


def build_game(
    records: Sequence[tuple[int, int, Iterable[int]]], names: Sequence[str] | None = None
) -> ParityGame:
    """Build a game from ``(owner, priority, successors)`` records.

    Vertex ``i`` is ``records[i]``.  Duplicate edges are collapsed; self-loops
    are kept.
    """
    n = len(records)
    owners, priorities, successors = [], [], []
    for v, (owner, priority, succ) in enumerate(records):
        if int(owner) not in (0, 1):
            raise GameError(f"vertex {v}: owner must be 0 (even) or 1 (odd), got {owner!r}")
        if not isinstance(priority, int) or priority < 0:
            raise GameError(f"vertex {v}: priority must be a nonnegative integer, got {priority!r}")
        succ = sorted(set(succ))
        if not succ:
            raise EmptySuccessors(v)
        for w in succ:
            if not 0 <= w < n:
                raise DanglingEdge(v, w)
        owners.append(Player(int(owner)))
        priorities.append(priority)
        successors.append(succ)
    return ParityGame(owners, priorities, successors, names)


class PseudoParityGame:
    """A subgame: the parent game restricted to the vertices in ``live``.

    Edges leaving the live set are invisible, so a view need not be total.
    """

    __slots__ = ("game", "live")

    def __init__(self, game: ParityGame, live: int):
        self.game = game
        self.live = live

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.from_bits(self.live)

    def __len__(self) -> int:
        return self.live.bit_count()

    def __bool__(self) -> bool:
        return self.live != 0

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.live >> v & 1)

    def successors(self, v: int) -> list[int]:
        live = self.live
        return [w for w in self.game.successors[v] if live >> w & 1]

    def predecessors(self, v: int) -> list[int]:
        live = self.live
        return [u for u in self.game.predecessors[v] if live >> u & 1]

    def owner(self, v: int) -> Player:
        return self.game.owners[v]

    def priority(self, v: int) -> int:
        return self.game.priorities[v]

    @property
    def edge_count(self) -> int:
        return sum(len(self.successors(v)) for v in iter_bits(self.live))

    def __eq__(self, other) -> bool:
        if isinstance(other, ParityGame):
            other = other.view()
        if not isinstance(other, PseudoParityGame):
            return NotImplemented
        return self.live == other.live and (self.game is other.game or self.game == other.game)

    def __hash__(self) -> int:
        return hash((id(self.game), self.live))

    def __repr__(self) -> str:
        return f"PseudoParityGame({iter_bits(self.live)})"


def as_view(g: ParityGame | PseudoParityGame) -> PseudoParityGame:
    return g.view() if isinstance(g, ParityGame) else g


def _mask(a) -> int:
    if isinstance(a, int):
        return a
    return VertexSet(a).bits


def restrict(g: ParityGame | PseudoParityGame, a) -> PseudoParityGame:
    """The subgame on the nonempty vertex set ``a`` (edges inside ``a`` only)."""
    g = as_view(g)
    bits = _mask(a)
    if not bits:
        raise EmptyRestriction("cannot restrict a game to the empty set")
    if bits & ~g.live:
        raise GameError("restriction set is not contained in the game's vertices")
    return PseudoParityGame(g.game, bits)


def remove(g: ParityGame | PseudoParityGame, a) -> PseudoParityGame:
    """The subgame without the vertices of ``a``; may be empty."""
    g = as_view(g)
    bits = _mask(a)
    if bits & ~g.live:
        raise GameError("removed set is not contained in the game's vertices")
    return PseudoParityGame(g.game, g.live & ~bits)


def is_total(g: ParityGame | PseudoParityGame) -> bool:
    g = as_view(g)
    live, succ = g.live, g.game.successors
    for v in iter_bits(live):
        if not any(live >> w & 1 for w in succ[v]):
            return False
    return True


def top_level(game: ParityGame, live: int, start: int | None = None) -> int:
    """Index into ``game.levels`` of the highest priority present in ``live``.

    ``start`` is an upper bound on the answer; scanning descends from it.
    """
    i = len(game.levels) - 1 if start is None else start
    level_bits = game.level_bits
    while not live & level_bits[i]:
        i -= 1
    return i


def max_priority(g: ParityGame | PseudoParityGame) -> int:
    g = as_view(g)
    if not g.live:
        raise EmptyGame("an empty game has no maximal priority")
    return g.game.levels[top_level(g.game, g.live)]


def vertices_with_priority(g: ParityGame | PseudoParityGame, m: int) -> VertexSet:
    g = as_view(g)
    if not g.live:
        raise EmptyGame("an empty game has no vertices")
    return VertexSet.from_bits(
        g.live & bits_of(v for v, q in enumerate(g.game.priorities) if q == m)
    )
