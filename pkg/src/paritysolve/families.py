"""Generators for the hard game families and seeded random games.

Vertex id layout is fixed per family so that files and stats baselines stay
stable: the v-block first, then the u-block, then the w-block.

* ``gen_weak(n)``: v1..v2n -> 0..2n-1, u0 -> 2n, u1 -> 2n+1
* ``gen_solitaire(n)``: v0..v(2n-1) -> 0..2n-1, u1..un -> 2n..3n-1
* ``gen_whitegame(n)``: v1..vn -> 0..n-1, u1..un -> n..2n-1, w1..wn -> 2n..3n-1
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .game import Player, ParityGame, build_game

EVEN, ODD = Player.EVEN, Player.ODD

FAMILIES = (
    "weak_W",
    "solitaire_S",
    "solitaire_S_strong",
    "whitegame_H",
    "random",
    "random_weak",
    "random_dull",
    "random_solitaire",
    "random_nested_solitaire",
)
RANDOM_FAMILIES = tuple(f for f in FAMILIES if f.startswith("random"))


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    seed: int = 0
    max_out: int = 3
    max_priority: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be at least 1")


def gen_weak(n: int) -> ParityGame:
    if n < 1:
        raise ValueError("n must be at least 1")
    u0, u1 = 2 * n, 2 * n + 1
    records = []
    for i in range(1, n + 1):
        # v_i; the i = 1 row leads to u0 instead of the nonexistent v_0
        records.append((EVEN, i + 2, [i - 2 if i > 1 else u0, n + i - 1]))
    for i in range(1, n + 1):
        records.append((ODD, i + 2, [i - 1, n + i - 2 if i > 1 else u1]))
    records.append((EVEN, 0, [u0]))
    records.append((ODD, 1, [u1]))
    names = [f"v{i}" for i in range(1, 2 * n + 1)] + ["u0", "u1"]
    return build_game(records, names)


def gen_solitaire(n: int, strong: bool = False) -> ParityGame:
    if n < 1:
        raise ValueError("n must be at least 1")
    u = lambda j: 2 * n + j - 1  # noqa: E731
    records = [(EVEN, 2, [0] + ([u(j) for j in range(1, n + 1)] if strong else []))]
    for i in range(1, 2 * n):
        records.append((EVEN, i + 2, [i - 1]))
    for j in range(1, n + 1):
        records.append((EVEN, 1, [u(j), 2 * j - 1]))
    names = [f"v{i}" for i in range(2 * n)] + [f"u{j}" for j in range(1, n + 1)]
    return build_game(records, names)


def gen_whitegame(n: int) -> ParityGame:
    if n < 1:
        raise ValueError("n must be at least 1")
    v = lambda i: i - 1  # noqa: E731
    u = lambda i: n + i - 1  # noqa: E731
    w = lambda i: 2 * n + i - 1  # noqa: E731
    records = []
    for i in range(1, n + 1):
        owner = ODD if i % 2 == 0 else EVEN
        records.append((owner, i + 1, [u(i)] + ([v(i + 1)] if i < n else [])))
    for i in range(1, n + 1):
        owner = ODD if i % 2 == 0 else EVEN
        records.append((owner, i % 2, [w(i)] + ([v(i + 1)] if i < n else [])))
    for i in range(1, n + 1):
        owner = EVEN if i % 2 == 0 else ODD
        records.append((owner, i % 2, [u(i)] + ([w(i - 1)] if i > 1 else [])))
    names = [f"{c}{i}" for c in "vuw" for i in range(1, n + 1)]
    return build_game(records, names)


def expected_calls_weak(n: int) -> int:
    """Lower bound on Zielonka calls for ``gen_weak(n)``: 1 + n(n+1)/2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return 1 + n * (n + 1) // 2


def _random_total(rng: random.Random, n: int, max_out: int, max_priority: int) -> ParityGame:
    records = []
    for _ in range(n):
        k = rng.randint(1, min(max_out, n))
        records.append((rng.randrange(2), rng.randint(0, max_priority), rng.sample(range(n), k)))
    return build_game(records)


def _random_weak(rng: random.Random, n: int, max_out: int, max_priority: int) -> ParityGame:
    prios = [rng.randint(0, max_priority) for _ in range(n)]
    records = []
    for v in range(n):
        allowed = [w for w in range(n) if prios[w] <= prios[v]]
        k = rng.randint(1, min(max_out, len(allowed)))
        records.append((rng.randrange(2), prios[v], rng.sample(allowed, k)))
    return build_game(records)


def _blocks(rng: random.Random, n: int) -> list[list[int]]:
    """Split a shuffled ``range(n)`` into consecutive nonempty blocks."""
    order = list(range(n))
    rng.shuffle(order)
    blocks, i = [], 0
    while i < n:
        size = rng.randint(1, max(1, min(4, n - i)))
        blocks.append(order[i : i + size])
        i += size
    return blocks


def _random_dull(rng: random.Random, n: int, max_out: int, max_priority: int) -> ParityGame:
    # Each block is a flower: every internal cycle passes its hub, whose
    # priority is the block maximum, so all cycles in a block share one
    # dominant parity.  Blocks are joined by edges to earlier blocks only.
    blocks = _blocks(rng, n)
    owners = [rng.randrange(2) for _ in range(n)]
    prios = [0] * n
    succ: list[set[int]] = [set() for _ in range(n)]
    for bi, block in enumerate(blocks):
        hub, petals = block[0], block[1:]
        top = rng.randint(0, max_priority)
        prios[hub] = top
        for v in petals:
            prios[v] = rng.randint(0, top)
        cyclic = bi == 0 or rng.random() < 0.8
        if cyclic:
            if not petals:
                succ[hub].add(hub)
            else:
                # petals form paths hub -> x1 -> ... -> hub; chords only skip forward
                k = rng.randint(1, min(len(petals), max(1, max_out - 1)))
                cuts = sorted(rng.sample(range(1, len(petals)), k - 1)) if k > 1 else []
                bounds = [0] + cuts + [len(petals)]
                for a, b in zip(bounds, bounds[1:]):
                    path = petals[a:b]
                    succ[hub].add(path[0])
                    for x, y in zip(path, path[1:]):
                        succ[x].add(y)
                    succ[path[-1]].add(hub)
                    for i, x in enumerate(path):
                        if max_out > 2 and rng.random() < 0.3:
                            succ[x].add(rng.choice(path[i + 1 :] + [hub]))
        earlier = [v for b in blocks[:bi] for v in b]
        for v in block:
            if earlier and (not succ[v] or len(succ[v]) < max_out and rng.random() < 0.4):
                succ[v].add(rng.choice(earlier))
            if not succ[v]:
                # acyclic block with nothing earlier cannot happen: block 0 is cyclic
                raise AssertionError("random dull generator produced a dead end")
    records = [(owners[v], prios[v], sorted(succ[v])) for v in range(n)]
    return build_game(records)


def _random_solitaire(
    rng: random.Random, n: int, max_out: int, max_priority: int, nested: bool
) -> ParityGame:
    # Vertices of the block's chooser get several successors inside the block;
    # the others exactly one.  Nested games add edges to earlier blocks only.
    blocks = _blocks(rng, n) if nested else [list(range(n))]
    if not nested:
        rng.shuffle(blocks[0])
    records: list = [None] * n
    for bi, block in enumerate(blocks):
        chooser = rng.randrange(2)
        earlier = [v for b in blocks[:bi] for v in b]
        for v in block:
            owner = chooser if rng.random() < 0.6 else 1 - chooser
            down = bool(earlier) and rng.random() < 0.3
            cap = max(1, max_out - down)
            k = rng.randint(1, min(cap, len(block))) if owner == chooser else 1
            succ = set(rng.sample(block, k))
            if down:
                succ.add(rng.choice(earlier))
            records[v] = (owner, rng.randint(0, max_priority), sorted(succ))
    return build_game(records)


def gen_random(spec: FamilySpec) -> ParityGame:
    """A seeded random total game; the same spec always yields the same game."""
    if spec.family not in RANDOM_FAMILIES:
        raise ValueError(f"{spec.family!r} is not a random family")
    rng = random.Random(f"{spec.family}:{spec.n}:{spec.seed}")
    top = spec.max_priority if spec.max_priority is not None else spec.n
    if spec.family == "random":
        return _random_total(rng, spec.n, spec.max_out, top)
    if spec.family == "random_weak":
        return _random_weak(rng, spec.n, spec.max_out, top)
    if spec.family == "random_dull":
        return _random_dull(rng, spec.n, spec.max_out, top)
    return _random_solitaire(
        rng, spec.n, spec.max_out, top, nested=spec.family == "random_nested_solitaire"
    )


def generate(spec: FamilySpec) -> ParityGame:
    if spec.family == "weak_W":
        return gen_weak(spec.n)
    if spec.family == "solitaire_S":
        return gen_solitaire(spec.n)
    if spec.family == "solitaire_S_strong":
        return gen_solitaire(spec.n, strong=True)
    if spec.family == "whitegame_H":
        return gen_whitegame(spec.n)
    return gen_random(spec)
