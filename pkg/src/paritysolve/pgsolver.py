"""Reading and writing games in the PGSolver text format.

A file is an optional header ``parity <max-id>;`` followed by one record per
vertex::

    <id> <priority> <owner> <succ>(,<succ>)* ["<name>"];

Owner 0 is Even, owner 1 is Odd; priorities follow the max-parity
convention.  Records end with ``;`` and may span or share lines.  Ids must
be exactly ``0..n-1``; the header may give either ``n-1`` or ``n``.  A
``start <id>;`` record is accepted and ignored.
"""
from __future__ import annotations

import re

from .game import EmptySuccessors, GameError, ParityGame, build_game

_RECORD = re.compile(r'(?:[^;"]|"[^"]*")*;')
_HEADER = re.compile(r"parity\s+(\d+)")
_VERTEX = re.compile(
    r"""(?P<id>\S+)\s+(?P<prio>\S+)\s+(?P<owner>\S+)
        (?:\s+(?P<succ>[^\s"]+))?
        (?:\s+"(?P<name>[^"]*)")?""",
    re.VERBOSE,
)


class ParseError(GameError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class TotalityError(EmptySuccessors):
    """A vertex record lists no successors."""


def _int(token: str, what: str, line: int) -> int:
    if not token.isdigit():
        raise ParseError(line, f"{what} must be a nonnegative integer, got {token!r}")
    return int(token)


def parse_pgsolver(text: str) -> ParityGame:
    records: dict[int, tuple[int, int, list[int], str | None, int]] = {}
    header = None
    pos = 0
    for m in _RECORD.finditer(text):
        gap = text[pos : m.start()]
        if gap.strip():
            line = text.count("\n", 0, pos + len(gap) - len(gap.lstrip())) + 1
            raise ParseError(line, f"unexpected text {gap.strip()[:20]!r}")
        pos = m.end()
        body = m.group(0)[:-1]
        stripped = body.strip()
        line = text.count("\n", 0, m.start() + len(body) - len(body.lstrip())) + 1
        if not stripped:
            continue
        if stripped.startswith("parity"):
            h = _HEADER.fullmatch(stripped)
            if h is None or header is not None or records:
                raise ParseError(line, "malformed or misplaced header")
            header = int(h.group(1))
            continue
        if stripped.startswith("start"):
            continue  # initial-vertex declarations carry no game structure
        v = _VERTEX.fullmatch(stripped)
        if v is None:
            raise ParseError(line, f"malformed vertex record {stripped[:40]!r}")
        vid = _int(v.group("id"), "vertex id", line)
        prio = _int(v.group("prio"), "priority", line)
        owner = v.group("owner")
        if owner not in ("0", "1"):
            raise ParseError(line, f"owner must be 0 or 1, got {owner!r}")
        if vid in records:
            raise ParseError(line, f"vertex {vid} defined twice")
        succ_text = v.group("succ")
        if succ_text is None:
            raise TotalityError(vid)
        succ = [_int(t, "successor id", line) for t in succ_text.split(",")]
        records[vid] = (int(owner), prio, succ, v.group("name"), line)
    tail = text[pos:]
    if tail.strip():
        line = text.count("\n", 0, pos + len(tail) - len(tail.lstrip())) + 1
        raise ParseError(line, "record not terminated by ';'")
    if not records:
        raise ParseError(1, "no vertices")
    n = max(records) + 1
    # tools disagree on whether the header holds the largest id or the count
    if header is not None and header not in (n - 1, n):
        raise ParseError(1, f"header declares {header} but the largest id is {n - 1}")
    missing = [i for i in range(n) if i not in records]
    if missing:
        raise ParseError(1, f"vertex ids are not dense: missing {missing[:5]}")
    for vid, (_, _, succ, _, line) in records.items():
        for w in succ:
            if w >= n:
                raise ParseError(line, f"successor {w} of vertex {vid} is not defined")
    names = [records[i][3] for i in range(n)]
    return build_game(
        [records[i][:3] for i in range(n)],
        names if any(x is not None for x in names) else None,
    )


def write_pgsolver(game: ParityGame) -> str:
    """Canonical text: header, ascending ids and successors, no names."""
    if len(game) == 0:
        raise GameError("the format cannot represent a game without vertices")
    lines = [f"parity {len(game) - 1};"]
    for v, (owner, prio, succ) in enumerate(game.records()):
        lines.append(f"{v} {prio} {int(owner)} {','.join(map(str, succ))};")
    return "\n".join(lines) + "\n"
