"""Parity game solving: Zielonka's recursive algorithm, its SCC variant,
dedicated solvers for weak, dull and nested solitaire games, and generators
for the families that make the recursive algorithm slow."""
from .game import (
    DanglingEdge,
    EmptyGame,
    EmptyRestriction,
    EmptySuccessors,
    GameError,
    NotTotal,
    ParityGame,
    Player,
    PreconditionError,
    PseudoParityGame,
    VertexSet,
    build_game,
    is_total,
    max_priority,
    remove,
    restrict,
    vertices_with_priority,
)
from .graph import SccDecomposition, attractor, final_sccs, scc_decompose
from .zielonka import BudgetExceeded, Solution, SolveStats, solve_recursive, solve_recursive_scc

__version__ = "0.1.0"
