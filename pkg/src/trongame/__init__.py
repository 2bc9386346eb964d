"""Tron on graphs: exact solving, extremal constructions, hardness reductions."""

from .engine import (
    ALICE,
    BOB,
    PASS,
    Classification,
    EngineError,
    GameRules,
    GameState,
    Objective,
    Outcome,
    apply_move,
    initial_state,
    is_terminal,
    legal_moves,
    outcome_of,
    replay,
)
from .graph import Graph, GraphError, bfs_distances, build_graph
from .solver import (
    BudgetExhaustedError,
    PolicyError,
    SolveResult,
    optimal_start_report,
    solve,
    solve_vs_policy,
)

__version__ = "0.1.0"

__all__ = [
    "ALICE",
    "BOB",
    "PASS",
    "BudgetExhaustedError",
    "Classification",
    "EngineError",
    "GameRules",
    "GameState",
    "Graph",
    "GraphError",
    "Objective",
    "Outcome",
    "PolicyError",
    "SolveResult",
    "apply_move",
    "bfs_distances",
    "build_graph",
    "initial_state",
    "is_terminal",
    "legal_moves",
    "optimal_start_report",
    "outcome_of",
    "replay",
    "solve",
    "solve_vs_policy",
    "__version__",
]
