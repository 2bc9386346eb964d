"""Shared fixtures: tiny graph builders and the brute-force game oracle."""

from __future__ import annotations

from fractions import Fraction

from trongame.engine import (
    ALICE,
    BOB,
    PLACE_ALICE,
    PLACE_BOB,
    GameRules,
    apply_move,
    initial_state,
    is_terminal,
    legal_moves,
    outcome_of,
)
from trongame.graph import Graph, build_graph


def path_graph(n: int, directed: bool = False) -> Graph:
    return build_graph(directed, n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(False, n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(False, n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at index 0."""
    return build_graph(False, leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _mover(state):
    if state.phase == PLACE_ALICE:
        return ALICE
    if state.phase == PLACE_BOB:
        return BOB
    return state.to_move


def brute_ratio_value(g: Graph, rules: GameRules) -> Fraction:
    """Independent oracle: plain minimax over every placement and play line,
    driven through the validating engine API with no memoization or pruning."""

    def rec(state) -> Fraction:
        if is_terminal(state):
            return outcome_of(state).ratio
        values = [
            rec(apply_move(g, rules, state, move))
            for move in legal_moves(g, rules, state)
        ]
        return max(values) if _mover(state) == BOB else min(values)

    return rec(initial_state(g, rules))


def brute_classification_value(g: Graph, rules: GameRules) -> int:
    """Same oracle over the three-valued scale: -1 Alice wins, 0 tie, 1 Bob wins."""

    def rec(state) -> int:
        if is_terminal(state):
            out = outcome_of(state)
            return (out.beta > out.alpha) - (out.alpha > out.beta)
        values = [
            rec(apply_move(g, rules, state, move))
            for move in legal_moves(g, rules, state)
        ]
        return max(values) if _mover(state) == BOB else min(values)

    return rec(initial_state(g, rules))
