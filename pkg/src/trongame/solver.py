"""Exact game values by full-depth minimax with memoization and cutoffs.

Two objectives share one search core: the ratio objective propagates exact
``Fraction`` payoffs (Bob maximizes beta/alpha, Alice minimizes), while the
classification objective searches the three-valued scale AliceWins < Tie <
BobWins, which admits aggressive alpha-beta cutoffs. Ties between equally
valued moves break toward the lowest vertex index (Pass last), so results
and principal variations are deterministic.

The transposition key is the full game state including the traversal counts:
two positions with identical boards but different accumulated counts can
have different optimal continuations under the ratio payoff, so counts must
not be collapsed out of the key.

A linear-space mode disables the table entirely; its stack depth stays within
2*n + 3 frames because every play ends within 2*n + 2 plies.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .engine import (
    ALICE,
    BOB,
    MOVEMENT,
    PASS,
    PLACE_ALICE,
    PLACE_BOB,
    EngineError,
    GameRules,
    GameState,
    Move,
    Objective,
    Outcome,
    apply_move_unchecked,
    initial_state,
    is_terminal,
    legal_moves,
    outcome_of,
)
from .graph import Graph

# A scripted policy maps a state (where its side is to move) to a single move.
ScriptedPolicy = Callable[[Graph, GameRules, GameState], Move]

_EXACT, _LOWER, _UPPER = 0, 1, 2
_NEG_INF = float("-inf")
_POS_INF = float("inf")


class BudgetExhaustedError(RuntimeError):
    """Raised by operations that cannot return a partial result."""


class PolicyError(ValueError):
    """Raised when a scripted policy returns an illegal move."""


class _OutOfBudget(Exception):
    pass


@dataclass
class SolveResult:
    """Solved value plus the machine-checkable evidence for it.

    When ``budget_exhausted`` is False, ``outcome`` is exact and replaying
    ``principal_variation`` through the engine reproduces it move for move.
    When the node budget ran out, ``outcome`` is None and ``value`` holds the
    best bound established before the search was cut off (None if nothing
    finished).
    """

    outcome: Outcome | None
    value: Fraction | int | float | None
    principal_variation: list[Move] = field(default_factory=list)
    nodes_expanded: int = 0
    max_stack_depth: int = 0
    budget_exhausted: bool = False

    def to_json(self) -> dict:
        data = {
            "outcome": None if self.outcome is None else self.outcome.to_json(),
            "principal_variation": [
                "pass" if m is PASS else m for m in self.principal_variation
            ],
            "nodes_expanded": self.nodes_expanded,
            "max_stack_depth": self.max_stack_depth,
            "budget_exhausted": self.budget_exhausted,
        }
        if self.outcome is None and self.value is not None:
            v = self.value
            data["value_bound"] = (
                [v.numerator, v.denominator] if isinstance(v, Fraction) else v
            )
        return data


class _Search:
    def __init__(
        self,
        g: Graph,
        rules: GameRules,
        node_budget: int | None,
        use_memo: bool,
        policy: ScriptedPolicy | None = None,
        scripted_side: int | None = None,
    ):
        self.g = g
        self.rules = rules
        self.ratio = rules.objective == Objective.RATIO
        self.budget = node_budget
        self.memo: dict[GameState, tuple[int, object, Move]] | None = (
            {} if use_memo else None
        )
        self.policy = policy
        self.scripted_side = scripted_side
        self.nodes = 0
        self.max_depth = 0
        self.full_mask = (1 << g.n) - 1
        self.whitelist = (
            rules.bob_start_whitelist
            if rules.bob_start_whitelist is not None
            else self.full_mask
        )

    # -- move generation ------------------------------------------------

    def _mover(self, state: GameState) -> int:
        if state.phase == PLACE_ALICE:
            return ALICE
        if state.phase == PLACE_BOB:
            return BOB
        return state.to_move

    def _moves(self, state: GameState) -> list[Move]:
        """Candidate moves in ascending vertex order, Pass last (and alone)."""
        if state.phase == PLACE_ALICE:
            return list(range(self.g.n))
        if state.phase == PLACE_BOB:
            mask = ~state.used & self.full_mask & self.whitelist
            if mask == 0:
                raise EngineError("Bob has no admissible start vertex left")
        else:
            pos = state.alice_pos if state.to_move == ALICE else state.bob_pos
            mask = self.g.adj_masks[pos] & ~state.used
            if mask == 0:
                return [PASS]
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def _scripted_move(self, state: GameState) -> Move:
        move = self.policy(self.g, self.rules, state)
        if move not in legal_moves(self.g, self.rules, state):
            raise PolicyError(
                f"scripted policy returned illegal move {move!r} in state {state}"
            )
        return move

    def _children_moves(self, state: GameState) -> list[Move]:
        if self.policy is not None and self._mover(state) == self.scripted_side:
            return [self._scripted_move(state)]
        return self._moves(state)

    def _leaf(self, state: GameState):
        if self.ratio:
            return Fraction(state.bob_count, state.alice_count)
        a, b = state.alice_count, state.bob_count
        return (b > a) - (a > b)

    # -- core alpha-beta with transposition bounds ----------------------

    def _search(self, state: GameState, alpha, beta, depth: int):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _OutOfBudget
        if depth > self.max_depth:
            self.max_depth = depth
        if state.passes >= 2:
            return self._leaf(state)

        memo = self.memo
        if memo is not None:
            entry = memo.get(state)
            if entry is not None:
                flag, val, _ = entry
                if flag == _EXACT:
                    return val
                if flag == _LOWER:
                    if val > alpha:
                        alpha = val
                elif val < beta:
                    beta = val
                if alpha >= beta:
                    return val

        alpha0, beta0 = alpha, beta
        maximizing = self._mover(state) == BOB
        best = _NEG_INF if maximizing else _POS_INF
        best_move: Move = PASS
        for move in self._children_moves(state):
            child = apply_move_unchecked(state, move)
            val = self._search(child, alpha, beta, depth + 1)
            if maximizing:
                if val > best:
                    best, best_move = val, move
                    if best > alpha:
                        alpha = best
                    if alpha >= beta:
                        break
            else:
                if val < best:
                    best, best_move = val, move
                    if best < beta:
                        beta = best
                    if alpha >= beta:
                        break

        if memo is not None:
            if best <= alpha0:
                flag = _UPPER
            elif best >= beta0:
                flag = _LOWER
            else:
                flag = _EXACT
            memo[state] = (flag, best, best_move)
        return best

    # -- principal variation --------------------------------------------

    def extract_pv(self, state: GameState, value) -> tuple[list[Move], GameState]:
        """Walk optimal moves from ``state``; exempt from the node budget."""
        saved_budget, self.budget = self.budget, None
        pv: list[Move] = []
        try:
            while not is_terminal(state):
                for move in self._children_moves(state):
                    child = apply_move_unchecked(state, move)
                    if self._search(child, _NEG_INF, _POS_INF, 1) == value:
                        pv.append(move)
                        state = child
                        break
                else:  # pragma: no cover - would indicate a search bug
                    raise AssertionError("no child matches the solved value")
        finally:
            self.budget = saved_budget
        return pv, state

    # -- root driver -----------------------------------------------------

    def run(self, root: GameState) -> SolveResult:
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * self.g.n + 500))
        if is_terminal(root):
            out = outcome_of(root)
            return SolveResult(out, self._leaf(root), [], 0, 1, False)
        maximizing = self._mover(root) == BOB
        best = _NEG_INF if maximizing else _POS_INF
        have_any = False
        exhausted = False
        for move in self._children_moves(root):
            child = apply_move_unchecked(root, move)
            # Fail-soft window: the best value so far bounds one side.
            alpha = best if maximizing else _NEG_INF
            beta = _POS_INF if maximizing else best
            try:
                val = self._search(child, alpha, beta, 2)
            except _OutOfBudget:
                exhausted = True
                break
            have_any = True
            if maximizing:
                if val > best:
                    best = val
            elif val < best:
                best = val
        self.max_depth = max(self.max_depth, 1)
        if exhausted:
            return SolveResult(
                None,
                best if have_any else None,
                [],
                self.nodes,
                self.max_depth,
                True,
            )
        pv, terminal = self.extract_pv(root, best)
        return SolveResult(
            outcome_of(terminal), best, pv, self.nodes, self.max_depth, False
        )


def solve(
    g: Graph,
    rules: GameRules,
    node_budget: int | None = None,
    *,
    linear_space: bool = False,
) -> SolveResult:
    """Exact value of the game under rational play for both sides."""
    root = initial_state(g, rules)
    search = _Search(g, rules, node_budget, use_memo=not linear_space)
    return search.run(root)


def solve_vs_policy(
    g: Graph,
    rules: GameRules,
    policy: ScriptedPolicy,
    scripted_side: int,
    node_budget: int | None = None,
) -> SolveResult:
    """Exact value when ``scripted_side`` is fixed to ``policy`` and the other
    side optimizes; the search branches only on the free side."""
    if scripted_side not in (ALICE, BOB):
        raise EngineError(f"scripted side must be ALICE or BOB, got {scripted_side}")
    root = initial_state(g, rules)
    search = _Search(
        g, rules, node_budget, use_memo=True, policy=policy, scripted_side=scripted_side
    )
    return search.run(root)


def optimal_start_report(
    g: Graph,
    rules: GameRules,
    node_budget: int | None = None,
) -> dict[int, Outcome]:
    """Solve the subgame after each possible Alice placement."""
    if rules.given_starts is not None:
        raise EngineError("start report needs free placement rules")
    root = initial_state(g, rules)
    search = _Search(g, rules, node_budget, use_memo=True)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * g.n + 500))
    report: dict[int, Outcome] = {}
    for v in range(g.n):
        child = apply_move_unchecked(root, v)
        try:
            val = search._search(child, _NEG_INF, _POS_INF, 1)
        except _OutOfBudget:
            raise BudgetExhaustedError(
                f"node budget {node_budget} exhausted at start vertex {v}"
            ) from None
        _, terminal = search.extract_pv(child, val)
        report[v] = outcome_of(terminal)
    return report
