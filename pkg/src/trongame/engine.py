"""Exact Tron game semantics: placement, alternating movement, pass-when-stuck.

The movement loop alternates strictly Alice, Bob, Alice, ... A player whose
every neighbor is already traversed passes explicitly; the game ends exactly
when two consecutive passes occur, so the non-stuck player keeps moving.
Start vertices count toward the traversal totals.

States are small immutable tuples; all functions here are pure, so shared
graphs can be searched concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .graph import Graph, VertexSet, mask_contains, mask_from

ALICE = 0
BOB = 1

PLACE_ALICE = 0
PLACE_BOB = 1
MOVEMENT = 2

# A move is a vertex index; PASS is the forced move of a stuck player.
Move = Optional[int]
PASS: Move = None


class EngineError(ValueError):
    """Raised for invalid rules, states, or moves."""


class Objective(str, Enum):
    RATIO = "ratio"
    CLASSIFICATION = "classification"


class Classification(str, Enum):
    ALICE_WINS = "AliceWins"
    TIE = "Tie"
    BOB_WINS = "BobWins"


@dataclass(frozen=True)
class GameRules:
    """Variant knobs: start mode, Bob's start whitelist, Alice handicap, objective.

    ``given_starts`` of ``(v1, v2)`` places Alice on v1 and Bob on v2 before
    play; ``None`` is free placement. ``bob_start_whitelist`` restricts Bob's
    free placement to a vertex set (bitmask). ``handicap_moves`` makes Alice
    move t times between her placement and Bob's (free mode only).
    """

    given_starts: tuple[int, int] | None = None
    bob_start_whitelist: VertexSet | None = None
    handicap_moves: int = 0
    objective: Objective = Objective.RATIO

    @staticmethod
    def free(
        *,
        whitelist: Iterable[int] | None = None,
        handicap_moves: int = 0,
        objective: Objective = Objective.RATIO,
    ) -> "GameRules":
        mask = None if whitelist is None else mask_from(whitelist)
        return GameRules(None, mask, handicap_moves, objective)

    @staticmethod
    def given(
        v1: int,
        v2: int,
        *,
        objective: Objective = Objective.RATIO,
    ) -> "GameRules":
        return GameRules((v1, v2), None, 0, objective)


class GameState(NamedTuple):
    phase: int
    to_move: int
    alice_pos: int  # -1 until placed
    bob_pos: int
    used: VertexSet
    alice_count: int
    bob_count: int
    passes: int  # consecutive passes; 2 <=> terminal
    handicap_left: int


@dataclass(frozen=True)
class Outcome:
    """Exact terminal result: traversal counts, rational ratio, classification."""

    alpha: int
    beta: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.beta, self.alpha)

    @property
    def classification(self) -> Classification:
        if self.beta > self.alpha:
            return Classification.BOB_WINS
        if self.alpha > self.beta:
            return Classification.ALICE_WINS
        return Classification.TIE

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "ratio": [self.beta, self.alpha],
            "classification": self.classification.value,
        }


def validate_rules(g: Graph, rules: GameRules) -> None:
    if rules.given_starts is not None:
        v1, v2 = rules.given_starts
        if not (0 <= v1 < g.n and 0 <= v2 < g.n):
            raise EngineError(f"start vertices ({v1}, {v2}) out of range")
        if v1 == v2:
            raise EngineError(f"identical start vertices ({v1})")
        if rules.handicap_moves:
            raise EngineError("handicap moves cannot be combined with given starts")
        if rules.bob_start_whitelist is not None:
            raise EngineError("whitelist is meaningless with given starts")
    else:
        # Alice consumes at most handicap+1 vertices before Bob places; Bob
        # must always find a start, so the payoff denominator stays positive.
        if g.n < rules.handicap_moves + 2:
            raise EngineError(
                f"free placement needs at least {rules.handicap_moves + 2} "
                f"vertices with {rules.handicap_moves} handicap moves, got {g.n}"
            )
        if rules.bob_start_whitelist is not None:
            wl = rules.bob_start_whitelist
            if wl == 0:
                raise EngineError("empty Bob start whitelist")
            if wl >> g.n:
                raise EngineError("whitelist contains out-of-range vertices")
    if rules.handicap_moves < 0:
        raise EngineError("handicap moves must be nonnegative")


def initial_state(g: Graph, rules: GameRules) -> GameState:
    validate_rules(g, rules)
    if rules.given_starts is not None:
        v1, v2 = rules.given_starts
        used = (1 << v1) | (1 << v2)
        return GameState(MOVEMENT, ALICE, v1, v2, used, 1, 1, 0, 0)
    return GameState(PLACE_ALICE, ALICE, -1, -1, 0, 0, 0, 0, rules.handicap_moves)


def is_terminal(state: GameState) -> bool:
    return state.passes >= 2


def legal_moves(g: Graph, rules: GameRules, state: GameState) -> list[Move]:
    """Legal moves for the side to move; a stuck mover's only move is PASS."""
    if is_terminal(state):
        raise EngineError("no moves in a terminal state")
    if state.phase == PLACE_ALICE:
        return list(range(g.n))
    if state.phase == PLACE_BOB:
        allowed = ~state.used
        if rules.bob_start_whitelist is not None:
            allowed &= rules.bob_start_whitelist
        out = [v for v in range(g.n) if (allowed >> v) & 1]
        if not out:
            raise EngineError("Bob has no admissible start vertex left")
        return out
    pos = state.alice_pos if state.to_move == ALICE else state.bob_pos
    free = g.adj_masks[pos] & ~state.used
    if free == 0:
        return [PASS]
    out = []
    while free:
        low = free & -free
        out.append(low.bit_length() - 1)
        free ^= low
    return out


def apply_move(g: Graph, rules: GameRules, state: GameState, move: Move) -> GameState:
    """Apply a legal move, validating it first."""
    if move not in legal_moves(g, rules, state):
        raise EngineError(f"illegal move {move!r} in state {state}")
    return apply_move_unchecked(state, move)


def apply_move_unchecked(state: GameState, move: Move) -> GameState:
    """Transition without legality checks (hot path for search)."""
    phase, to_move, apos, bpos, used, acnt, bcnt, passes, hleft = state
    if phase == PLACE_ALICE:
        used |= 1 << move
        if hleft > 0:
            return GameState(MOVEMENT, ALICE, move, -1, used, 1, 0, 0, hleft)
        return GameState(PLACE_BOB, BOB, move, -1, used, 1, 0, 0, 0)
    if phase == PLACE_BOB:
        return GameState(MOVEMENT, ALICE, apos, move, used | (1 << move), acnt, 1, 0, 0)
    if hleft > 0:
        # Alice's handicap moves happen before Bob places; they cannot end
        # the game, so the pass counter stays at zero.
        if move is not PASS:
            apos = move
            used |= 1 << move
            acnt += 1
        hleft -= 1
        if hleft == 0:
            return GameState(PLACE_BOB, BOB, apos, bpos, used, acnt, bcnt, 0, 0)
        return GameState(MOVEMENT, ALICE, apos, bpos, used, acnt, bcnt, 0, hleft)
    if move is PASS:
        return GameState(MOVEMENT, 1 - to_move, apos, bpos, used, acnt, bcnt, passes + 1, 0)
    used |= 1 << move
    if to_move == ALICE:
        return GameState(MOVEMENT, BOB, move, bpos, used, acnt + 1, bcnt, 0, 0)
    return GameState(MOVEMENT, ALICE, apos, move, used, acnt, bcnt + 1, 0, 0)


def outcome_of(state: GameState) -> Outcome:
    if not is_terminal(state):
        raise EngineError("outcome requested for a non-terminal state")
    return Outcome(state.alice_count, state.bob_count)


def replay(g: Graph, rules: GameRules, moves: Iterable[Move]) -> GameState:
    """Replay a move sequence through full validation; returns the end state."""
    state = initial_state(g, rules)
    for move in moves:
        state = apply_move(g, rules, state, move)
    return state


def move_to_json(move: Move) -> int | str:
    return "pass" if move is PASS else move


def move_from_json(value: int | str) -> Move:
    if value == "pass":
        return PASS
    return int(value)
