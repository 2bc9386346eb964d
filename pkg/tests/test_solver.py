from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from trongame.engine import (
    ALICE,
    BOB,
    PASS,
    PLACE_ALICE,
    PLACE_BOB,
    Classification,
    GameRules,
    Objective,
    initial_state,
    is_terminal,
    legal_moves,
    outcome_of,
    replay,
)
from trongame.graph import build_graph
from trongame.solver import (
    BudgetExhaustedError,
    PolicyError,
    optimal_start_report,
    solve,
    solve_vs_policy,
)

from conftest import (
    brute_classification_value,
    brute_ratio_value,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)

RATIO = GameRules.free()
CLASS = GameRules.free(objective=Objective.CLASSIFICATION)


def from_nx(nxg) -> "build_graph":
    return build_graph(False, nxg.number_of_nodes(), list(nxg.edges()))


def atlas_connected(max_n):
    """All connected unlabeled graphs on 2..max_n vertices (networkx atlas)."""
    seen = []
    for nxg in nx.graph_atlas_g():
        n = nxg.number_of_nodes()
        if 2 <= n <= max_n and nx.is_connected(nxg):
            seen.append(from_nx(nx.convert_node_labels_to_integers(nxg)))
    return seen


def test_k3_alice_wins_two_to_one():
    res = solve(complete_graph(3), RATIO)
    assert (res.outcome.alpha, res.outcome.beta) == (2, 1)
    assert res.outcome.classification is Classification.ALICE_WINS


def test_k5_alice_wins():
    res = solve(complete_graph(5), CLASS)
    assert res.outcome.classification is Classification.ALICE_WINS


def test_p2_is_tie():
    res = solve(path_graph(2), RATIO)
    assert (res.outcome.alpha, res.outcome.beta) == (1, 1)


def test_c4_tie_two_two():
    res = solve(cycle_graph(4), RATIO)
    assert (res.outcome.alpha, res.outcome.beta) == (2, 2)


def test_ratio_value_matches_brute_oracle_on_small_connected_graphs():
    for g in atlas_connected(5):
        assert solve(g, RATIO).outcome.ratio == brute_ratio_value(g, RATIO)


def test_classification_matches_brute_oracle_on_small_connected_graphs():
    names = [
        Classification.ALICE_WINS,
        Classification.TIE,
        Classification.BOB_WINS,
    ]
    for g in atlas_connected(5):
        got = solve(g, CLASS).outcome.classification
        assert got is names[brute_classification_value(g, CLASS) + 1]


def test_handicap_value_matches_brute_oracle():
    g = cycle_graph(6)
    rules = GameRules.free(handicap_moves=2)
    assert solve(g, rules).outcome.ratio == brute_ratio_value(g, rules)


def test_given_start_matches_brute_oracle():
    g = cycle_graph(5)
    rules = GameRules.given(0, 2)
    assert solve(g, rules).outcome.ratio == brute_ratio_value(g, rules)


def test_objective_consistency_on_atlas():
    # Classification-objective result equals the classification of the
    # ratio-objective value: the payoff transform is monotone.
    for g in atlas_connected(6):
        ratio_cls = solve(g, RATIO).outcome.classification
        cls = solve(g, CLASS).outcome.classification
        assert ratio_cls is cls


def test_linear_space_matches_memoized():
    for g in atlas_connected(5):
        for rules in (RATIO, CLASS):
            memo = solve(g, rules)
            lin = solve(g, rules, linear_space=True)
            assert memo.outcome.ratio == lin.outcome.ratio
            assert lin.max_stack_depth <= 2 * g.n + 3


def test_pv_replays_to_reported_outcome():
    for g in atlas_connected(5):
        for rules in (RATIO, CLASS, GameRules.free(handicap_moves=1)):
            if g.n < rules.handicap_moves + 2:
                continue
            res = solve(g, rules)
            end = replay(g, rules, res.principal_variation)
            assert is_terminal(end)
            assert outcome_of(end) == res.outcome


def test_determinism():
    g = cycle_graph(6)
    a = solve(g, RATIO)
    b = solve(g, RATIO)
    assert a.principal_variation == b.principal_variation
    assert a.outcome == b.outcome


def test_budget_exhaustion_flagged():
    res = solve(complete_graph(6), RATIO, node_budget=10)
    assert res.budget_exhausted
    assert res.outcome is None
    assert res.nodes_expanded >= 10


def test_optimal_start_report_k3_uniform():
    report = optimal_start_report(complete_graph(3), RATIO)
    assert set(report) == {0, 1, 2}
    assert len({(o.alpha, o.beta) for o in report.values()}) == 1


def test_optimal_start_report_p3():
    report = optimal_start_report(path_graph(3), RATIO)
    assert report[1].classification is Classification.ALICE_WINS
    assert report[0].classification is Classification.BOB_WINS
    assert report[2].classification is Classification.BOB_WINS


def test_optimal_start_report_c4_all_ties():
    report = optimal_start_report(cycle_graph(4), RATIO)
    assert all(o.classification is Classification.TIE for o in report.values())


def test_optimal_start_report_budget_error():
    with pytest.raises(BudgetExhaustedError):
        optimal_start_report(complete_graph(6), RATIO, node_budget=5)


def center_then_lowest(g, rules, state):
    if state.phase == PLACE_ALICE:
        return 1  # center of P_3
    moves = legal_moves(g, rules, state)
    return moves[0]


def test_scripted_alice_on_p3_wins_two_to_one():
    res = solve_vs_policy(path_graph(3), RATIO, center_then_lowest, ALICE)
    assert (res.outcome.alpha, res.outcome.beta) == (2, 1)


def test_policy_illegal_move_raises():
    def bad_policy(g, rules, state):
        return 99

    with pytest.raises(PolicyError, match="illegal move"):
        solve_vs_policy(path_graph(3), RATIO, bad_policy, ALICE)


def lowest_legal(g, rules, state):
    return legal_moves(g, rules, state)[0]


def test_policy_restriction_never_helps_scripted_side():
    # Scripting Bob can only lower (or keep) the ratio he could force.
    for g in atlas_connected(5):
        full = solve(g, RATIO).outcome.ratio
        restricted = solve_vs_policy(g, RATIO, lowest_legal, BOB).outcome.ratio
        assert restricted <= full


def test_policy_on_terminal_only_states_matches_replay():
    g = path_graph(2)
    rules = GameRules.given(0, 1)
    res = solve_vs_policy(g, rules, lowest_legal, BOB)
    end = replay(g, rules, res.principal_variation)
    assert outcome_of(end) == res.outcome


def test_two_paths_small_matches_brute():
    # Two disjoint 5-vertex paths: Bob-favored; exact value pinned by oracle.
    edges = [(i, i + 1) for i in range(4)] + [(5 + i, 6 + i) for i in range(4)]
    g = build_graph(False, 10, edges)
    res = solve(g, RATIO)
    assert res.outcome.classification is Classification.BOB_WINS
    assert res.outcome.ratio == brute_ratio_value(g, RATIO)
