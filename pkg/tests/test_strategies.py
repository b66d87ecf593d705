import random

import pytest

from graphgrab.engine import NORMAL, GameMode, best_response_value, play_out, solve
from graphgrab.families import GeneratorConfig, build_blowup, cycle_base, path_base, random_blowup_cycle, random_split_instance
from graphgrab.graph import ContractError, WeightedGraph, mask_of
from graphgrab.strategies import (
    CompositeStrategy,
    InvariantBreach,
    MaxFirstStrategy,
    MinWeightStrategy,
    SubgameAssignment,
    optimal_strategy,
)


def path(ws):
    return WeightedGraph.from_edges(len(ws), [(i, i + 1) for i in range(len(ws) - 1)], ws)


def test_optimal_opening_moves():
    assert optimal_strategy(path([3, 5])).choose(0b11, ()) == 1
    assert optimal_strategy(path([1, 4, 2, 3])).choose(0b1111, ()) == 3


def test_optimal_guarantee_equals_score():
    g = WeightedGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)], [4, 9, 1, 7, 3])
    for mode in (NORMAL, GameMode.rooted(0b00100)):
        game = solve(g, mode)
        s = optimal_strategy(g, mode)
        assert best_response_value(g, mode, s, "first") == game.score(1)
        assert best_response_value(g, mode, s, "second") == game.score(2)


def test_min_weight_strategy():
    g = path([3, 5])
    t = play_out(g, NORMAL, MinWeightStrategy(g), MinWeightStrategy(g))
    assert t.vertices == [0, 1]


def test_assignment_validation():
    g = path([1, 2, 3, 4])
    a = SubgameAssignment.from_split(g, mask_of([0, 1]))
    assert (a.root_1, a.root_2) == (0b0010, 0b0100)
    assert a.parities() == (1, 0)
    a.validate(g)
    with pytest.raises(ContractError):
        SubgameAssignment(0b0011, 0b0010, 0b1100, 0b0100, role_1=-1, role_2=-1).validate(g)
    with pytest.raises(ContractError):
        SubgameAssignment(0b0011, 0b0011, 0b1100, 0b0100).validate(g)
    matching = WeightedGraph.from_edges(4, [(0, 2), (1, 3)])
    with pytest.raises(ContractError, match="completely joined"):
        SubgameAssignment.from_split(matching, 0b0011).validate(matching)


def test_composite_opening_moves_in_first_subgame():
    g = path([1, 2, 3, 4])
    s = CompositeStrategy(g, SubgameAssignment.from_split(g, mask_of([0, 1])))
    assert s.choose(g.full, ()) == 0
    assert s.turns == 1


def test_composite_game_over():
    g = path([1, 2])
    s = CompositeStrategy(g, SubgameAssignment.from_split(g, 0b01))
    with pytest.raises(ContractError):
        s.choose(0, (0, 1))


def test_composite_guarantee_and_invariants():
    for seed in range(100):
        g, part_1 = random_split_instance(GeneratorConfig(seed=seed, max_n=12, parity="even"))
        a = SubgameAssignment.from_split(g, part_1)
        s = CompositeStrategy(g, a)
        mode = GameMode.rooted(a.root_1)
        got = best_response_value(g, mode, s, "first")
        assert got >= s.subgame_value(0, -2) + s.subgame_value(1, -1)
        opp = optimal_strategy(g, mode)
        t = play_out(g, mode, CompositeStrategy(g, a), opp)
        assert t.totals[0] >= s.subgame_value(0, -2) + s.subgame_value(1, -1)


def test_composite_detects_breach():
    # both roles on the same parity: parity bookkeeping must refuse to continue
    g = path([1, 2, 3, 4])
    a = SubgameAssignment.from_split(g, mask_of([0, 1]))
    s = CompositeStrategy(g, a)
    s.parity = (1, 1)
    with pytest.raises(InvariantBreach):
        s.choose(g.full, ())


def test_max_first_examples():
    pg = build_blowup(cycle_base(4), [1, 1, 1, 1]).with_weights([5, 1, 1, 1])
    s = MaxFirstStrategy(pg)
    assert s.choose(pg.graph.full, ()) == 0
    w = pg.graph.weight()
    assert 2 * best_response_value(pg.graph, NORMAL, MaxFirstStrategy(pg), "first") >= w
    with pytest.raises(ContractError):
        MaxFirstStrategy(build_blowup(path_base(4), [1, 1, 1, 1]))


def test_max_first_guarantee():
    rng = random.Random(0)
    for seed in range(60):
        n = rng.choice(range(4, 13, 2))
        pg = random_blowup_cycle(GeneratorConfig(seed=seed, min_n=n, max_n=n, parity="even", min_k=3, max_k=6))
        s = MaxFirstStrategy(pg)
        got = best_response_value(pg.graph, NORMAL, s, "first")
        assert 2 * got >= pg.graph.weight()
        assert s.structure_checks > 0
