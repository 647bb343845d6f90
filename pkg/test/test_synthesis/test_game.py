import pytest

from pldl import settings
from pldl.api.exceptions import CapExceeded, PartitionError
from pldl.selftest import random_game
from pldl.synthesis.determinize import DPA
from pldl.synthesis.game import ParityGame, INPUT, OUTPUT, build_game, solve_parity, \
    brute_force_winner, attractor, play_winner

I = frozenset({'i'})
O = frozenset({'o'})
IO = I | O
NONE = frozenset()


def answering_dpa():
    # Moves to the rejecting state 1 whenever i is not answered with o.
    row = {NONE: 0, I: 1, O: 0, IO: 0}
    return DPA(0, {0: row, 1: dict(row)}, {0: 2, 1: 1}, IO)


def test_build_game():
    game = build_game(answering_dpa(), ['i'], ['o'])
    assert len(game) == 6
    assert game.initial == 0
    assert game.owner(0) == INPUT and game.owner((0, I)) == OUTPUT
    assert game.priority((1, NONE)) == 1
    assert game.successors(0) == [(0, NONE), (0, I)]
    assert game.outputs((0, I), 0) == [O]
    assert game.outputs((0, I), 1) == [NONE]
    assert game.outputs((0, NONE), 0) == [NONE, O]


def test_solve_built_game():
    game = build_game(answering_dpa(), ['i'], ['o'])
    solution = solve_parity(game)
    assert solution.winner(0) == OUTPUT
    assert solution.winner(1) == OUTPUT
    assert solution.strategy(OUTPUT)[(0, I)] == 0


def test_overlapping_propositions():
    with pytest.raises(PartitionError):
        build_game(answering_dpa(), ['i'], ['i', 'o'])


def test_cap(monkeypatch):
    monkeypatch.setattr(settings, 'max_game_vertices', 5)
    with pytest.raises(CapExceeded):
        build_game(answering_dpa(), ['i'], ['o'])


@pytest.mark.parametrize('priority, winner', [(0, OUTPUT), (1, INPUT), (2, OUTPUT), (3, INPUT)])
@pytest.mark.parametrize('owner', [INPUT, OUTPUT])
def test_self_loop(priority, winner, owner):
    game = ParityGame.from_data({'v': owner}, {'v': priority}, [('v', 'v')], initial='v')
    assert solve_parity(game).winner('v') == winner
    assert brute_force_winner(game) == {'v': winner}


def test_choice():
    owners = {'a': OUTPUT, 'good': INPUT, 'bad': INPUT}
    priorities = {'a': 0, 'good': 2, 'bad': 1}
    edges = [('a', 'good'), ('a', 'bad'), ('good', 'good'), ('bad', 'bad')]
    solution = solve_parity(ParityGame.from_data(owners, priorities, edges))
    assert solution.winner('a') == OUTPUT
    assert solution.strategy(OUTPUT) == {'a': 'good'}
    assert solution.winner('bad') == INPUT


def test_attractor():
    owners = {'a': INPUT, 'b': OUTPUT, 'c': OUTPUT, 't': INPUT}
    priorities = dict.fromkeys(owners, 0)
    edges = [('a', 'b'), ('a', 'c'), ('b', 't'), ('c', 'c'), ('t', 't')]
    game = ParityGame.from_data(owners, priorities, edges)
    attracted, strategy = attractor(game, set(owners), {'t'}, OUTPUT)
    assert attracted == {'t', 'b'}
    assert strategy == {'b': 't'}
    attracted, _ = attractor(game, set(owners), {'b'}, INPUT)
    assert attracted == {'a', 'b'}


def test_play_winner():
    game = ParityGame.from_data({1: INPUT, 2: OUTPUT}, {1: 3, 2: 4}, [(1, 2), (2, 1)])
    assert play_winner(game, 1, {1: 2, 2: 1}) == OUTPUT


def test_random_games(rng):
    for _ in range(100):
        game = random_game(rng, 6)
        solution = solve_parity(game)
        for vertex, winner in brute_force_winner(game).items():
            assert solution.winner(vertex) == winner, sorted(game.graph.edges)
        for vertex, target in solution.strategy(OUTPUT).items():
            assert game.graph.has_edge(vertex, target)
            assert solution.winner(target) == OUTPUT
