"""
Parity games between the input player, who picks the input propositions of
the next letter, and the output player, who answers with the outputs. The
output player wins a play iff the highest priority that occurs infinitely
often is even.

>>> game = ParityGame.from_data({'v': OUTPUT}, {'v': 0}, [('v', 'v')], initial='v')
>>> solve_parity(game).winner('v') == OUTPUT
True
"""
from collections import deque
from itertools import product
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Set, Tuple

import networkx as nx

from pldl import debug
from pldl import settings
from pldl.api.exceptions import CapExceeded, PartitionError
from pldl.common import all_letters, sort_key

INPUT = 0
OUTPUT = 1

Vertex = Hashable


class ParityGame:
    """
    The arena is a :class:`networkx.DiGraph` whose nodes carry an ``owner``
    and a ``priority``. Edges leaving output vertices of games built from
    automata carry the ``outputs`` realizing them.
    """
    def __init__(self, graph: nx.DiGraph, initial: Optional[Vertex] = None):
        self.graph = graph
        self.initial = initial

    @classmethod
    def from_data(cls, owners: Dict[Vertex, int], priorities: Dict[Vertex, int],
                  edges: Iterable[Tuple[Vertex, Vertex]], initial=None) -> 'ParityGame':
        graph = nx.DiGraph()
        for vertex, owner in owners.items():
            graph.add_node(vertex, owner=owner, priority=priorities[vertex])
        graph.add_edges_from(edges)
        return cls(graph, initial)

    @property
    def vertices(self) -> List[Vertex]:
        return sorted(self.graph, key=sort_key)

    def __len__(self):
        return len(self.graph)

    def owner(self, vertex) -> int:
        return self.graph.nodes[vertex]['owner']

    def priority(self, vertex) -> int:
        return self.graph.nodes[vertex]['priority']

    def successors(self, vertex) -> List[Vertex]:
        return sorted(self.graph.successors(vertex), key=sort_key)

    def predecessors(self, vertex) -> Iterable[Vertex]:
        return self.graph.predecessors(vertex)

    def outputs(self, source, target) -> List[FrozenSet[str]]:
        return self.graph.edges[source, target].get('outputs', [])

    def __repr__(self):
        return '<%s: %s vertices>' % (self.__class__.__name__, len(self))


def build_game(dpa, inputs: Iterable[str], outputs: Iterable[str]) -> ParityGame:
    """
    The arena ``Q ∪ (Q × 2^inputs)`` of the automaton ``dpa``: at ``q`` the
    input player picks ``i``, at ``(q, i)`` the output player picks ``o`` and
    the play moves on to ``δ(q, i ∪ o)``.

    :raises PartitionError: if ``inputs`` and ``outputs`` overlap.
    """
    inputs = frozenset(inputs)
    outputs = frozenset(outputs)
    if inputs & outputs:
        raise PartitionError('%s are inputs and outputs at the same time'
                             % ', '.join(sorted(inputs & outputs)))
    input_letters = all_letters(inputs)
    output_letters = all_letters(outputs)
    size = len(dpa) * (1 + len(input_letters))
    if size > settings.max_game_vertices:
        raise CapExceeded('parity game', settings.max_game_vertices)
    graph = nx.DiGraph()
    for q in dpa.states:
        priority = dpa.priority(q)
        graph.add_node(q, owner=INPUT, priority=priority)
        for i in input_letters:
            graph.add_node((q, i), owner=OUTPUT, priority=priority)
            graph.add_edge(q, (q, i))
    for q in dpa.states:
        for i in input_letters:
            for o in output_letters:
                target = dpa.step(q, i | o)
                if graph.has_edge((q, i), target):
                    graph.edges[(q, i), target]['outputs'].append(o)
                else:
                    graph.add_edge((q, i), target, outputs=[o])
    debug.size('game', len(graph), 'vertices')
    return ParityGame(graph, dpa.initial)


def attractor(game: ParityGame, vertices: Set[Vertex], target: Set[Vertex], player: int) \
        -> Tuple[Set[Vertex], Dict[Vertex, Vertex]]:
    """
    The vertices of the subgame ``vertices`` from which ``player`` can force
    a visit to ``target``, with the attracting moves of ``player``.
    """
    result = set(target)
    strategy = {}
    remaining = {}
    for v in vertices:
        if v not in result and game.owner(v) != player:
            remaining[v] = sum(1 for u in game.graph.successors(v) if u in vertices)
    queue = deque(sorted(target, key=sort_key))
    while queue:
        v = queue.popleft()
        for u in sorted(game.predecessors(v), key=sort_key):
            if u not in vertices or u in result:
                continue
            if game.owner(u) == player:
                strategy[u] = v
            else:
                remaining[u] -= 1
                if remaining[u]:
                    continue
            result.add(u)
            queue.append(u)
    return result, strategy


def _solve(game, vertices):
    regions: List[Set[Vertex]] = [set(), set()]
    strategies: List[Dict[Vertex, Vertex]] = [{}, {}]
    while vertices:
        top = max(game.priority(v) for v in vertices)
        player = OUTPUT if top % 2 == 0 else INPUT
        opponent = 1 - player
        heads = {v for v in vertices if game.priority(v) == top}
        attracted, attracting = attractor(game, vertices, heads, player)
        sub_regions, sub_strategies = _solve(game, vertices - attracted)
        if not sub_regions[opponent]:
            regions[player] |= vertices
            strategies[player].update(sub_strategies[player])
            strategies[player].update(attracting)
            for v in sorted(heads, key=sort_key):
                if game.owner(v) == player and v not in strategies[player]:
                    strategies[player][v] = next(
                        u for u in game.successors(v) if u in vertices)
            break
        escaped, escaping = attractor(game, vertices, sub_regions[opponent], opponent)
        regions[opponent] |= escaped
        strategies[opponent].update(sub_strategies[opponent])
        strategies[opponent].update(escaping)
        vertices = vertices - escaped
    return regions, strategies


class Solution:
    def __init__(self, regions, strategies):
        self.regions = regions
        self.strategies = strategies

    def winner(self, vertex) -> int:
        return OUTPUT if vertex in self.regions[OUTPUT] else INPUT

    def strategy(self, player: int = OUTPUT) -> Dict[Vertex, Vertex]:
        return self.strategies[player]


def solve_parity(game: ParityGame) -> Solution:
    """Zielonka's algorithm, with positional strategies for both players."""
    regions, strategies = _solve(game, set(game.graph))
    for player in (INPUT, OUTPUT):
        strategies[player] = {v: u for v, u in strategies[player].items()
                              if v in regions[player] and game.owner(v) == player}
    return Solution(regions, strategies)


def play_winner(game: ParityGame, start, choice: Dict[Vertex, Vertex]) -> int:
    """The winner of the play from ``start`` where every vertex moves to ``choice``."""
    seen = {}
    order = []
    vertex = start
    while vertex not in seen:
        seen[vertex] = len(order)
        order.append(vertex)
        vertex = choice[vertex]
    top = max(game.priority(v) for v in order[seen[vertex]:])
    return OUTPUT if top % 2 == 0 else INPUT


def _positional_strategies(game, player):
    owned = [v for v in game.vertices if game.owner(v) == player]
    for moves in product(*(game.successors(v) for v in owned)):
        yield dict(zip(owned, moves))


def brute_force_winner(game: ParityGame) -> Dict[Vertex, int]:
    """
    Winners by trying all pairs of positional strategies. Exponential, for
    small games only.
    """
    result = {}
    output_strategies = list(_positional_strategies(game, OUTPUT))
    input_strategies = list(_positional_strategies(game, INPUT))
    for vertex in game.vertices:
        result[vertex] = INPUT
        for sigma in output_strategies:
            if all(play_winner(game, vertex, {**sigma, **tau}) == OUTPUT
                   for tau in input_strategies):
                result[vertex] = OUTPUT
                break
    return result
