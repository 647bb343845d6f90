"""
Colored Büchi graphs and the search for pumpable fair paths.

A path through a colored graph is split into blocks at its changepoints, the
positions where the color differs from the previous one. A path is pumpable
if every block visits some vertex twice: the cycle between both visits can
then be repeated to make the block as long as needed.

:func:`pumpable_fair_path` searches an augmented graph whose vertices
``(v, guess, done)`` remember a guessed vertex that is to be repeated in the
current block and whether that already happened. A changepoint may only be
crossed once ``done`` is set. Fair cycles in the augmented graph are exactly
the pumpable fair paths.
"""
from typing import Dict, Hashable, Iterable, List, Optional, Set, Tuple

import networkx as nx

from pldl import debug
from pldl import settings
from pldl.api.exceptions import CapExceeded
from pldl.automata.nba import find_accepting_lasso

Vertex = Hashable
Lasso = Tuple[List[Vertex], List[Vertex]]

_ROOT = ('<root>',)


class ColoredBuchiGraph:
    """
    A directed graph with an initial vertex, a color bit per vertex and a
    set of fair vertices.
    """
    def __init__(self, graph: nx.DiGraph, initial: Vertex,
                 colored: Iterable[Vertex], fair: Iterable[Vertex]):
        self.graph = graph
        self.initial = initial
        self.colored = frozenset(colored)
        self.fair = frozenset(fair)

    @classmethod
    def from_edges(cls, vertices, edges, initial, colored, fair) -> 'ColoredBuchiGraph':
        graph = nx.DiGraph()
        graph.add_nodes_from(vertices)
        graph.add_edges_from(edges)
        return cls(graph, initial, colored, fair)

    @property
    def vertices(self) -> List[Vertex]:
        return list(self.graph)

    def __len__(self):
        return len(self.graph)

    def successors(self, vertex) -> Iterable[Vertex]:
        return self.graph.successors(vertex)

    def color(self, vertex) -> bool:
        return vertex in self.colored

    def is_fair(self, vertex) -> bool:
        return vertex in self.fair

    def is_path(self, vertices: List[Vertex]) -> bool:
        return all(self.graph.has_edge(a, b) for a, b in zip(vertices, vertices[1:]))

    def is_lasso(self, prefix: List[Vertex], loop: List[Vertex]) -> bool:
        path = prefix + loop + loop[:1]
        return bool(loop) and path[0] == self.initial and self.is_path(path)

    def __repr__(self):
        return '<%s: %s vertices>' % (self.__class__.__name__, len(self))


def monochrome_cycle_vertices(g: ColoredBuchiGraph) -> Set[Vertex]:
    """The vertices that can be repeated without crossing a changepoint."""
    result = set()
    for color in (False, True):
        nodes = [v for v in g.graph if g.color(v) == color]
        sub = g.graph.subgraph(nodes)
        for component in nx.strongly_connected_components(sub):
            if len(component) > 1:
                result |= component
            else:
                vertex = next(iter(component))
                if sub.has_edge(vertex, vertex):
                    result.add(vertex)
    return result


def _block_starts(g, vertex, candidates):
    yield (vertex, None, False)
    if vertex in candidates:
        yield (vertex, vertex, False)


def _augmented_successors(g, node, candidates):
    vertex, guess, done = node
    for target in g.successors(vertex):
        if g.color(target) == g.color(vertex):
            if guess is None:
                yield from _block_starts(g, target, candidates)
            else:
                yield (target, guess, done or target == guess)
        elif done:
            yield from _block_starts(g, target, candidates)


def augmented_graph(g: ColoredBuchiGraph) -> nx.DiGraph:
    """
    The complete augmented graph over ``V × (V ∪ {None}) × {False, True}``,
    with all vertices allowed as guesses.
    """
    graph = nx.DiGraph()
    guesses = [None] + list(g.graph)
    candidates = set(g.graph)
    for vertex in g.graph:
        for guess in guesses:
            for done in (False, True):
                graph.add_node((vertex, guess, done))
    for node in list(graph):
        for target in _augmented_successors(g, node, candidates):
            graph.add_edge(node, target)
    assert len(graph) == len(g) * (len(g) + 1) * 2
    return graph


def _explore(g, candidates) -> nx.DiGraph:
    graph = nx.DiGraph()
    cap = settings.max_product_vertices
    graph.add_node(_ROOT)
    todo = []
    for start in _block_starts(g, g.initial, candidates):
        graph.add_edge(_ROOT, start)
        todo.append(start)
    while todo:
        node = todo.pop()
        for target in _augmented_successors(g, node, candidates):
            if target not in graph:
                if len(graph) >= cap:
                    raise CapExceeded('augmented graph', cap)
                todo.append(target)
            graph.add_edge(node, target)
    return graph


def pumpable_fair_path(g: ColoredBuchiGraph) -> Optional[Lasso]:
    """
    Returns a pumpable fair path from the initial vertex as a lasso
    ``(prefix, loop)`` of vertices of ``g``, or None if there is none.
    """
    candidates = monochrome_cycle_vertices(g)
    graph = _explore(g, candidates)
    debug.size('augmented graph', len(graph), 'vertices')
    lasso = find_accepting_lasso(graph, _ROOT, lambda node: node != _ROOT and g.is_fair(node[0]))
    if lasso is None:
        return None
    prefix, cycle = lasso
    return [node[0] for node in prefix[1:]], [node[0] for node in cycle]


def naive_pumpable_fair_path(g: ColoredBuchiGraph) -> bool:
    """
    Decides the existence of a pumpable fair path by tracking all vertices
    seen in the current block. Exponential, only meant for small graphs.
    """
    graph = nx.DiGraph()
    start = (g.initial, frozenset({g.initial}), False)
    graph.add_node(start)
    todo = [start]
    while todo:
        node = todo.pop()
        vertex, seen, repeated = node
        for target in g.successors(vertex):
            if g.color(target) == g.color(vertex):
                following = (target, seen | {target}, repeated or target in seen)
            elif repeated:
                following = (target, frozenset({target}), False)
            else:
                continue
            if following not in graph:
                todo.append(following)
            graph.add_edge(node, following)
    return find_accepting_lasso(graph, start, lambda node: g.is_fair(node[0])) is not None


def _blocks(g, vertices):
    """Splits a finite vertex sequence at its changepoints."""
    blocks: List[List[Vertex]] = []
    for vertex in vertices:
        if blocks and g.color(blocks[-1][-1]) == g.color(vertex):
            blocks[-1].append(vertex)
        else:
            blocks.append([vertex])
    return blocks


def _pump_block(block, k):
    first: Dict[Vertex, int] = {}
    for j, vertex in enumerate(block):
        if vertex in first:
            i = first[vertex]
            return block[:i] + block[i:j] * k + block[j:]
        first[vertex] = j
    raise ValueError('block without a repeated vertex')


def pump(g: ColoredBuchiGraph, prefix: List[Vertex], loop: List[Vertex], k: int) -> Lasso:
    """
    Repeats the cycle inside every block of the pumpable lasso
    ``prefix · loop^ω`` k times. All finite blocks of the result have at
    least k vertices.
    """
    k = max(k, 1)
    changes = [i for i in range(len(loop)) if g.color(loop[i]) != g.color(loop[i - 1])]
    if not changes:
        # One infinite last block, only the finite blocks before it are pumped.
        if not prefix:
            return prefix, loop
        blocks = _blocks(g, prefix)
        if g.color(blocks[-1][-1]) == g.color(loop[0]):
            blocks.pop()
            tail = prefix[sum(len(b) for b in blocks):]
        else:
            tail = []
        pumped = [v for block in blocks for v in _pump_block(block, k)]
        return pumped + tail, loop
    rotation = changes[0]
    prefix = prefix + loop[:rotation]
    loop = loop[rotation:] + loop[:rotation]
    if prefix and g.color(prefix[-1]) == g.color(loop[0]):
        prefix = prefix + loop
    pumped_prefix = [v for block in _blocks(g, prefix) for v in _pump_block(block, k)]
    pumped_loop = [v for block in _blocks(g, loop) for v in _pump_block(block, k)]
    return pumped_prefix, pumped_loop
