"""
Nondeterministic Büchi automata, alternation removal and the two decision
procedures everything else is built on: emptiness (with a lasso witness) and
membership of a lasso word.

Alternation is removed with the breakpoint construction. A state ``(S, O)``
holds the set ``S`` of alternating states the run tree is currently in and
the obligations ``O ⊆ S`` of branches that still have to visit an accepting
state. Whenever all obligations are met (``O`` is empty) the state is
accepting and a new round of obligations starts.
"""
from itertools import product
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, NamedTuple, \
    Optional, Tuple

import networkx as nx

from pldl import debug
from pldl import settings
from pldl.api.exceptions import CapExceeded
from pldl.automata import boolean
from pldl.cache import memoize_method
from pldl.common import all_letters, sort_key
from pldl.semantics.word import LassoWord

Letter = FrozenSet[str]


class NBA:
    """
    A nondeterministic Büchi automaton given by explicit transitions
    ``state -> [(letter, targets)]``. Letters are restricted to
    :attr:`alphabet` before lookup.
    """
    def __init__(self, initial: Hashable, accepting: Iterable[Hashable],
                 alphabet: Iterable[str],
                 transitions: Optional[Dict[Hashable, Dict[Letter, FrozenSet]]] = None):
        self.initial = initial
        self._accepting = frozenset(accepting)
        self.alphabet = frozenset(alphabet)
        self._transitions = transitions or {}

    @classmethod
    def from_transitions(cls, initial, accepting, alphabet, edges) -> 'NBA':
        """
        Builds an automaton from ``(source, guard, target)`` triples. Guards
        are propositional formulas and expanded over the alphabet.
        """
        alphabet = frozenset(alphabet)
        transitions: Dict[Hashable, Dict[Letter, set]] = {}
        for source, guard, target in edges:
            transitions.setdefault(source, {})
            transitions.setdefault(target, {})
            for letter in all_letters(alphabet):
                if guard.evaluate(letter):
                    transitions[source].setdefault(letter, set()).add(target)
        frozen = {
            state: {letter: frozenset(targets) for letter, targets in by_letter.items()}
            for state, by_letter in transitions.items()
        }
        return cls(initial, accepting, alphabet, frozen)

    def is_accepting(self, state) -> bool:
        return state in self._accepting

    def successors(self, state, letter: Letter) -> FrozenSet:
        return self._transitions.get(state, {}).get(letter & self.alphabet, frozenset())

    def letters(self) -> List[Letter]:
        return all_letters(self.alphabet)

    @memoize_method
    def graph(self) -> nx.DiGraph:
        """
        The reachable part as a graph. Every edge carries one ``letter``
        that realizes it.
        """
        graph = nx.DiGraph()
        graph.add_node(self.initial)
        todo = [self.initial]
        cap = settings.max_nba_states
        while todo:
            state = todo.pop()
            for letter in self.letters():
                for target in sorted(self.successors(state, letter), key=sort_key):
                    if target not in graph:
                        if len(graph) >= cap:
                            raise CapExceeded('nondeterministic Büchi automaton', cap)
                        graph.add_node(target)
                        todo.append(target)
                    if not graph.has_edge(state, target):
                        graph.add_edge(state, target, letter=letter)
        return graph

    def states(self) -> List[Hashable]:
        return sorted(self.graph(), key=sort_key)

    def __len__(self):
        return len(self.graph())

    @memoize_method
    def productive_states(self) -> FrozenSet:
        """The reachable states from which some word is accepted."""
        graph = self.graph()
        good = set()
        for component in nx.strongly_connected_components(graph):
            if _is_accepting_cycle(graph, component, self.is_accepting):
                good |= component
        result = set(good)
        for state in good:
            result |= nx.ancestors(graph, state)
        return frozenset(result)

    def trim(self) -> 'NBA':
        """The explicit automaton restricted to productive states."""
        productive = self.productive_states()
        transitions = {}
        for state in productive:
            by_letter = {}
            for letter in self.letters():
                targets = self.successors(state, letter) & productive
                if targets:
                    by_letter[letter] = targets
            transitions[state] = by_letter
        accepting = [s for s in productive if self.is_accepting(s)]
        return NBA(self.initial, accepting, self.alphabet, transitions)

    def __repr__(self):
        return '<%s: initial=%r>' % (self.__class__.__name__, self.initial)


class MHState(NamedTuple):
    states: FrozenSet[str]
    obligations: FrozenSet[str]

    def __str__(self):
        return '(%s | %s)' % (','.join(sorted(self.states)), ','.join(sorted(self.obligations)))


class BreakpointNBA(NBA):
    """
    The nondeterministic automaton of an alternating one, explored lazily
    from the initial state.
    """
    def __init__(self, aba):
        self.aba = aba
        universal, empty = aba.trivial_states()
        self._universal = universal
        self._empty = empty
        initial = frozenset({aba.initial})
        super().__init__(
            MHState(initial, initial - aba.accepting),
            (),
            aba.alphabet,
        )

    def is_accepting(self, state: MHState) -> bool:
        return not state.obligations

    @memoize_method
    def _models(self, state: str, letter: Letter) -> List[FrozenSet[str]]:
        formula = boolean.substitute(self.aba.delta(state, letter),
                                     self._universal, self._empty)
        return boolean.minimal_models(formula)

    @memoize_method
    def successors(self, state: MHState, letter: Letter) -> FrozenSet[MHState]:
        letter = letter & self.alphabet
        accepting = self.aba.accepting
        current = sorted(state.states)
        choices = [self._models(q, letter) for q in current]
        if any(not models for models in choices):
            return frozenset()
        result = set()
        for combination in product(*choices):
            s_next = frozenset().union(*combination)
            if state.obligations:
                # Obligations are passed on along the branches of O only.
                o_next = frozenset().union(*(
                    model for q, model in zip(current, combination) if q in state.obligations
                ))
            else:
                o_next = s_next
            result.add(MHState(s_next, o_next - accepting))
        return frozenset(result)


def remove_alternation(aba) -> BreakpointNBA:
    nba = BreakpointNBA(aba)
    if debug.enable_notice:
        debug.size('nba', len(nba))
    return nba


def _is_accepting_cycle(graph, component, is_accepting) -> bool:
    if len(component) == 1:
        node = next(iter(component))
        if not graph.has_edge(node, node):
            return False
    return any(is_accepting(node) for node in component)


def find_accepting_lasso(graph: nx.DiGraph, initial, is_accepting: Callable) \
        -> Optional[Tuple[List, List]]:
    """
    Searches ``graph`` for a path from ``initial`` to a cycle through an
    accepting node. Returns the node sequences ``(prefix, cycle)`` where the
    cycle starts with the accepting node and the prefix leads to it, or None.
    """
    reachable = nx.descendants(graph, initial) | {initial}
    subgraph = graph.subgraph(reachable)
    components = sorted(
        (c for c in nx.strongly_connected_components(subgraph)
         if _is_accepting_cycle(subgraph, c, is_accepting)),
        key=lambda c: min(sort_key(node) for node in c),
    )
    if not components:
        return None
    component = components[0]
    target = min((node for node in component if is_accepting(node)), key=sort_key)
    prefix = nx.shortest_path(subgraph, initial, target)[:-1]
    inner = subgraph.subgraph(component)
    if inner.has_edge(target, target):
        cycle = [target]
    else:
        best = None
        for successor in sorted(inner.successors(target), key=sort_key):
            path = nx.shortest_path(inner, successor, target)
            if best is None or len(path) < len(best):
                best = path
        cycle = [target] + best[:-1]
    return prefix, cycle


def _edge_letters(graph, nodes):
    return [graph.edges[a, b]['letter'] for a, b in zip(nodes, nodes[1:])]


def is_empty(nba: NBA) -> Optional[LassoWord]:
    """
    Returns None if ``nba`` accepts no word, otherwise an accepted lasso
    word.
    """
    graph = nba.graph()
    lasso = find_accepting_lasso(graph, nba.initial, nba.is_accepting)
    if lasso is None:
        return None
    prefix, cycle = lasso
    prefix_letters = _edge_letters(graph, prefix + cycle[:1])
    loop_letters = _edge_letters(graph, cycle + cycle[:1])
    return LassoWord(prefix_letters, loop_letters)


def membership(nba: NBA, word: LassoWord) -> bool:
    """Decides whether ``nba`` accepts ``word``."""
    graph = nx.DiGraph()
    start = (nba.initial, 0)
    graph.add_node(start)
    todo = [start]
    cap = settings.max_product_vertices
    while todo:
        node = todo.pop()
        state, position = node
        following = word.successor(position)
        for target in nba.successors(state, word.letter(position)):
            target_node = (target, following)
            if target_node not in graph:
                if len(graph) >= cap:
                    raise CapExceeded('lasso product', cap)
                todo.append(target_node)
            graph.add_edge(node, target_node)
    return find_accepting_lasso(graph, start, lambda n: nba.is_accepting(n[0])) is not None
