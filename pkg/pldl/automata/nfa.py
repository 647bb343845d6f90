"""
Marked ε-NFAs for regular expressions with tests.

:func:`thompson` builds the automaton of a regular expression: letter edges
carry propositional guards, tests become states marked with the tested
formula followed by an ε-edge. Bounded operators are handled by a product
with a small DFA that observes the consumed infix, see :func:`cp_product`
and :func:`counter_product`.

>>> from pldl.formula.parser import parse_regex
>>> nfa = thompson(parse_regex('p?;q'))
>>> len(nfa.states), nfa.accepts([frozenset({'q'})])
(6, True)
"""
from typing import Dict, FrozenSet, Hashable, List, NamedTuple, Optional, Sequence, Tuple

from pldl.formula import tree
from pldl.formula.tree import COLOR_PROP, PVar, PNot, TT, Prop, Test, Choice, Seq, Star, \
    PropFormula, prop_and

State = Hashable


class MarkedEpsilonNFA:
    """
    :param edges: letter edges ``state -> [(guard, target)]``
    :param epsilon: ε-edges ``state -> [target]``
    :param marking: tests ``state -> formula``
    :param names: printable state names, used for the states of the
        alternating automaton
    """
    def __init__(self, states: Sequence[State], initial: State, finals: FrozenSet[State],
                 edges: Dict[State, List[Tuple[PropFormula, State]]],
                 epsilon: Dict[State, List[State]],
                 marking: Dict[State, tree.Formula],
                 names: Optional[Dict[State, str]] = None):
        self.states = list(states)
        self.initial = initial
        self.finals = frozenset(finals)
        self.edges = edges
        self.epsilon = epsilon
        self.marking = marking
        self.names = names if names is not None else {s: str(s) for s in self.states}

    def letter_edges(self, state) -> List[Tuple[PropFormula, State]]:
        return self.edges.get(state, [])

    def epsilon_edges(self, state) -> List[State]:
        return self.epsilon.get(state, [])

    def epsilon_closure(self, states):
        result = set(states)
        todo = list(states)
        while todo:
            for target in self.epsilon_edges(todo.pop()):
                if target not in result:
                    result.add(target)
                    todo.append(target)
        return result

    def accepts(self, letters: Sequence[FrozenSet[str]]) -> bool:
        """
        Acceptance of a finite word with all tests ignored, i.e. treated as
        ``tt``.
        """
        current = self.epsilon_closure({self.initial})
        for letter in letters:
            current = self.epsilon_closure({
                target
                for state in current
                for guard, target in self.letter_edges(state)
                if guard.evaluate(letter)
            })
            if not current:
                return False
        return bool(current & self.finals)

    def run_endpoints(self, word, start: int, holds, horizon: int) -> FrozenSet[int]:
        """
        The offsets ``j <= horizon`` such that the automaton has a run on
        ``word[start:start + j]`` from the initial to a final state. Entering
        a marked state at position ``i`` requires ``holds(formula, i)``.
        """
        def allowed(state, position):
            formula = self.marking.get(state)
            return formula is None or holds(formula, position)

        if not allowed(self.initial, start):
            return frozenset()
        seen = {(self.initial, 0)}
        todo = [(self.initial, 0)]
        result = set()
        while todo:
            state, offset = todo.pop()
            if state in self.finals:
                result.add(offset)
            position = start + offset
            successors = [(t, offset) for t in self.epsilon_edges(state)]
            if offset < horizon:
                letter = word.letter(position)
                successors += [(t, offset + 1) for guard, t in self.letter_edges(state)
                               if guard.evaluate(letter)]
            for target, target_offset in successors:
                if (target, target_offset) not in seen \
                        and allowed(target, start + target_offset):
                    seen.add((target, target_offset))
                    todo.append((target, target_offset))
        return frozenset(result)

    def __repr__(self):
        return '<%s: %s states>' % (self.__class__.__name__, len(self.states))


class _ThompsonBuilder:
    def __init__(self):
        self.count = 0
        self.edges: Dict[int, List[Tuple[PropFormula, int]]] = {}
        self.epsilon: Dict[int, List[int]] = {}
        self.marking: Dict[int, tree.Formula] = {}

    def new_state(self):
        self.count += 1
        return self.count - 1

    def add_epsilon(self, source, target):
        self.epsilon.setdefault(source, []).append(target)

    def build(self, regex):
        if isinstance(regex, Prop):
            start, final = self.new_state(), self.new_state()
            self.edges.setdefault(start, []).append((regex.formula, final))
            return start, final
        if isinstance(regex, Test):
            start, final = self.new_state(), self.new_state()
            self.marking[start] = regex.body
            self.add_epsilon(start, final)
            return start, final
        if isinstance(regex, Choice):
            start = self.new_state()
            lhs_start, lhs_final = self.build(regex.lhs)
            rhs_start, rhs_final = self.build(regex.rhs)
            final = self.new_state()
            self.add_epsilon(start, lhs_start)
            self.add_epsilon(start, rhs_start)
            self.add_epsilon(lhs_final, final)
            self.add_epsilon(rhs_final, final)
            return start, final
        if isinstance(regex, Seq):
            start = self.new_state()
            lhs_start, lhs_final = self.build(regex.lhs)
            rhs_start, rhs_final = self.build(regex.rhs)
            final = self.new_state()
            self.add_epsilon(start, lhs_start)
            self.add_epsilon(lhs_final, rhs_start)
            self.add_epsilon(rhs_final, final)
            return start, final
        if isinstance(regex, Star):
            start = self.new_state()
            inner_start, inner_final = self.build(regex.body)
            final = self.new_state()
            self.add_epsilon(start, inner_start)
            self.add_epsilon(start, final)
            self.add_epsilon(inner_final, inner_start)
            self.add_epsilon(inner_final, final)
            return start, final
        raise TypeError(regex)


def thompson(regex: tree.Regex) -> MarkedEpsilonNFA:
    """
    The marked ε-NFA of ``regex``. It has at most twice as many states as
    ``regex`` is long and its final state has no outgoing edges.
    """
    builder = _ThompsonBuilder()
    start, final = builder.build(regex)
    assert final not in builder.edges and final not in builder.epsilon
    return MarkedEpsilonNFA(
        range(builder.count), start, frozenset({final}),
        builder.edges, builder.epsilon, builder.marking,
    )


class ChangepointDFA:
    """
    Reads the consumed infix of a changepoint-bounded operator. It accepts
    iff the color changes at most once inside the infix, the six states
    being: nothing read yet, only colored, only uncolored, colored then
    uncolored, uncolored then colored and the rejecting sink.
    """
    initial = 'fresh'
    sink = 'sink'

    _COLORED = PVar(COLOR_PROP)
    _UNCOLORED = PNot(PVar(COLOR_PROP))
    _TRANSITIONS = {
        'fresh': ((_COLORED, 'on'), (_UNCOLORED, 'off')),
        'on': ((_COLORED, 'on'), (_UNCOLORED, 'on_off')),
        'off': ((_UNCOLORED, 'off'), (_COLORED, 'off_on')),
        'on_off': ((_UNCOLORED, 'on_off'), (_COLORED, 'sink')),
        'off_on': ((_COLORED, 'off_on'), (_UNCOLORED, 'sink')),
        'sink': ((TT, 'sink'),),
    }
    states = tuple(_TRANSITIONS)

    def successors(self, state):
        return self._TRANSITIONS[state]

    def is_accepting(self, state):
        return state != self.sink

    def run(self, letters):
        state = self.initial
        for letter in letters:
            state = next(t for guard, t in self.successors(state) if guard.evaluate(letter))
        return state


class LetterCounterDFA:
    """Accepts every infix of at most ``bound`` letters."""
    initial = 0

    def __init__(self, bound: int):
        self.bound = bound
        self.sink = bound + 1
        self.states = tuple(range(bound + 2))

    def successors(self, state):
        return ((TT, min(state + 1, self.sink)),)

    def is_accepting(self, state):
        return state != self.sink


def bounded_product(nfa: MarkedEpsilonNFA, dfa) -> MarkedEpsilonNFA:
    """
    The product of ``nfa`` with a DFA over the consumed letters. Edges into
    the rejecting sink of the DFA are dropped, so only bounded matches
    remain.
    """
    initial = (nfa.initial, dfa.initial)
    states = [initial]
    seen = {initial}
    edges: Dict[State, List[Tuple[PropFormula, State]]] = {}
    epsilon: Dict[State, List[State]] = {}
    todo = [initial]

    def visit(state):
        if state not in seen:
            seen.add(state)
            states.append(state)
            todo.append(state)

    while todo:
        state = todo.pop()
        q, d = state
        for target in nfa.epsilon_edges(q):
            epsilon.setdefault(state, []).append((target, d))
            visit((target, d))
        for guard, target in nfa.letter_edges(q):
            for dfa_guard, d_target in dfa.successors(d):
                if not dfa.is_accepting(d_target):
                    continue
                combined = prop_and(guard, dfa_guard)
                edges.setdefault(state, []).append((combined, (target, d_target)))
                visit((target, d_target))
    finals = frozenset(s for s in states if s[0] in nfa.finals and dfa.is_accepting(s[1]))
    marking = {s: nfa.marking[s[0]] for s in states if s[0] in nfa.marking}
    names = {s: '%s_%s' % (nfa.names[s[0]], s[1]) for s in states}
    return MarkedEpsilonNFA(states, initial, finals, edges, epsilon, marking, names)


def cp_product(nfa: MarkedEpsilonNFA) -> MarkedEpsilonNFA:
    """Restricts ``nfa`` to infixes with at most one internal color change."""
    return bounded_product(nfa, ChangepointDFA())


def counter_product(nfa: MarkedEpsilonNFA, bound: int) -> MarkedEpsilonNFA:
    """Restricts ``nfa`` to infixes of at most ``bound`` letters."""
    return bounded_product(nfa, LetterCounterDFA(bound))


class EpsilonPath(NamedTuple):
    target: State
    tests: FrozenSet[tree.Formula]
    final: bool


def epsilon_paths(nfa: MarkedEpsilonNFA, state: State) -> List[EpsilonPath]:
    """
    All simple ε-paths starting in ``state``, summarized by their last state
    and the set of tests on the way (including the tests of both ends). For
    a given last state only the subset-minimal test sets are kept.
    """
    found: Dict[State, List[FrozenSet[tree.Formula]]] = {}

    def record(target, tests):
        known = found.setdefault(target, [])
        if any(other <= tests for other in known):
            return
        known[:] = [other for other in known if not tests <= other]
        known.append(tests)

    def walk(current, visited, tests):
        formula = nfa.marking.get(current)
        if formula is not None:
            tests = tests | {formula}
        record(current, tests)
        for target in nfa.epsilon_edges(current):
            if target not in visited:
                walk(target, visited | {target}, tests)

    walk(state, frozenset({state}), frozenset())
    order = {s: i for i, s in enumerate(nfa.states)}
    result = []
    for target in sorted(found, key=order.__getitem__):
        for tests in sorted(found[target], key=lambda t: sorted(str(f) for f in t)):
            result.append(EpsilonPath(target, tests, target in nfa.finals))
    return result
