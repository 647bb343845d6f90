"""
Alternating Büchi automata for variable-free formulas (and for parameterized
formulas under a fixed valuation).

The construction is compositional. Every subformula gets its own small
automaton, identified by a hierarchical state id (``q``, ``q.0``,
``q.0.b``, ...). Identical subformulas share one automaton. The initial
transition of a compound formula combines the initial transitions of its
parts, so Boolean connectives need no extra non-initial states.

For ``<r>psi`` the states are those states of the ε-NFA of ``r`` that are
reached by letter edges (plus the initial one). A transition of such a state
guesses an ε-path and either continues into ``psi`` at a final state or
consumes a letter; the tests on the ε-path are checked by the automata of
the tested formulas. Boxes are dual and their states are accepting, so a
box is fulfilled by staying in it forever.
"""
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from pldl import debug
from pldl.api.exceptions import FragmentError
from pldl.automata import boolean
from pldl.automata.boolean import PositiveBool, StateRef, Guard, conj, disj
from pldl.automata.nfa import thompson, cp_product, counter_product, epsilon_paths
from pldl.cache import memoize_method
from pldl.formula import tree
from pldl.formula.tree import Atom, NegAtom, And, Or, Diamond, Box, Var, CP, PVar, PNot, \
    TRUE_PROP, prop_not
from pldl.formula.transform import negate, check_fragment, iter_tests, size, bounds
from pldl.semantics.word import Valuation

ACCEPT = 'acc'
REJECT = 'rej'


class ABA:
    """
    An alternating Büchi automaton. ``templates`` maps every state to its
    transition template, a positive Boolean formula over states and guards.
    """
    def __init__(self, initial: str, templates: Dict[str, PositiveBool],
                 accepting: FrozenSet[str], alphabet: FrozenSet[str]):
        self.initial = initial
        self.templates = templates
        self.accepting = frozenset(accepting)
        self.alphabet = frozenset(alphabet)

    @property
    def states(self) -> List[str]:
        return list(self.templates)

    def __len__(self):
        return len(self.templates)

    def is_accepting(self, state: str) -> bool:
        return state in self.accepting

    @memoize_method
    def delta(self, state: str, letter: FrozenSet[str]) -> PositiveBool:
        return boolean.instantiate(self.templates[state], letter & self.alphabet)

    def successors(self, state: str) -> Set[str]:
        return boolean.states_of(self.templates[state])

    @memoize_method
    def trivial_states(self) -> Tuple[FrozenSet[str], FrozenSet[str]]:
        """
        States whose only transition is a self-loop: the accepting ones accept
        every suffix, the others none.
        """
        universal = set()
        empty = set()
        for state, template in self.templates.items():
            if template == StateRef(state):
                if state in self.accepting:
                    universal.add(state)
                else:
                    empty.add(state)
        return frozenset(universal), frozenset(empty)

    def reachable_states(self) -> List[str]:
        seen = {self.initial}
        order = [self.initial]
        for state in order:
            for target in sorted(self.successors(state)):
                if target not in seen:
                    seen.add(target)
                    order.append(target)
        return order

    def __repr__(self):
        return '<%s: %s states>' % (self.__class__.__name__, len(self))


class _Builder:
    def __init__(self, valuation: Optional[Valuation]):
        self.valuation = valuation
        self.templates: Dict[str, PositiveBool] = {}
        self.accepting: Set[str] = set()
        self.props: Set[str] = set()
        self._built: Dict[tree.Formula, str] = {}

    def _sink(self, state, accepting):
        if state not in self.templates:
            self.templates[state] = StateRef(state)
            if accepting:
                self.accepting.add(state)
        return StateRef(state)

    def _guard(self, formula):
        self.props |= formula.props()
        return Guard(formula)

    def build(self, formula: tree.Formula, path: str) -> str:
        try:
            return self._built[formula]
        except KeyError:
            pass
        if isinstance(formula, (Atom, NegAtom)):
            positive = PVar(formula.prop)
            holds, fails = (positive, PNot(positive))
            if isinstance(formula, NegAtom):
                holds, fails = fails, holds
            self.templates[path] = disj(
                conj(self._guard(holds), self._sink(ACCEPT, True)),
                conj(self._guard(fails), self._sink(REJECT, False)),
            )
        elif isinstance(formula, (And, Or)):
            lhs = self.build(formula.lhs, path + '.0')
            rhs = self.build(formula.rhs, path + '.1')
            combine = conj if isinstance(formula, And) else disj
            self.templates[path] = combine(self.templates[lhs], self.templates[rhs])
        elif isinstance(formula, (Diamond, Box)):
            self._build_modal(formula, path)
        else:
            raise TypeError(formula)
        self._built[formula] = path
        return path

    def _regex_automaton(self, formula):
        nfa = thompson(formula.regex)
        bound = formula.bound
        if bound is None:
            return nfa
        if bound == CP:
            return cp_product(nfa)
        if isinstance(bound, Var):
            if self.valuation is None:
                raise FragmentError('%s needs a valuation for %r' % (formula, bound.name))
            return counter_product(nfa, self.valuation[bound.name])
        raise TypeError(bound)

    def _build_modal(self, formula, path):
        is_box = isinstance(formula, Box)
        nfa = self._regex_automaton(formula)

        # Automata of the tests (negated tests for boxes) and of the body.
        test_templates = {}
        for i, test in enumerate(dict.fromkeys(iter_tests(formula.regex))):
            checked = negate(test) if is_box else test
            test_templates[test] = self.templates[self.build(checked, '%s.t%s' % (path, i))]
        body_template = self.templates[self.build(formula.body, path + '.b')]

        # The states that can be entered: the initial one and letter targets.
        paths = {}
        reached = [nfa.initial]
        for state in reached:
            paths[state] = epsilon_paths(nfa, state)
            for eps in paths[state]:
                if not eps.final:
                    for _, target in nfa.letter_edges(eps.target):
                        if target not in paths and target not in reached:
                            reached.append(target)

        def state_id(state):
            if state == nfa.initial:
                return path
            return '%s.r%s' % (path, nfa.names[state])

        for state in reached:
            alternatives = []
            for eps in paths[state]:
                tests = [test_templates[test] for test in eps.tests]
                edges = [] if eps.final else nfa.letter_edges(eps.target)
                if is_box:
                    if eps.final:
                        end = body_template
                    else:
                        end = conj(*(disj(self._guard(prop_not(guard)), StateRef(state_id(t)))
                                     for guard, t in edges))
                    alternatives.append(disj(end, *tests))
                elif eps.final:
                    alternatives.append(conj(body_template, *tests))
                else:
                    alternatives.extend(conj(self._guard(guard), StateRef(state_id(t)), *tests)
                                        for guard, t in edges)
            combine = conj if is_box else disj
            self.templates[state_id(state)] = combine(*alternatives)
            if is_box:
                self.accepting.add(state_id(state))


def build_aba(formula: tree.Formula, valuation: Optional[Valuation] = None) -> ABA:
    """
    The alternating Büchi automaton of ``formula``. Parameterized operators
    need a ``valuation``; with one they are bounded by a letter counter.

    :raises FragmentError: for parameterized operators without valuation.
    """
    check_fragment(formula)
    builder = _Builder(valuation)
    with debug.increase_indent_cm('build_aba'):
        initial = builder.build(formula, 'q')
    alphabet = frozenset(builder.props - {TRUE_PROP})
    aba = ABA(initial, builder.templates, frozenset(builder.accepting), alphabet)
    if not bounds(formula):
        assert len(aba) <= 4 * size(formula), (len(aba), size(formula))
    debug.size('aba', len(aba))
    return aba


def aba_membership(aba: ABA, word) -> bool:
    """
    Decides whether ``aba`` accepts the lasso ``word``, by removing
    alternation and checking the product with the lasso for an accepting
    cycle.
    """
    from pldl.automata.nba import remove_alternation, membership
    return membership(remove_alternation(aba), word)


def letter_guards(aba: ABA, state: str, letters: Iterable[FrozenSet[str]]) \
        -> List[Tuple[List[FrozenSet[str]], PositiveBool]]:
    """Groups ``letters`` by the instantiated transition of ``state``."""
    groups: Dict[PositiveBool, List[FrozenSet[str]]] = {}
    for letter in letters:
        groups.setdefault(aba.delta(state, letter), []).append(letter)
    return [(group, target) for target, group in groups.items()]
