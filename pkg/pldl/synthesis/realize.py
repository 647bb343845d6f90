"""
Realizability of PLDL specifications and extraction of finite-state
strategies.

Parameterized boxes are set to 0 and the formula is turned into its colored
variant, where the output player additionally controls the color
proposition. A winning strategy of the colored game can not keep a color
forever, so every block of one of its outcomes is at most one longer than the
strategy has states. Doubling that gives a valuation for the diamond
variables that works for the uncolored strategy.
"""
from collections import deque
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional

from pldl import debug
from pldl.api.exceptions import PartitionError, NotWellFormed
from pldl.automata.aba import build_aba
from pldl.automata.nba import remove_alternation
from pldl.common import all_letters, format_set, sort_key
from pldl.formula import tree
from pldl.formula.transform import check_well_formed, color_transform, eliminate_boxes, \
    propositions, var_sets
from pldl.semantics.word import LassoWord, Valuation
from pldl.synthesis.determinize import determinize
from pldl.synthesis.game import OUTPUT, ParityGame, build_game, solve_parity

Letter = FrozenSet[str]

_INITIAL = '<init>'


class Transducer:
    """
    A Moore machine: after reading the inputs ``i_0 .. i_n`` it is in the
    state ``δ*(i_0 .. i_n)`` and emits its :meth:`output`. States are
    numbered, the initial state is 0 and emits nothing.
    """
    def __init__(self, transitions: Dict[int, Dict[Letter, int]],
                 outputs: Dict[int, Letter], inputs: Iterable[str],
                 output_props: Iterable[str], initial: int = 0):
        self.transitions = transitions
        self.outputs = outputs
        self.inputs = frozenset(inputs)
        self.output_props = frozenset(output_props)
        self.initial = initial

    @property
    def states(self) -> List[int]:
        return sorted(self.transitions)

    def __len__(self):
        return len(self.transitions)

    def input_letters(self) -> List[Letter]:
        return all_letters(self.inputs)

    def step(self, state: int, letter: Letter) -> int:
        return self.transitions[state][letter & self.inputs]

    def output(self, state: int) -> Letter:
        return self.outputs[state]

    def run(self, letters: Iterable[Letter]) -> int:
        state = self.initial
        for letter in letters:
            state = self.step(state, letter)
        return state

    def respond(self, letters: Iterable[Letter]) -> List[Letter]:
        """The letters ``i_n ∪ τ(δ*(i_0 .. i_n))`` for a finite input sequence."""
        state = self.initial
        result = []
        for letter in letters:
            state = self.step(state, letter)
            result.append((letter & self.inputs) | self.output(state))
        return result

    def outcome(self, word: LassoWord) -> LassoWord:
        """The outcome of the input sequence ``word`` as a lasso word."""
        state = self.initial
        position = 0
        seen: Dict[tuple, int] = {}
        letters = []
        while True:
            inputs = word.letter(position) & self.inputs
            state = self.step(state, inputs)
            key = (position, state)
            if key in seen:
                break
            seen[key] = len(letters)
            letters.append(inputs | self.output(state))
            position = word.successor(position)
        start = seen[key]
        return LassoWord(letters[:start], letters[start:])

    def strip_color(self) -> 'Transducer':
        return Transducer(
            self.transitions,
            {s: o - {tree.COLOR_PROP} for s, o in self.outputs.items()},
            self.inputs,
            self.output_props - {tree.COLOR_PROP},
            self.initial,
        )

    def __repr__(self):
        return '<%s: %s states, in=%s, out=%s>' % (
            self.__class__.__name__, len(self),
            format_set(self.inputs), format_set(self.output_props))


def extract_transducer(game: ParityGame, strategy: Dict[Hashable, Hashable],
                       inputs: Iterable[str], outputs: Iterable[str]) -> Transducer:
    """
    The transducer whose states are the output vertices ``(q, i)`` reached
    by following ``strategy`` from the initial vertex, plus an initial state.
    """
    inputs = frozenset(inputs)
    input_letters = all_letters(inputs)
    numbers = {_INITIAL: 0}
    todo = deque([_INITIAL])
    transitions: Dict[int, Dict[Letter, int]] = {}
    emitted: Dict[int, Letter] = {0: frozenset()}
    while todo:
        vertex = todo.popleft()
        number = numbers[vertex]
        if vertex == _INITIAL:
            target = game.initial
        else:
            target = strategy[vertex]
            emitted[number] = min(game.outputs(vertex, target), key=sort_key)
        row = transitions[number] = {}
        for letter in input_letters:
            following = (target, letter)
            if following not in numbers:
                numbers[following] = len(numbers)
                todo.append(following)
            row[letter] = numbers[following]
    transducer = Transducer(transitions, emitted, inputs, outputs)
    debug.size('transducer', len(transducer))
    return transducer


def spaced_strategy(transducer: Transducer, k: int) -> Transducer:
    """
    Adds the color proposition to the outputs such that every outcome is
    colored in blocks of length exactly ``k``, starting uncolored.
    """
    assert k >= 1
    period = 2 * k
    numbers = {(transducer.initial, 0): 0}
    todo = deque(numbers)
    transitions: Dict[int, Dict[Letter, int]] = {}
    outputs: Dict[int, Letter] = {}
    while todo:
        current = todo.popleft()
        state, count = current
        number = numbers[current]
        output = transducer.output(state) - {tree.COLOR_PROP}
        if number and (count - 1) % period >= k:
            output |= {tree.COLOR_PROP}
        outputs[number] = output
        row = transitions[number] = {}
        for letter in transducer.input_letters():
            following = (transducer.step(state, letter), (count + 1) % period)
            if following not in numbers:
                numbers[following] = len(numbers)
                todo.append(following)
            row[letter] = numbers[following]
    return Transducer(transitions, outputs, transducer.inputs,
                      transducer.output_props | {tree.COLOR_PROP})


class Realizable:
    """
    :attr:`strategy` realizes the formula with respect to :attr:`valuation`.
    :attr:`colored_strategy` is the strategy for the colored formula it was
    derived from, if any.
    """
    holds = True

    def __init__(self, strategy: Transducer, valuation: Valuation,
                 colored_strategy: Optional[Transducer] = None):
        self.strategy = strategy
        self.valuation = valuation
        self.colored_strategy = colored_strategy

    def __repr__(self):
        return '<%s: %s states, %s>' % (self.__class__.__name__, len(self.strategy),
                                        self.valuation)


class Unrealizable:
    holds = False

    def __repr__(self):
        return '<%s>' % self.__class__.__name__


def check_partition(formula: tree.Formula, inputs: Iterable[str], outputs: Iterable[str]):
    """
    :raises PartitionError: if the sets overlap or miss a proposition of
        ``formula``.
    """
    inputs = frozenset(inputs)
    outputs = frozenset(outputs)
    if inputs & outputs:
        raise PartitionError('%s are inputs and outputs at the same time'
                             % ', '.join(sorted(inputs & outputs)))
    reserved = (inputs | outputs) & tree.RESERVED
    if reserved:
        raise PartitionError('%s is reserved' % ', '.join(sorted(reserved)))
    missing = propositions(formula) - inputs - outputs
    if missing:
        raise PartitionError('%s neither input nor output' % ', '.join(sorted(missing)))
    return inputs, outputs


def _synthesize(formula, inputs, outputs, valuation=None) -> Optional[Transducer]:
    with debug.increase_indent_cm('synthesize'):
        nba = remove_alternation(build_aba(formula, valuation))
        dpa = determinize(nba.trim())
        debug.speed('determinized')
        game = build_game(dpa, inputs, outputs)
        solution = solve_parity(game)
        debug.speed('game solved')
    if solution.winner(game.initial) != OUTPUT:
        return None
    return extract_transducer(game, solution.strategy(OUTPUT), inputs, outputs)


def _require_well_formed(formula):
    if not check_well_formed(formula):
        diamonds, boxes = var_sets(formula)
        raise NotWellFormed('variables %s bound both diamonds and boxes'
                            % ', '.join(sorted(diamonds & boxes)))


def realize(formula: tree.Formula, inputs: Iterable[str], outputs: Iterable[str]):
    """
    Decides whether the output player can satisfy ``formula`` with respect
    to some valuation against every choice of inputs.

    :raises NotWellFormed: if a variable bounds diamonds and boxes.
    :raises PartitionError: if inputs and outputs do not partition the
        propositions of ``formula``.
    :returns: :class:`Realizable` or :class:`Unrealizable`
    """
    _require_well_formed(formula)
    inputs, outputs = check_partition(formula, inputs, outputs)
    debug.reset_time()
    colored = color_transform(eliminate_boxes(formula))
    transducer = _synthesize(colored, inputs, outputs | {tree.COLOR_PROP})
    if transducer is None:
        return Unrealizable()
    n = len(transducer)
    diamonds, boxes = var_sets(formula)
    values = {x: 2 * n + 2 for x in diamonds}
    values.update({y: 0 for y in boxes})
    return Realizable(transducer.strip_color(), Valuation(values), transducer)


def realize_at(formula: tree.Formula, inputs: Iterable[str], outputs: Iterable[str],
               valuation: Valuation):
    """
    Realizability with respect to the fixed ``valuation``. Bounded operators
    are expanded with letter counters, no coloring is involved.

    :raises UnboundVariable: if ``valuation`` misses a variable.
    """
    _require_well_formed(formula)
    inputs, outputs = check_partition(formula, inputs, outputs)
    transducer = _synthesize(formula, inputs, outputs, valuation)
    if transducer is None:
        return Unrealizable()
    return Realizable(transducer, valuation)
