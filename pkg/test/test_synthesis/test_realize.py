import pytest

from pldl.api.exceptions import NotWellFormed, PartitionError
from pldl.automata.export import transducer_to_text, transducer_to_dot
from pldl.formula.parser import parse
from pldl.formula.tree import COLOR_PROP
from pldl.selftest import REALIZABILITY_EXAMPLES, play, random_lasso
from pldl.semantics.oracle import evaluate
from pldl.semantics.word import LassoWord, Valuation, is_k_bounded, is_k_spaced, \
    parse_word, strip_color
from pldl.synthesis.realize import Transducer, realize, realize_at, spaced_strategy, \
    check_partition

I = frozenset({'i'})
O = frozenset({'o'})


def echo():
    """Emits o exactly after reading i."""
    row = {I: 1, frozenset(): 2}
    return Transducer({0: dict(row), 1: dict(row), 2: dict(row)},
                      {0: frozenset(), 1: O, 2: frozenset()}, ['i'], ['o'])


def test_transducer():
    t = echo()
    assert t.states == [0, 1, 2]
    assert t.step(0, I | {'x'}) == 1
    assert t.run([I, frozenset()]) == 2
    assert t.respond([I, frozenset(), I]) == [I | O, frozenset(), I | O]
    assert t.outcome(LassoWord([], [I, set()])) == LassoWord([], [I | O, set()])


def test_transducer_text():
    text = transducer_to_text(echo())
    assert text.splitlines()[:3] == ['state 0 out={}', 'state 1 out={o}', 'state 2 out={}']
    assert 'on 2 {i} -> 1' in text
    assert transducer_to_dot(echo()).startswith('digraph transducer {')


@pytest.mark.parametrize('k', [1, 2, 3])
def test_spaced_strategy(k):
    t = echo()
    colored = spaced_strategy(t, k)
    assert COLOR_PROP in colored.output_props
    for text in ['$ {i}', '{} $ {i}{}{}', '{i}{i} $ {}{i}']:
        word = parse_word(text)
        outcome = colored.outcome(word)
        assert is_k_spaced(outcome, k) and is_k_bounded(outcome, k)
        assert COLOR_PROP not in outcome.letter(0)
        assert strip_color(outcome).unroll(20) == t.outcome(word).unroll(20)


@pytest.mark.parametrize('text, inputs, outputs, expected', REALIZABILITY_EXAMPLES)
def test_examples(rng, text, inputs, outputs, expected):
    formula = parse(text)
    result = realize(formula, inputs, outputs)
    assert result.holds == expected
    if expected:
        n = len(result.colored_strategy)
        assert all(value <= 2 * n + 2 for value in result.valuation.values())
        assert COLOR_PROP not in result.strategy.output_props
        assert play(result.strategy, formula, result.valuation, rng, plays=20) == []
        for _ in range(5):
            outcome = result.colored_strategy.outcome(random_lasso(rng, sorted(inputs)))
            assert is_k_bounded(outcome, n + 1)


def test_boxes_are_zero():
    result = realize(parse('[tt*]{<=y} o & <tt*>{<=x} o'), [], ['o'])
    assert result.holds
    assert result.valuation['y'] == 0


def test_realize_at():
    formula = parse('<tt*>{<=x} resp')
    result = realize_at(formula, [], ['resp'], Valuation({'x': 0}))
    assert result.holds
    assert result.valuation == Valuation({'x': 0})
    outcome = result.strategy.outcome(LassoWord([], [set()]))
    assert evaluate(formula, outcome, result.valuation)


def test_realize_at_same_step(rng):
    formula = parse('[tt*](req -> <tt*>{<=x} resp)')
    result = realize_at(formula, ['req'], ['resp'], Valuation({'x': 0}))
    assert result.holds
    assert play(result.strategy, formula, result.valuation, rng, plays=10) == []


def test_unrealizable_at():
    result = realize_at(parse('[tt*]<tt*>{<=x} q'), ['q'], [], Valuation({'x': 5}))
    assert not result.holds


@pytest.mark.parametrize(
    'inputs, outputs, message', [
        (['p'], [], 'q neither input nor output'),
        (['p', 'q'], ['q'], 'q are inputs and outputs at the same time'),
        (['p', 'q'], [COLOR_PROP], '_cp is reserved'),
    ]
)
def test_partition_errors(inputs, outputs, message):
    formula = parse('p & <tt>q')
    with pytest.raises(PartitionError, match=message):
        check_partition(formula, inputs, outputs)
    with pytest.raises(PartitionError):
        realize(formula, inputs, outputs)


def test_not_well_formed():
    with pytest.raises(NotWellFormed):
        realize(parse('<tt*>{<=x} p & [tt*]{<=x} p'), [], ['p'])
