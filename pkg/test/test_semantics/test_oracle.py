import pytest

from pldl.api.exceptions import UnboundVariable
from pldl.formula import tree
from pldl.formula.parser import parse, parse_regex
from pldl.formula.transform import negate, color_transform
from pldl.selftest import FormulaGenerator, random_lasso, random_valuation
from pldl.semantics.oracle import Evaluator, evaluate, match_relation
from pldl.semantics.word import LassoWord, Valuation, parse_word, uniform_coloring

C = {tree.COLOR_PROP}


@pytest.mark.parametrize(
    'formula, word, expected', [
        ('[tt*]<tt*>p', '$ {p}{}', True),
        ('[tt*]<tt*>p', '{p}{p} $ {}', False),
        ('<tt*>p', '$ {p}', True),
        ('<tt*>p', '{} $ {q}', False),
        ('[tt*](q -> <(tt;tt)*;p>tt)', '$ {q}{p}', False),
        ('[tt*](q -> <(tt;tt)*;p>tt)', '{q}{}{p} $ {}', True),
        ('(p U q)', '{p}{p} $ {q}', True),
        ('(p U q)', '{p}{} $ {q}', False),
        ('X X p', '{}{} $ {p}', True),
        ('[p*]q', '{p,q}{p,q}{q} $ {}', True),
        ('[p*]q', '{p,q}{p} $ {}', False),
        ('<(p?;tt)*>!p', '{p}{p} $ {q}', True),
        ('tt', '$ {}', True),
        ('ff', '$ {}', False),
    ]
)
def test_evaluate(formula, word, expected):
    assert evaluate(parse(formula), parse_word(word)) == expected


@pytest.mark.parametrize('x, expected', [(0, False), (1, False), (2, True), (3, True)])
def test_bounded_diamond(x, expected):
    word = parse_word('$ {}{}{p}')
    alpha = Valuation({'x': x})
    assert evaluate(parse('<tt*>{<=x} p'), word, alpha) == expected
    # The dual box fails exactly when the diamond holds.
    assert evaluate(parse('[tt*]{<=x} !p'), word, alpha) != expected


def test_bounded_box():
    word = parse_word('{p}{p}{} $ {p}')
    formula = parse('[tt*]{<=y} p')
    assert evaluate(formula, word, Valuation({'y': 1}))
    assert not evaluate(formula, word, Valuation({'y': 2}))


def test_position():
    word = parse_word('{} $ {p}{}')
    formula = parse('p')
    assert [evaluate(formula, word, position=n) for n in range(5)] \
        == [False, True, False, True, False]


def test_unbound_variable():
    with pytest.raises(UnboundVariable):
        evaluate(parse('<tt*>{<=x} p'), parse_word('$ {p}'))
    assert evaluate(parse('<tt*>{<=x} p'), parse_word('$ {p}'), Valuation(default=0))


def test_changepoint_bound():
    formula = parse('<tt*>{cp} p')
    # Three colored letters, no color change before p.
    assert evaluate(formula, LassoWord([], [C, C, C, {'p'}]))
    # The color changes twice before p.
    assert not evaluate(formula, LassoWord([], [C, set(), C, {'p'}]))
    # One change is fine.
    assert evaluate(formula, LassoWord([], [C, set(), set(), {'p'}]))


def test_changepoint_box():
    formula = parse('[tt*]{cp} p')
    assert evaluate(formula, LassoWord([], [C | {'p'}, {'p'}, C | {'p'}, set()]))
    assert not evaluate(formula, LassoWord([], [C | {'p'}, {'p'}, C, set()]))


def test_duality(rng):
    generator = FormulaGenerator(rng, ('p', 'q'), (None, tree.Var('x'), tree.Var('z')),
                                 (None, tree.Var('y')))
    for _ in range(200):
        formula = generator.formula()
        word = random_lasso(rng, ('p', 'q'))
        alpha = random_valuation(rng, ('x', 'y', 'z'))
        assert evaluate(formula, word, alpha) != evaluate(negate(formula), word, alpha)


def test_spaced_coloring_satisfies_colored_formula(rng):
    generator = FormulaGenerator(rng, ('p', 'q'), (None, tree.Var('x')), (None,))
    for _ in range(100):
        formula = generator.formula()
        word = random_lasso(rng, ('p', 'q'))
        alpha = random_valuation(rng, ('x',))
        k = max(1, alpha['x'])
        if evaluate(formula, word, alpha):
            assert evaluate(color_transform(formula), uniform_coloring(word, k))


def test_match_relation_of_proposition():
    word = parse_word('$ {p}{}')
    assert match_relation(parse_regex('p'), word) == {(0, 1)}
    assert match_relation(parse_regex('p'), word, horizon=3) == {(0, 1)}
    assert match_relation(parse_regex('tt'), word, horizon=3) == {(0, 1), (1, 2)}


def test_match_relation_of_test():
    word = parse_word('{q} $ {p}{q}')
    assert match_relation(parse_regex('q?'), word) == {(0, 0), (2, 2)}


def test_match_relation_of_star():
    word = parse_word('{} $ {p}{}')
    relation = match_relation(parse_regex('(p;tt)*'), word)
    assert {(n, n) for n in word.positions()} <= relation
    assert relation == {(0, 0), (1, 1), (2, 2)}
    assert match_relation(parse_regex('(p;tt)*'), word, horizon=4) \
        == {(0, 0), (1, 1), (1, 3), (1, 5), (2, 2)}


def test_match_relation_composition(rng):
    generator = FormulaGenerator(rng, ('p', 'q'))
    for _ in range(50):
        regex = generator.regex(3, 1)
        word = random_lasso(rng, ('p', 'q'))
        composed = tree.Seq(regex, tree.Test(tree.TRUE))
        assert match_relation(composed, word) == match_relation(regex, word)


def test_evaluator_memo():
    evaluator = Evaluator(parse_word('$ {p}'))
    formula = parse('[tt*]p')
    assert evaluator.evaluate(formula, 0)
    assert evaluator.evaluate(formula, 17)
    assert evaluator.endpoints(tree.ANY_STAR, None, 0) == {0}
