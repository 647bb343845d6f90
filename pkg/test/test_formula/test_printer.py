import pytest

from pldl.formula import tree
from pldl.formula.parser import parse
from pldl.formula.printer import pretty_print, print_regex
from pldl.selftest import FormulaGenerator


@pytest.mark.parametrize(
    'text', [
        'p',
        '!p',
        'tt',
        'ff',
        'p & q | r',
        'p & (q | r)',
        'p | (q | r)',
        '[tt*](!p | <tt>q)',
        '<tt*>{<=x}p',
        '[p;q + r*]{<=y}(p & q)',
        '<(!p?;tt)*>{cp}p',
        '<(p & q)>r',
        '<(p & q)?>r',
        '<p;(q;r)>tt',
        '<<p>q?>[tt*]{<=y}!r',
    ]
)
def test_canonical_text(text):
    assert pretty_print(parse(text)) == text


@pytest.mark.parametrize(
    'text, expected', [
        ('G (p -> X q)', '[tt*](!p | <tt>q)'),
        ('F{<=x} p', '<tt*>{<=x}p'),
        ('(p U q)', '<(p?;tt)*>q'),
        ('!<p + q>{<=x} r', '[p + q]{<=x}!r'),
    ]
)
def test_sugar_is_printed_expanded(text, expected):
    assert pretty_print(parse(text)) == expected


def test_str():
    formula = parse('<p?;q>{<=x} r')
    assert str(formula) == '<p?;q>{<=x}r'
    assert str(formula.regex) == print_regex(formula.regex) == 'p?;q'
    assert str(tree.PAnd(tree.PVar('a'), tree.TT)) == 'a & tt'


def test_round_trip(rng):
    generator = FormulaGenerator(rng, ('p', 'q', 'r'),
                                 (None, tree.Var('x'), tree.Var('z')),
                                 (None, tree.Var('y')))
    for _ in range(200):
        formula = generator.formula()
        assert parse(pretty_print(formula)) == formula, pretty_print(formula)
