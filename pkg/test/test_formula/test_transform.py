import pytest

from pldl.api.exceptions import FragmentError
from pldl.formula import tree
from pldl.formula.parser import parse, parse_regex
from pldl.formula.transform import negate, closure, size, regex_length, var_sets, \
    check_well_formed, eliminate_boxes, relativize, color_transform, theta_infinitely, \
    propositions, bounds, is_variable_free, count_parameterized_boxes
from pldl.formula.tree import Atom, NegAtom, And, Diamond, Box, Var, CP, ANY_STAR, COLOR_PROP
from pldl.selftest import FormulaGenerator


@pytest.fixture()
def generator(rng):
    return FormulaGenerator(rng, ('p', 'q'), (None, Var('x'), Var('z')), (None, Var('y')))


def test_negate_examples():
    assert negate(Atom('p')) == NegAtom('p')
    assert negate(parse('<r>{<=x} p')) == parse('[r]{<=x} !p')
    assert negate(parse('p & <tt*>{cp} q')) == parse('!p | [tt*]{cp} !q')
    assert negate(tree.TRUE) == tree.FALSE


def test_negate_involution_and_size(generator):
    for _ in range(100):
        formula = generator.formula()
        negated = negate(formula)
        assert negate(negated) == formula
        assert size(negated) == size(formula)
        assert check_well_formed(negated) == check_well_formed(formula)


def test_closure():
    formula = parse('<p?;q>{<=x} r')
    assert closure(formula) == {Atom('p'), Atom('r'), formula}
    assert closure(Atom('p')) == {Atom('p')}
    conjunction = parse('p & q')
    assert closure(conjunction) == {conjunction, Atom('p'), Atom('q')}


@pytest.mark.parametrize(
    'text, expected', [
        ('p', 1),
        ('p & q', 3),
        ('<p?;q>{<=x} r', 7),
        ('[tt*]<tt*>p', 7),
        ('<(p + q)*>r', 6),
        # Repeated subformulas count once, their regular expressions twice.
        ('<a>p & <a>p', 5),
        ('[tt?] q', 7),
    ]
)
def test_size(text, expected):
    assert size(parse(text)) == expected


@pytest.mark.parametrize(
    'text, expected', [
        ('p', 1),
        ('p?', 2),
        ('p;q', 3),
        ('(p;q)*', 4),
        ('p + q?;r', 6),
    ]
)
def test_regex_length(text, expected):
    assert regex_length(parse_regex(text)) == expected


@pytest.mark.parametrize(
    'text, diamonds, boxes', [
        ('<tt*>{<=x} p', {'x'}, set()),
        ('[r]{<=y} <r>{<=x} p', {'x'}, {'y'}),
        ('[tt*](p -> <tt*>q)', set(), set()),
        ('<(<tt*>{<=z} q)?>p', {'z'}, set()),
        ('!<tt*>{<=x} p', set(), {'x'}),
    ]
)
def test_var_sets(text, diamonds, boxes):
    assert var_sets(parse(text)) == (diamonds, boxes)


@pytest.mark.parametrize(
    'text, expected', [
        ('<r>{<=x} p & [r]{<=x} q', False),
        ('<r>{<=x} p & [r]{<=y} q', True),
        ('[tt*](p -> <tt*>q)', True),
        ('<(<tt*>{<=x} q)?>[tt*]{<=x} p', False),
    ]
)
def test_check_well_formed(text, expected):
    assert check_well_formed(parse(text)) == expected


def test_variable_free():
    assert is_variable_free(parse('[tt*]<tt*>p'))
    assert is_variable_free(parse('<tt*>{cp} p'))
    assert not is_variable_free(parse('G{<=y} p'))


def test_propositions():
    assert propositions(parse('<p & !q>(r | tt)')) == {'p', 'q', 'r'}


@pytest.mark.parametrize(
    'text, expected', [
        ('[(q?;a)*]{<=y} p', '[tt?] p'),
        ('[a;b]{<=y} p', '[ff?] p'),
        ('[p? + q?]{<=y} r', '[(p | q)?] r'),
        ('[p?;a + q?]{<=y} r', '[q?] r'),
        ('[a]p', '[a]p'),
        ('<a>{<=x} p', '<a>{<=x} p'),
        ('<([a]{<=y} p)?>q', '<[ff?]p?>q'),
    ]
)
def test_eliminate_boxes(text, expected):
    assert eliminate_boxes(parse(text)) == parse(expected)


def test_eliminate_boxes_random(generator):
    for _ in range(100):
        formula = generator.formula()
        eliminated = eliminate_boxes(formula)
        assert count_parameterized_boxes(eliminated) == 0
        assert var_sets(eliminated).diamonds == var_sets(formula).diamonds
        assert size(eliminated) <= 3 * size(formula)


def test_eliminate_boxes_size():
    # A test replaces the regular expression, so the size is not preserved.
    formula = parse('[p*]{<=y} q')
    assert size(formula) == 4
    assert size(eliminate_boxes(formula)) == 7
    formula = parse('[(q?;a)*]{<=y} p')
    assert size(formula) == 8
    assert size(eliminate_boxes(formula)) == 7


def test_relativize():
    assert relativize(parse('<tt*>{<=x} p')) == parse('<tt*>{cp} p')
    assert relativize(parse('<(<tt*>{<=x} q)?;a>{<=x} p')) \
        == parse('<(<tt*>{cp} q)?;a>{cp} p')
    with pytest.raises(FragmentError):
        relativize(parse('[tt*]{<=y} p'))


def _with_theta(formula):
    return And(And(formula, theta_infinitely(Atom(COLOR_PROP))),
               theta_infinitely(NegAtom(COLOR_PROP)))


def test_color_transform():
    colored = color_transform(parse('<tt*>{<=x} p'))
    assert colored == _with_theta(Diamond(ANY_STAR, Atom('p'), CP))
    assert bounds(colored) == {CP}
    assert COLOR_PROP in propositions(colored)


def test_color_transform_variable_free():
    formula = parse('[tt*](p -> <tt>q)')
    assert color_transform(formula) == _with_theta(formula)


def test_color_transform_needs_box_free_input():
    with pytest.raises(FragmentError):
        color_transform(parse('[tt*]{<=y} p'))
    assert color_transform(eliminate_boxes(parse('[tt*]{<=y} p'))) \
        == _with_theta(Box(tree.Test(tree.TRUE), Atom('p')))


def test_color_transform_size_is_linear(generator):
    for _ in range(50):
        formula = eliminate_boxes(generator.formula())
        assert size(color_transform(formula)) <= size(formula) + 20
