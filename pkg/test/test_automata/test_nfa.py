from itertools import product

import pytest

from pldl.formula.parser import parse_regex
from pldl.formula.transform import regex_length
from pldl.formula.tree import Atom, COLOR_PROP
from pldl.automata.nfa import thompson, cp_product, counter_product, epsilon_paths, \
    ChangepointDFA, EpsilonPath
from pldl.selftest import FormulaGenerator, random_lasso
from pldl.semantics.oracle import evaluate, match_relation

C = frozenset({COLOR_PROP})
U = frozenset()


def letters(*names):
    return [frozenset(n) if n else frozenset() for n in names]


@pytest.mark.parametrize(
    'regex, word, expected', [
        ('p', ['p'], True),
        ('p', [''], False),
        ('p', [], False),
        ('(p;q)*', [], True),
        ('(p;q)*', ['p', 'q', 'p', 'q'], True),
        ('(p;q)*', ['p'], False),
        ('p + q;q', ['q', 'q'], True),
        ('p + q;q', ['p', 'q'], False),
        ('!p;tt', ['', 'p'], True),
        ('r?;p', ['p'], True),
    ]
)
def test_thompson_accepts(regex, word, expected):
    assert thompson(parse_regex(regex)).accepts(letters(*word)) == expected


@pytest.mark.parametrize('regex', ['p', 'p?', 'p;q', '(p + q?)*;r', 'p**'])
def test_thompson_size(regex):
    parsed = parse_regex(regex)
    nfa = thompson(parsed)
    assert len(nfa.states) <= 2 * regex_length(parsed)
    final, = nfa.finals
    assert not nfa.letter_edges(final) and not nfa.epsilon_edges(final)


def test_thompson_marks_tests():
    nfa = thompson(parse_regex('p?;q'))
    assert list(nfa.marking.values()) == [Atom('p')]


def test_epsilon_paths():
    nfa = thompson(parse_regex('p?;q'))
    paths = epsilon_paths(nfa, nfa.initial)
    assert [path.final for path in paths] == [False] * 4
    tested = frozenset({Atom('p')})
    assert paths[0] == EpsilonPath(nfa.initial, frozenset(), False)
    assert all(path.tests == tested for path in paths[1:])
    # Only the last state of the paths has a letter edge.
    assert [bool(nfa.letter_edges(path.target)) for path in paths] == [False] * 3 + [True]


def test_epsilon_paths_reach_final():
    nfa = thompson(parse_regex('p*'))
    paths = epsilon_paths(nfa, nfa.initial)
    assert any(path.final and not path.tests for path in paths)


def test_epsilon_paths_keep_minimal_tests():
    nfa = thompson(parse_regex('p?*'))
    final, = nfa.finals
    paths = [path for path in epsilon_paths(nfa, nfa.initial) if path.target == final]
    assert [path.tests for path in paths] == [frozenset()]


def test_changepoint_dfa():
    dfa = ChangepointDFA()
    assert dfa.run([]) == 'fresh'
    assert dfa.run([C, C, U, U]) == 'on_off'
    assert dfa.run([U, C]) == 'off_on'
    assert dfa.run([C, U, C]) == 'sink'
    assert not dfa.is_accepting('sink')
    assert len(dfa.states) == 6


@pytest.mark.parametrize(
    'word, expected', [
        ([], True),
        ([C, C, U], True),
        ([U, U, U, C], True),
        ([C, U, C], False),
        ([U, C, U, U], False),
    ]
)
def test_cp_product(word, expected):
    assert cp_product(thompson(parse_regex('tt*'))).accepts(word) == expected


def test_cp_product_keeps_guards():
    nfa = cp_product(thompson(parse_regex('p*')))
    assert nfa.accepts([C | {'p'}, frozenset({'p'})])
    assert not nfa.accepts([C | {'p'}, C])


@pytest.mark.parametrize('length, expected', [(0, True), (2, True), (3, False)])
def test_counter_product(length, expected):
    nfa = counter_product(thompson(parse_regex('tt*')), 2)
    assert nfa.accepts([U] * length) == expected


def colored_words(max_length):
    """Every word over {}, {p} up to ``max_length``, in every coloring."""
    alphabet = [frozenset(), frozenset({'p'}), C, C | {'p'}]
    return [list(word) for n in range(max_length + 1) for word in product(alphabet, repeat=n)]


def color_changes(word):
    return sum((COLOR_PROP in a) != (COLOR_PROP in b) for a, b in zip(word, word[1:]))


@pytest.mark.parametrize('regex', ['tt*', 'p*', '(p;!p)*', 'p + !p;tt', '(tt;tt)*;p', 'p?;tt'])
def test_cp_product_all_short_words(regex):
    nfa = thompson(parse_regex(regex))
    product_nfa = cp_product(nfa)
    for word in colored_words(6):
        expected = color_changes(word) <= 1 and nfa.accepts(word)
        assert product_nfa.accepts(word) == expected, word


def test_run_endpoints_match_relation(rng):
    generator = FormulaGenerator(rng, ('p', 'q'))
    horizon = 6
    for _ in range(100):
        regex = generator.regex(3, 2)
        word = random_lasso(rng, ('p', 'q'), 5)
        nfa = thompson(regex)
        pairs = match_relation(regex, word, horizon=horizon)

        def holds(formula, position):
            return evaluate(formula, word, None, position)

        for n in word.positions():
            offsets = nfa.run_endpoints(word, n, holds, horizon)
            assert {(n, n + j) for j in offsets} == {p for p in pairs if p[0] == n}, \
                (regex, word, n)
