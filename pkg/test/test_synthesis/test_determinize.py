import pytest

from pldl.api.exceptions import CapExceeded
from pldl.automata.export import dpa_to_text
from pldl.automata.nba import NBA, membership
from pldl.formula.tree import TT, PVar, prop_not
from pldl.selftest import random_lasso, random_nba
from pldl.semantics.word import parse_word
from pldl.synthesis.determinize import determinize, safra_step

P = PVar('p')


def finitely_many_p():
    edges = [(0, TT, 0), (0, prop_not(P), 1), (1, prop_not(P), 1)]
    return NBA.from_transitions(0, [1], ['p'], edges)


def infinitely_many_p():
    edges = [(0, prop_not(P), 0), (0, P, 1), (1, prop_not(P), 0), (1, P, 1)]
    return NBA.from_transitions(0, [1], ['p'], edges)


@pytest.mark.parametrize('nba', [finitely_many_p(), infinitely_many_p()])
@pytest.mark.parametrize('word', ['$ {}', '$ {p}', '{p}{p} $ {}', '$ {p}{}', '{} $ {}{}{p}'])
def test_accepts(nba, word):
    word = parse_word(word)
    assert determinize(nba).accepts(word) == membership(nba, word)


def test_complete():
    dpa = determinize(finitely_many_p())
    for state in dpa.states:
        assert set(dpa.transitions[state]) == set(dpa.letters())
    assert dpa.initial == 0
    assert dpa.priority(dpa.initial) == 1


def test_empty_language():
    dpa = determinize(NBA.from_transitions(0, [], ['p'], [(0, TT, 0)]))
    assert len(dpa) == 1
    assert not dpa.accepts(parse_word('$ {p}'))


def test_green_step():
    nba = infinitely_many_p()
    tree, priority = safra_step(nba, nba.productive_states(), (1, frozenset({1}), ()),
                                frozenset({'p'}), 5)
    # The new child covers the whole label, so the root turns green and the
    # child is removed again.
    assert tree == (1, frozenset({1}), ())
    assert priority == 2 * (5 - 1)


def green_then_removed():
    # On $ {p}{p}{}{}{}{} a Safra node keeps turning green and being removed.
    not_p = prop_not(P)
    edges = [
        (0, not_p, 2), (0, P, 1), (0, P, 2), (0, P, 3),
        (1, P, 0), (1, P, 2),
        (2, not_p, 2),
        (3, TT, 2), (3, TT, 3),
    ]
    return NBA.from_transitions(0, [1, 2], ['p'], edges)


@pytest.mark.parametrize('word', ['$ {p}{p}{}{}{}{}', '$ {p}{}', '{p} $ {}', '{p}{p} $ {}{p}'])
def test_removal_outranks_green(word):
    nba = green_then_removed()
    word = parse_word(word)
    assert determinize(nba).accepts(word) == membership(nba, word)


def test_green_then_removed_is_rejecting():
    word = parse_word('$ {p}{p}{}{}{}{}')
    assert not membership(green_then_removed(), word)
    assert not determinize(green_then_removed()).accepts(word)


def test_random(rng):
    for _ in range(30):
        nba = random_nba(rng)
        dpa = determinize(nba)
        for _ in range(10):
            word = random_lasso(rng, ('p',), 6)
            assert dpa.accepts(word) == membership(nba, word), (nba, word)


def test_cap():
    with pytest.raises(CapExceeded):
        determinize(finitely_many_p(), cap=1)


def test_text():
    dpa = determinize(infinitely_many_p())
    lines = dpa_to_text(dpa).splitlines()
    assert lines[0].startswith('dpa states=%s initial=0 priorities=' % len(dpa))
    assert lines[1] == 'state 0 priority=1'
