from textwrap import dedent

import pytest

from pldl.api.exceptions import SystemFormatError
from pldl.model_checking.system import TransitionSystem, parse_ts
from pldl.semantics.word import LassoWord
from test.helpers import load_system

RR = dedent('''\
    state idle init {}
    state asked {req}
    state done {resp}
    edge idle idle
    edge idle asked
    edge asked done
    edge done idle''')


def test_parse():
    ts = load_system('rr.ts')
    assert ts.states == ['idle', 'asked', 'done']
    assert ts.initial == 'idle'
    assert ts.successors('idle') == ['idle', 'asked']
    assert ts.label('asked') == {'req'}
    assert ts.propositions() == {'req', 'resp'}
    assert ts.to_text() == RR
    assert parse_ts(ts.to_text()).to_text() == RR


def test_comments_and_numbers():
    ts = parse_ts('# two states\n\nstate 0 init {p, q}\nstate 1 {}\nedge 0 1\nedge 1 1\nedge 1 1\n')
    assert ts.states == ['0', '1']
    assert ts.label('0') == {'p', 'q'}
    assert ts.successors('1') == ['1']


def test_trace():
    ts = load_system('rr.ts')
    assert ts.trace(['idle'], ['asked', 'done', 'idle']) \
        == LassoWord([set()], [{'req'}, {'resp'}, set()])
    assert ts.is_path(['idle', 'asked', 'done', 'idle'])
    assert not ts.is_path(['idle', 'done'])


@pytest.mark.parametrize(
    'text, line', [
        ('state a init {}\nstate a {}\nedge a a', 2),
        ('state a init {}\nstate b init {}\nedge a b\nedge b a', 2),
        ('state a init {}\nedge a b', 2),
        ('edge a a\nstate a init {}', 1),
        ('state a init {}\nnode b {}', 2),
        ('state a init {p', 1),
        ('state a init {_cp}\nedge a a', 1),
        ('state a init {}\nedge a a extra', 2),
    ]
)
def test_format_errors(text, line):
    with pytest.raises(SystemFormatError) as excinfo:
        parse_ts(text)
    assert excinfo.value.line == line
    assert str(excinfo.value).startswith('line %s: ' % line)


@pytest.mark.parametrize(
    'text, message', [
        ('state a {}\nedge a a', 'missing initial state'),
        ('state a init {}\nstate b {}\nedge a b', r"state 'b' has no successor \(non-total\)"),
    ]
)
def test_global_errors(text, message):
    with pytest.raises(SystemFormatError, match=message):
        parse_ts(text)


def test_validation():
    with pytest.raises(SystemFormatError):
        TransitionSystem(['a'], 'b', {'a': ['a']}, {'a': frozenset()})
    with pytest.raises(SystemFormatError):
        TransitionSystem(['a'], 'a', {'a': ['b']}, {'a': frozenset()})
