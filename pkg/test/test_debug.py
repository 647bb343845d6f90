import pldl
from pldl import debug
from pldl.formula.parser import parse
from pldl.automata.aba import build_aba
from pldl.model_checking.checker import model_check
from test.helpers import load_system


def test_simple():
    pldl.set_debug_function()
    debug.speed('foo')
    debug.dbg('bar %s', 1)
    debug.warning('baz')
    debug.size('nba', 3)
    pldl.set_debug_function(None, False, False, False)


def test_pipeline_messages():
    messages = []
    pldl.set_debug_function(lambda color, text: messages.append((color, text)))
    try:
        build_aba(parse('<tt*>p'))
    finally:
        pldl.set_debug_function(None, False, False, False)
    texts = [text for _, text in messages]
    assert texts[0] == 'dbg: Start: build_aba'
    assert 'dbg: End: build_aba' in texts
    assert any(color == 'CYAN' and text.startswith('aba: ') for color, text in messages)


def test_indent():
    messages = []
    pldl.set_debug_function(lambda color, text: messages.append(text))
    try:
        with debug.increase_indent_cm():
            debug.dbg('inner')
        debug.dbg('outer')
    finally:
        pldl.set_debug_function(None, False, False, False)
    assert messages == [' dbg: inner', 'dbg: outer']


def test_silent_without_function():
    pldl.set_debug_function(None, False, False, False)
    debug.dbg('nobody listens %s', 'here')
    debug.size('nba', 1)


def test_unused_proposition_warning():
    messages = []
    pldl.set_debug_function(lambda color, text: messages.append((color, text)),
                            warnings=True, notices=False, speed=False)
    try:
        model_check(load_system('toggle.ts'), parse('[tt*](p | q)'))
    finally:
        pldl.set_debug_function(None, False, False, False)
    assert ('RED', "warning: proposition 'q' labels no state of the system") in messages
