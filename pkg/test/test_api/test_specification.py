"""
Tests for the public :class:`pldl.Specification` API.
"""
import pytest

import pldl
from pldl import Specification
from pldl.automata.aba import aba_membership
from pldl.semantics.word import Valuation, parse_word
from test.helpers import get_example_path, load_system

REQUEST_RESPONSE = '[tt*](req -> <tt*>{<=x} resp)'


def test_repr_and_str():
    spec = Specification(REQUEST_RESPONSE)
    assert str(spec) == '[tt*](!req | <tt*>{<=x}resp)'
    assert repr(spec) == "<Specification: '[tt*](!req | <tt*>{<=x}resp)'>"


def test_properties():
    spec = Specification('<tt*>{<=x} p & [q*]{<=y} r')
    assert spec.var_sets.diamonds == {'x'}
    assert spec.var_sets.boxes == {'y'}
    assert spec.propositions == {'p', 'q', 'r'}
    assert spec.is_well_formed()
    assert not Specification('<tt*>{<=x} p & [tt*]{<=x} q').is_well_formed()


def test_from_path(tmp_path):
    path = tmp_path / 'spec.pldl'
    path.write_text('# request/response\n' + REQUEST_RESPONSE + '\n')
    spec = Specification(path=path)
    assert spec.path == path
    assert str(spec) == str(Specification(REQUEST_RESPONSE))
    with pytest.raises(TypeError):
        Specification()


def test_syntax_error():
    with pytest.raises(pldl.FormulaSyntaxError) as excinfo:
        Specification('<tt*> &')
    assert excinfo.value.line == 1


def test_evaluate():
    spec = Specification(REQUEST_RESPONSE)
    assert spec.evaluate('{req} $ {resp}', 'x=1')
    assert not spec.evaluate('{req}{} $ {resp}', Valuation({'x': 1}))
    assert spec.evaluate('{req}{} $ {resp}', 'x=1', position=1)
    with pytest.raises(pldl.UnboundVariable):
        spec.evaluate('{req} $ {resp}')


def test_negate():
    spec = Specification(REQUEST_RESPONSE).negate()
    assert str(spec) == '<tt*>(req & [tt*]{<=x}!resp)'
    assert spec.evaluate('{req} $ {}', 'x=0')


def test_compile():
    # Parameterized boxes are eliminated, parameterized diamonds need a valuation.
    aba = Specification('[tt*]{<=y} q').compile()
    assert aba_membership(aba, parse_word('{q} $ {}'))
    assert not aba_membership(aba, parse_word('$ {}'))
    with pytest.raises(pldl.FragmentError):
        Specification('<tt*>{<=x} p & [tt*]{<=y} q').compile()
    counted = Specification('<tt*>{<=x} p').compile('x=2')
    assert len(counted) > len(Specification('<tt*>p').compile())
    assert len(Specification('p').compile_nba()) == 2


def test_model_check():
    spec = Specification(REQUEST_RESPONSE)
    result = spec.model_check(get_example_path('rr.ts').read_text())
    assert result.holds
    ts = load_system('rr.ts')
    assert spec.check_valuation(ts, result.valuation)
    assert spec.tighten(ts, result.valuation) == Valuation({'x': 1})
    assert not spec.model_check(load_system('lazy.ts')).holds


def test_satisfiable():
    word, alpha = Specification('<tt*>{<=x} p').satisfiable()
    assert Specification('<tt*>{<=x} p').evaluate(word, alpha)
    assert Specification('p & !p').satisfiable() is None


def test_realize():
    spec = Specification(REQUEST_RESPONSE)
    assert spec.realize(['req'], ['resp']).holds
    assert spec.realize(['req'], ['resp'], 'x=0').holds
    with pytest.raises(pldl.PartitionError):
        spec.realize(['req'], [])
