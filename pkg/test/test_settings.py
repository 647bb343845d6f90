import pytest

from pldl import settings
from pldl.api.exceptions import CapExceeded
from pldl.automata.aba import build_aba
from pldl.automata.nba import remove_alternation
from pldl.formula.parser import parse
from pldl.synthesis.determinize import determinize


@pytest.fixture()
def tiny_nba_cap(monkeypatch):
    monkeypatch.setattr(settings, 'max_nba_states', 2)


def test_nba_cap(tiny_nba_cap):
    nba = remove_alternation(build_aba(parse('[tt*](p -> <tt*>q) & [tt*]<tt*>r')))
    with pytest.raises(CapExceeded) as excinfo:
        len(nba)
    assert excinfo.value.cap == 2
    assert 'exceeded the cap of 2 states' in str(excinfo.value)


def test_det_cap(monkeypatch):
    monkeypatch.setattr(settings, 'max_det_states', 1)
    nba = remove_alternation(build_aba(parse('<tt*>[tt*]p')))
    with pytest.raises(CapExceeded):
        determinize(nba)


def test_defaults():
    assert settings.max_nba_states < settings.max_det_states
    assert settings.default_seed == 0
