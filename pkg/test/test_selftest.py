import pytest

from pldl.selftest import SUITES, DEFAULT_CASES, run_suites


def test_suites_are_registered():
    assert DEFAULT_CASES == {
        'oracle': 500,
        'negation': 300,
        'monotonicity': 300,
        'box-elimination': 300,
        'coloring': 200,
        'pumpable': 200,
        'parity': 200,
        'model-checking': 100,
        'determinization': 100,
        'realizability': 100,
    }
    assert set(SUITES) == set(DEFAULT_CASES)


@pytest.mark.parametrize('name', sorted(SUITES))
def test_suite(name, seed):
    result, = run_suites([name], seed=seed)
    assert result.name == name
    assert result.cases == DEFAULT_CASES[name]
    assert result.ok, result.failures


def test_cases_override():
    result, = run_suites(['parity'], seed=1, cases=3)
    assert result.cases == 3
    assert result.ok, result.failures


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suites(['nonsense'])
