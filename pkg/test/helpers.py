"""
Helpers for the tests, mostly around the shipped example corpus.

Every ``*.ts`` file in ``test/examples`` is a transition system. Comment
lines of the form ``# satisfied: FORMULA`` or ``# violated: FORMULA`` attach
formulas with their known verdicts.
"""
from pathlib import Path
from typing import List, NamedTuple

from pldl.formula.parser import parse
from pldl.formula.tree import Formula
from pldl.model_checking.system import TransitionSystem, parse_ts

test_dir = Path(__file__).absolute().parent
root_dir = test_dir.parent
example_dir = test_dir.joinpath('examples')

_VERDICTS = ('satisfied', 'violated')


class Example(NamedTuple):
    name: str
    system: TransitionSystem
    formula: Formula
    satisfied: bool

    def __str__(self):
        return '%s: %s' % (self.name, self.formula)


def get_example_path(*names) -> Path:
    return example_dir.joinpath(*names)


def load_system(name: str) -> TransitionSystem:
    return parse_ts(get_example_path(name).read_text())


def load_corpus() -> List[Example]:
    examples = []
    for path in sorted(example_dir.glob('*.ts')):
        text = path.read_text()
        system = parse_ts(text)
        for line in text.splitlines():
            stripped = line.lstrip('# ').strip()
            verdict, _, formula = stripped.partition(':')
            if line.startswith('#') and verdict in _VERDICTS:
                examples.append(Example(path.name, system, parse(formula.strip()),
                                        verdict == 'satisfied'))
    return examples


def corpus_ids(examples):
    return [str(example) for example in examples]
