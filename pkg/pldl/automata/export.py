"""
Text and DOT renderings of the automata. The text formats are line based
and sorted, so they are stable enough for golden files::

    aba states=3 initial=q accepting=acc
    trans acc tt acc
    trans q !p rej
    trans q p acc
    trans rej tt rej
"""
from typing import Dict, Iterable, List, Sequence, Tuple

from pldl.automata import boolean
from pldl.common import all_letters, format_set, sort_key
from pldl.formula.printer import print_prop
from pldl.formula.tree import PVar, PNot, PAnd, POr, TT, FF, PropFormula


def letters_guard(letters: Sequence[frozenset], alphabet: Iterable[str]) -> PropFormula:
    """A propositional formula that holds exactly for ``letters``."""
    alphabet = sorted(alphabet)
    if len(letters) == 2 ** len(alphabet):
        return TT
    if not letters:
        return FF
    guard = None
    for letter in sorted(letters, key=sort_key):
        minterm = None
        for prop in alphabet:
            literal = PVar(prop) if prop in letter else PNot(PVar(prop))
            minterm = literal if minterm is None else PAnd(minterm, literal)
        minterm = TT if minterm is None else minterm
        guard = minterm if guard is None else POr(guard, minterm)
    return guard


def _group(letters, function) -> List[Tuple[List[frozenset], object]]:
    groups: Dict[object, List[frozenset]] = {}
    for letter in letters:
        groups.setdefault(function(letter), []).append(letter)
    return list(groups.items())


def aba_transitions(aba) -> List[Tuple[str, str, boolean.PositiveBool]]:
    result = []
    letters = all_letters(aba.alphabet)
    for state in sorted(aba.reachable_states()):
        for target, group in _group(letters, lambda a: aba.delta(state, a)):
            guard = print_prop(letters_guard(group, aba.alphabet)).replace(' ', '')
            result.append((state, guard, target))
    return sorted(result, key=lambda t: (t[0], t[1], boolean.to_text(t[2])))


def aba_to_text(aba) -> str:
    states = aba.reachable_states()
    lines = ['aba states=%s initial=%s accepting=%s' % (
        len(states), aba.initial,
        ','.join(sorted(s for s in states if aba.is_accepting(s))),
    )]
    for state, guard, target in aba_transitions(aba):
        lines.append('trans %s %s %s' % (state, guard, boolean.to_text(target)))
    return '\n'.join(lines)


def aba_to_dot(aba) -> str:
    lines = ['digraph aba {', '  rankdir=LR;', '  init [shape=point];']
    for state in sorted(aba.reachable_states()):
        shape = 'doublecircle' if aba.is_accepting(state) else 'circle'
        lines.append('  "%s" [shape=%s];' % (state, shape))
    lines.append('  init -> "%s";' % aba.initial)
    for state, guard, target in aba_transitions(aba):
        for successor in sorted(boolean.states_of(target)):
            lines.append('  "%s" -> "%s" [label="%s: %s"];' % (
                state, successor, guard, boolean.to_text(target)))
    lines.append('}')
    return '\n'.join(lines)


def _numbered(states):
    return {state: i for i, state in enumerate(sorted(states, key=sort_key))}


def nba_transitions(nba) -> List[Tuple[int, str, int]]:
    numbers = _numbered(nba.states())
    letters = nba.letters()
    result = []
    for state, number in numbers.items():
        for target, group in _group(letters, lambda a: nba.successors(state, a)):
            for successor in target:
                guard = print_prop(letters_guard(group, nba.alphabet))
                result.append((number, guard.replace(' ', ''), numbers[successor]))
    return sorted(result)


def nba_to_text(nba) -> str:
    numbers = _numbered(nba.states())
    lines = ['nba states=%s initial=%s accepting=%s' % (
        len(numbers), numbers[nba.initial],
        ','.join(str(numbers[s]) for s in numbers if nba.is_accepting(s)),
    )]
    for state, number in numbers.items():
        lines.append('state %s %s' % (number, state))
    for source, guard, target in nba_transitions(nba):
        lines.append('trans %s %s %s' % (source, guard, target))
    return '\n'.join(lines)


def nba_to_dot(nba) -> str:
    numbers = _numbered(nba.states())
    lines = ['digraph nba {', '  rankdir=LR;', '  init [shape=point];']
    for state, number in numbers.items():
        shape = 'doublecircle' if nba.is_accepting(state) else 'circle'
        lines.append('  %s [shape=%s, tooltip="%s"];' % (number, shape, state))
    lines.append('  init -> %s;' % numbers[nba.initial])
    for source, guard, target in nba_transitions(nba):
        lines.append('  %s -> %s [label="%s"];' % (source, target, guard))
    lines.append('}')
    return '\n'.join(lines)


def dpa_to_text(dpa) -> str:
    letters = dpa.letters()
    lines = ['dpa states=%s initial=%s priorities=%s' % (
        len(dpa.states), dpa.initial, ','.join(str(p) for p in sorted(dpa.priority_set())),
    )]
    for state in dpa.states:
        lines.append('state %s priority=%s' % (state, dpa.priority(state)))
        for target, group in sorted(_group(letters, lambda a: dpa.step(state, a))):
            guard = print_prop(letters_guard(group, dpa.alphabet)).replace(' ', '')
            lines.append('trans %s %s %s' % (state, guard, target))
    return '\n'.join(lines)


def dpa_to_dot(dpa) -> str:
    letters = dpa.letters()
    lines = ['digraph dpa {', '  rankdir=LR;', '  init [shape=point];']
    for state in dpa.states:
        lines.append('  %s [label="%s/%s"];' % (state, state, dpa.priority(state)))
    lines.append('  init -> %s;' % dpa.initial)
    for state in dpa.states:
        for target, group in sorted(_group(letters, lambda a: dpa.step(state, a))):
            guard = print_prop(letters_guard(group, dpa.alphabet))
            lines.append('  %s -> %s [label="%s"];' % (state, target, guard))
    lines.append('}')
    return '\n'.join(lines)


def transducer_to_text(transducer) -> str:
    lines = []
    for state in transducer.states:
        lines.append('state %s out=%s' % (state, format_set(transducer.output(state))))
    for state in transducer.states:
        for letter in transducer.input_letters():
            lines.append('on %s %s -> %s' % (state, format_set(letter),
                                             transducer.step(state, letter)))
    return '\n'.join(lines)


def transducer_to_dot(transducer) -> str:
    lines = ['digraph transducer {', '  rankdir=LR;', '  init [shape=point];']
    for state in transducer.states:
        lines.append('  %s [label="%s\\n%s"];' % (
            state, state, format_set(transducer.output(state))))
    lines.append('  init -> %s;' % transducer.initial)
    for state in transducer.states:
        for letter in transducer.input_letters():
            lines.append('  %s -> %s [label="%s"];' % (
                state, transducer.step(state, letter), format_set(letter)))
    lines.append('}')
    return '\n'.join(lines)
