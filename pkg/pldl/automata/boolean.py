"""
Positive Boolean combinations of automaton states, the transition targets of
alternating automata.

Transition functions are stored as *templates*: positive Boolean formulas
whose leaves may also be :class:`Guard` s over the current letter. A template
is turned into a plain positive Boolean formula by :func:`instantiate`.

>>> from pldl.formula.tree import PVar
>>> b = disj(conj(Guard(PVar('p')), StateRef('q1')), StateRef('q2'))
>>> to_text(instantiate(b, frozenset({'p'})))
'(q1 | q2)'
>>> minimal_models(instantiate(b, frozenset()))
[frozenset({'q2'})]
"""
from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, Iterable, List, Set

from pldl.formula.printer import print_prop
from pldl.formula.tree import PropFormula


class PositiveBool:
    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class BTrue(PositiveBool):
    pass


@dataclass(frozen=True)
class BFalse(PositiveBool):
    pass


@dataclass(frozen=True)
class StateRef(PositiveBool):
    state: str


@dataclass(frozen=True)
class Guard(PositiveBool):
    formula: PropFormula


@dataclass(frozen=True)
class Conj(PositiveBool):
    args: FrozenSet[PositiveBool]


@dataclass(frozen=True)
class Disj(PositiveBool):
    args: FrozenSet[PositiveBool]


TRUE = BTrue()
FALSE = BFalse()


def conj(*args: PositiveBool) -> PositiveBool:
    operands: Set[PositiveBool] = set()
    for arg in args:
        if arg == FALSE:
            return FALSE
        if arg == TRUE:
            continue
        if isinstance(arg, Conj):
            operands |= arg.args
        else:
            operands.add(arg)
    if not operands:
        return TRUE
    if len(operands) == 1:
        return next(iter(operands))
    return Conj(frozenset(operands))


def disj(*args: PositiveBool) -> PositiveBool:
    operands: Set[PositiveBool] = set()
    for arg in args:
        if arg == TRUE:
            return TRUE
        if arg == FALSE:
            continue
        if isinstance(arg, Disj):
            operands |= arg.args
        else:
            operands.add(arg)
    if not operands:
        return FALSE
    if len(operands) == 1:
        return next(iter(operands))
    return Disj(frozenset(operands))


def big_conj(args: Iterable[PositiveBool]) -> PositiveBool:
    return conj(*args)


def big_disj(args: Iterable[PositiveBool]) -> PositiveBool:
    return disj(*args)


def instantiate(template: PositiveBool, letter: FrozenSet[str]) -> PositiveBool:
    """Evaluates all guards of ``template`` on ``letter``."""
    if isinstance(template, Guard):
        return TRUE if template.formula.evaluate(letter) else FALSE
    if isinstance(template, Conj):
        return conj(*(instantiate(arg, letter) for arg in template.args))
    if isinstance(template, Disj):
        return disj(*(instantiate(arg, letter) for arg in template.args))
    return template


def substitute(formula: PositiveBool, true_states=(), false_states=()) -> PositiveBool:
    """Replaces references to the given states by constants."""
    if isinstance(formula, StateRef):
        if formula.state in true_states:
            return TRUE
        if formula.state in false_states:
            return FALSE
        return formula
    if isinstance(formula, Conj):
        return conj(*(substitute(a, true_states, false_states) for a in formula.args))
    if isinstance(formula, Disj):
        return disj(*(substitute(a, true_states, false_states) for a in formula.args))
    return formula


def states_of(formula: PositiveBool) -> Set[str]:
    if isinstance(formula, StateRef):
        return {formula.state}
    if isinstance(formula, (Conj, Disj)):
        return set().union(*(states_of(arg) for arg in formula.args))
    return set()


def guards_of(formula: PositiveBool) -> Set[PropFormula]:
    if isinstance(formula, Guard):
        return {formula.formula}
    if isinstance(formula, (Conj, Disj)):
        return set().union(*(guards_of(arg) for arg in formula.args))
    return set()


def minimize(models: Iterable[FrozenSet[str]]) -> List[FrozenSet[str]]:
    """Removes duplicates and supersets of other models."""
    result: List[FrozenSet[str]] = []
    for model in sorted(set(models), key=lambda m: (len(m), sorted(m))):
        if not any(kept <= model for kept in result):
            result.append(model)
    return result


def minimal_models(formula: PositiveBool) -> List[FrozenSet[str]]:
    """
    The subset-minimal sets of states satisfying ``formula``, which must not
    contain guards anymore. An unsatisfiable formula has no models, ``TRUE``
    has the single model ``{}``.
    """
    if formula == TRUE:
        return [frozenset()]
    if formula == FALSE:
        return []
    if isinstance(formula, StateRef):
        return [frozenset((formula.state,))]
    if isinstance(formula, Disj):
        return minimize(m for arg in formula.args for m in minimal_models(arg))
    if isinstance(formula, Conj):
        models = [frozenset()]
        for arg in formula.args:
            models = minimize(a | b for a, b in product(models, minimal_models(arg)))
            if not models:
                break
        return models
    raise TypeError('guards must be instantiated first: %s' % formula)


def is_satisfied_by(formula: PositiveBool, states: FrozenSet[str]) -> bool:
    if formula == TRUE:
        return True
    if formula == FALSE:
        return False
    if isinstance(formula, StateRef):
        return formula.state in states
    if isinstance(formula, Conj):
        return all(is_satisfied_by(arg, states) for arg in formula.args)
    if isinstance(formula, Disj):
        return any(is_satisfied_by(arg, states) for arg in formula.args)
    raise TypeError(formula)


def to_text(formula: PositiveBool) -> str:
    """A deterministic rendering, operands sorted by their text."""
    if formula == TRUE:
        return 'tt'
    if formula == FALSE:
        return 'ff'
    if isinstance(formula, StateRef):
        return formula.state
    if isinstance(formula, Guard):
        return '{%s}' % print_prop(formula.formula)
    operator = ' & ' if isinstance(formula, Conj) else ' | '
    return '(%s)' % operator.join(sorted(to_text(arg) for arg in formula.args))
