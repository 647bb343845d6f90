"""
The reference semantics: direct evaluation of formulas on lasso words. It is
slow, but obviously correct, and every automaton construction is tested
against it.

The match relation of a regular expression is computed as a post image over
configurations ``(position, tag)``. Positions are canonical, tags keep track
of the bound of the operator: the number of consumed letters for variable
bounds, the last color and the number of color changes for changepoint
bounds.

>>> from pldl.formula.parser import parse
>>> from pldl.semantics.word import parse_word, Valuation
>>> w = parse_word('{}{} $ {p}')
>>> evaluate(parse('F{<=x} p'), w, Valuation({'x': 2}))
True
>>> evaluate(parse('F{<=x} p'), w, Valuation({'x': 1}))
False
"""
from typing import FrozenSet, Optional, Set, Tuple

from pldl import debug
from pldl.formula import tree
from pldl.formula.tree import Atom, NegAtom, And, Or, Diamond, Box, Prop, Test, \
    Choice, Seq, Star, Var, CP
from pldl.semantics.word import LassoWord, Valuation, is_colored


class _Plain:
    initial = None

    def step(self, tag, letter):
        return None, True


class _Counting:
    initial = 0

    def __init__(self, limit):
        self.limit = limit

    def step(self, tag, letter):
        return tag + 1, tag + 1 <= self.limit


class _ColorChanges:
    """At most one color change inside the consumed infix."""
    initial = (None, 0)

    def step(self, tag, letter):
        last, changes = tag
        color = is_colored(letter)
        if last is None or last == color:
            return (color, changes), True
        return (color, changes + 1), changes == 0


class Evaluator:
    """
    Evaluates formulas on one lasso word under one valuation. Results are
    memoized per instance.
    """
    def __init__(self, word: LassoWord, valuation: Optional[Valuation] = None):
        self.word = word
        self.valuation = Valuation() if valuation is None else valuation
        self._memo = {}
        self._endpoint_memo = {}

    def evaluate(self, formula: tree.Formula, position: int = 0) -> bool:
        position = self.word.canonical(position)
        key = formula, position
        try:
            return self._memo[key]
        except KeyError:
            pass
        result = self._evaluate(formula, position)
        self._memo[key] = result
        return result

    def _evaluate(self, formula, n):
        if isinstance(formula, Atom):
            return formula.prop in self.word.letter(n)
        if isinstance(formula, NegAtom):
            return formula.prop not in self.word.letter(n)
        if isinstance(formula, And):
            return self.evaluate(formula.lhs, n) and self.evaluate(formula.rhs, n)
        if isinstance(formula, Or):
            return self.evaluate(formula.lhs, n) or self.evaluate(formula.rhs, n)
        endpoints = self.endpoints(formula.regex, formula.bound, n)
        if isinstance(formula, Diamond):
            return any(self.evaluate(formula.body, m) for m in endpoints)
        if isinstance(formula, Box):
            return all(self.evaluate(formula.body, m) for m in endpoints)
        raise TypeError(formula)

    def _tracker(self, bound):
        if bound is None:
            return _Plain()
        if bound == CP:
            return _ColorChanges()
        if isinstance(bound, Var):
            return _Counting(self.valuation[bound.name])
        raise TypeError(bound)

    def endpoints(self, regex: tree.Regex, bound: tree.Bound, n: int) -> FrozenSet[int]:
        """
        The canonical positions ``m`` such that some ``(n, n + j)`` with
        canonical ``n + j == m`` is in the match relation of ``regex`` and
        ``j`` satisfies ``bound``.
        """
        key = regex, bound, n
        try:
            return self._endpoint_memo[key]
        except KeyError:
            pass
        tracker = self._tracker(bound)
        configs = self.post(regex, frozenset({(n, tracker.initial)}), tracker)
        result = frozenset(position for position, _ in configs)
        self._endpoint_memo[key] = result
        return result

    def post(self, regex, configs, tracker) -> FrozenSet[Tuple[int, object]]:
        if not configs:
            return configs
        if isinstance(regex, Prop):
            result = set()
            for position, tag in configs:
                letter = self.word.letter(position)
                if regex.formula.evaluate(letter):
                    new_tag, allowed = tracker.step(tag, letter)
                    if allowed:
                        result.add((self.word.successor(position), new_tag))
            return frozenset(result)
        if isinstance(regex, Test):
            return frozenset(c for c in configs if self.evaluate(regex.body, c[0]))
        if isinstance(regex, Choice):
            return self.post(regex.lhs, configs, tracker) | self.post(regex.rhs, configs, tracker)
        if isinstance(regex, Seq):
            return self.post(regex.rhs, self.post(regex.lhs, configs, tracker), tracker)
        if isinstance(regex, Star):
            result = set(configs)
            frontier = configs
            while frontier:
                frontier = self.post(regex.body, frontier, tracker) - result
                result |= frontier
            return frozenset(result)
        raise TypeError(regex)


def evaluate(formula: tree.Formula, word: LassoWord,
             valuation: Optional[Valuation] = None, position: int = 0) -> bool:
    """Decides ``(word, position, valuation) |= formula``."""
    return Evaluator(word, valuation).evaluate(formula, position)


def match_relation(regex: tree.Regex, word: LassoWord,
                   valuation: Optional[Valuation] = None,
                   horizon: Optional[int] = None) -> Set[Tuple[int, int]]:
    """
    The match relation of ``regex`` on ``word``.

    Without ``horizon`` the pairs ``(n, m)`` range over canonical positions.
    With ``horizon`` the result contains the absolute pairs ``(n, n + j)``
    for every canonical start ``n`` and every ``j <= horizon``.
    """
    evaluator = Evaluator(word, valuation)
    result = set()
    for n in word.positions():
        if horizon is None:
            for m in evaluator.endpoints(regex, None, n):
                result.add((n, m))
        else:
            tracker = _Counting(horizon)
            configs = evaluator.post(regex, frozenset({(n, tracker.initial)}), tracker)
            for _, count in configs:
                result.add((n, n + count))
    debug.dbg('match relation of %s: %s pairs', str(regex), len(result))
    return result
