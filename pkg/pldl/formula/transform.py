"""
Purely syntactic operations on formulas: negation, subformulas, size,
variables, box elimination and the alternating color transformation.
"""
from typing import FrozenSet, Iterator, NamedTuple, Optional, Set

from pldl.api.exceptions import FragmentError
from pldl.formula import tree
from pldl.formula.tree import (
    Atom, NegAtom, And, Or, Diamond, Box, Prop, Test, Choice, Seq, Star, Var, CP,
)


class VarSets(NamedTuple):
    diamonds: FrozenSet[str]
    boxes: FrozenSet[str]


def negate(formula: tree.Formula) -> tree.Formula:
    """
    The negation normal form of ``!formula``. Bounds are kept, so the dual of
    ``<r>{<=x}p`` is ``[r]{<=x}!p``.
    """
    if isinstance(formula, Atom):
        return NegAtom(formula.prop)
    if isinstance(formula, NegAtom):
        return Atom(formula.prop)
    if isinstance(formula, And):
        return Or(negate(formula.lhs), negate(formula.rhs))
    if isinstance(formula, Or):
        return And(negate(formula.lhs), negate(formula.rhs))
    if isinstance(formula, Diamond):
        return Box(formula.regex, negate(formula.body), formula.bound)
    if isinstance(formula, Box):
        return Diamond(formula.regex, negate(formula.body), formula.bound)
    raise TypeError(formula)


def iter_subformulas(formula: tree.Formula) -> Iterator[tree.Formula]:
    """
    Yields every formula occurrence, test bodies included, in pre-order.
    """
    stack = [formula]
    while stack:
        current = stack.pop()
        yield current
        if isinstance(current, (And, Or)):
            stack.append(current.rhs)
            stack.append(current.lhs)
        elif isinstance(current, (Diamond, Box)):
            stack.append(current.body)
            stack.extend(reversed(list(iter_tests(current.regex))))


def iter_tests(regex: tree.Regex) -> Iterator[tree.Formula]:
    """Yields the bodies of the top-level tests of ``regex`` from left to right."""
    if isinstance(regex, Test):
        yield regex.body
    elif isinstance(regex, (Choice, Seq)):
        yield from iter_tests(regex.lhs)
        yield from iter_tests(regex.rhs)
    elif isinstance(regex, Star):
        yield from iter_tests(regex.body)


def iter_props(regex: tree.Regex) -> Iterator[tree.PropFormula]:
    if isinstance(regex, Prop):
        yield regex.formula
    elif isinstance(regex, (Choice, Seq)):
        yield from iter_props(regex.lhs)
        yield from iter_props(regex.rhs)
    elif isinstance(regex, Star):
        yield from iter_props(regex.body)


def closure(formula: tree.Formula) -> Set[tree.Formula]:
    """
    The set of subformulas, including the bodies of tests. Regular
    expressions themselves are not part of it.
    """
    return set(iter_subformulas(formula))


def regex_length(regex: tree.Regex) -> int:
    """
    Atoms plus operators. A test counts twice (the atom and its ``?``); the
    test body is counted as a subformula, not here.
    """
    if isinstance(regex, Prop):
        return 1
    if isinstance(regex, Test):
        return 2
    if isinstance(regex, (Choice, Seq)):
        return 1 + regex_length(regex.lhs) + regex_length(regex.rhs)
    if isinstance(regex, Star):
        return 1 + regex_length(regex.body)
    raise TypeError(regex)


def size(formula: tree.Formula) -> int:
    """
    The number of distinct subformulas plus the lengths of the regular
    expressions of all modal occurrences.

    >>> from pldl.formula.parser import parse
    >>> size(parse('<p?;q>{<=x} r'))
    7
    >>> size(parse('<a>p & <a>p'))
    5
    """
    return len(closure(formula)) + sum(
        regex_length(sub.regex) for sub in iter_subformulas(formula)
        if isinstance(sub, (Diamond, Box))
    )


def var_sets(formula: tree.Formula) -> VarSets:
    diamonds = set()
    boxes = set()
    for sub in iter_subformulas(formula):
        if isinstance(sub, Diamond) and isinstance(sub.bound, Var):
            diamonds.add(sub.bound.name)
        elif isinstance(sub, Box) and isinstance(sub.bound, Var):
            boxes.add(sub.bound.name)
    return VarSets(frozenset(diamonds), frozenset(boxes))


def variables(formula: tree.Formula) -> FrozenSet[str]:
    diamonds, boxes = var_sets(formula)
    return diamonds | boxes


def check_well_formed(formula: tree.Formula) -> bool:
    diamonds, boxes = var_sets(formula)
    return not (diamonds & boxes)


def propositions(formula: tree.Formula) -> FrozenSet[str]:
    """
    All propositions of ``formula`` (in atoms and in regular expressions),
    without the internal truth proposition.
    """
    result: Set[str] = set()
    for sub in iter_subformulas(formula):
        if isinstance(sub, (Atom, NegAtom)):
            result.add(sub.prop)
        elif isinstance(sub, (Diamond, Box)):
            for prop in iter_props(sub.regex):
                result |= prop.props()
    result.discard(tree.TRUE_PROP)
    return frozenset(result)


def bounds(formula: tree.Formula) -> Set[tree.Bound]:
    return {sub.bound for sub in iter_subformulas(formula)
            if isinstance(sub, (Diamond, Box)) and sub.bound is not None}


def check_fragment(formula: tree.Formula) -> None:
    """
    Changepoint bounds only exist after the color transformation, so they
    never share a formula with variable bounds.
    """
    found = bounds(formula)
    if CP in found and any(isinstance(b, Var) for b in found):
        raise FragmentError('changepoint bounds and variable bounds cannot be mixed')


def is_variable_free(formula: tree.Formula) -> bool:
    return not variables(formula)


def map_tests(regex: tree.Regex, function) -> tree.Regex:
    """Rebuilds ``regex`` with ``function`` applied to every test body."""
    if isinstance(regex, Prop):
        return regex
    if isinstance(regex, Test):
        return Test(function(regex.body))
    if isinstance(regex, Choice):
        return Choice(map_tests(regex.lhs, function), map_tests(regex.rhs, function))
    if isinstance(regex, Seq):
        return Seq(map_tests(regex.lhs, function), map_tests(regex.rhs, function))
    if isinstance(regex, Star):
        return Star(map_tests(regex.body, function))
    raise TypeError(regex)


def _diagonal(regex: tree.Regex) -> Optional[tree.Formula]:
    """
    A formula that holds at n iff (n, n) is in the match relation of
    ``regex``, or None if the relation never contains a diagonal pair.
    """
    if isinstance(regex, Prop):
        return None
    if isinstance(regex, Test):
        return regex.body
    if isinstance(regex, Star):
        return tree.TRUE
    lhs = _diagonal(regex.lhs)
    rhs = _diagonal(regex.rhs)
    if isinstance(regex, Seq):
        if lhs is None or rhs is None:
            return None
        return And(lhs, rhs)
    if isinstance(regex, Choice):
        if lhs is None:
            return rhs
        if rhs is None:
            return lhs
        return Or(lhs, rhs)
    raise TypeError(regex)


def diagonal_test(regex: tree.Regex) -> tree.Regex:
    """
    The single test whose match relation is the diagonal part of the match
    relation of ``regex``: stars become ``tt?``, sequences with a
    letter-consuming side become ``ff?`` and choices of tests become a test
    of the disjunction.
    """
    body = _diagonal(regex)
    return Test(tree.FALSE if body is None else body)


def eliminate_boxes(formula: tree.Formula) -> tree.Formula:
    """
    Replaces every parameterized box ``[r]{<=y}psi`` by the unparameterized
    ``[r']psi`` where ``r'`` only matches the empty infix, i.e. the box at
    ``y = 0``. Satisfaction with respect to some valuation is unchanged.
    """
    if isinstance(formula, (Atom, NegAtom)):
        return formula
    if isinstance(formula, And):
        return And(eliminate_boxes(formula.lhs), eliminate_boxes(formula.rhs))
    if isinstance(formula, Or):
        return Or(eliminate_boxes(formula.lhs), eliminate_boxes(formula.rhs))
    regex = map_tests(formula.regex, eliminate_boxes)
    body = eliminate_boxes(formula.body)
    if isinstance(formula, Box):
        if isinstance(formula.bound, Var):
            return Box(diagonal_test(regex), body, None)
        return Box(regex, body, formula.bound)
    return Diamond(regex, body, formula.bound)


def relativize(formula: tree.Formula) -> tree.Formula:
    """
    Replaces every parameterized diamond by its changepoint-bounded
    counterpart, inside tests as well.

    :raises FragmentError: if the formula contains a parameterized box.
    """
    if isinstance(formula, (Atom, NegAtom)):
        return formula
    if isinstance(formula, And):
        return And(relativize(formula.lhs), relativize(formula.rhs))
    if isinstance(formula, Or):
        return Or(relativize(formula.lhs), relativize(formula.rhs))
    regex = map_tests(formula.regex, relativize)
    body = relativize(formula.body)
    if isinstance(formula, Box):
        if isinstance(formula.bound, Var):
            raise FragmentError('parameterized box %s; eliminate boxes first' % formula)
        return Box(regex, body, formula.bound)
    bound = CP if isinstance(formula.bound, Var) else formula.bound
    return Diamond(regex, body, bound)


def theta_infinitely(literal: tree.Formula) -> tree.Formula:
    """``[tt*]<tt*>literal``: the literal holds infinitely often."""
    return Box(tree.ANY_STAR, Diamond(tree.ANY_STAR, literal))


def color_theta() -> tree.Formula:
    """Infinitely many positions with and without the color proposition."""
    return And(theta_infinitely(Atom(tree.COLOR_PROP)),
               theta_infinitely(NegAtom(tree.COLOR_PROP)))


def color_transform(formula: tree.Formula) -> tree.Formula:
    """
    The formula over the colored alphabet whose models are the colorings
    with infinitely many changepoints satisfying the relativized formula.
    """
    theta = color_theta()
    return And(And(relativize(formula), theta.lhs), theta.rhs)


def count_parameterized_boxes(formula: tree.Formula) -> int:
    return sum(1 for sub in iter_subformulas(formula)
               if isinstance(sub, Box) and isinstance(sub.bound, Var))
