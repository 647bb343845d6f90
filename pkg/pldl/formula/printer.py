"""
Prints formulas in the concrete syntax of :mod:`pldl.formula.parser`. The
output parses back to the same tree.

>>> from pldl.formula.parser import parse
>>> pretty_print(parse('G (p -> X q)'))
'[tt*](!p | <tt>q)'
"""
from pldl.formula import tree

_DISJ, _CONJ, _UNARY = range(3)
_CHOICE, _SEQ, _STAR = range(3)


def pretty_print(formula: tree.Formula) -> str:
    return _formula(formula, _DISJ)


def _formula(formula, level):
    if formula == tree.TRUE:
        return 'tt'
    if formula == tree.FALSE:
        return 'ff'
    if isinstance(formula, tree.Atom):
        return formula.prop
    if isinstance(formula, tree.NegAtom):
        return '!' + formula.prop
    if isinstance(formula, tree.Or):
        text = '%s | %s' % (_formula(formula.lhs, _DISJ), _formula(formula.rhs, _CONJ))
        return _parenthesize(text, level > _DISJ)
    if isinstance(formula, tree.And):
        text = '%s & %s' % (_formula(formula.lhs, _CONJ), _formula(formula.rhs, _UNARY))
        return _parenthesize(text, level > _CONJ)
    if isinstance(formula, tree.Diamond):
        opening, closing = '<', '>'
    else:
        opening, closing = '[', ']'
    return '%s%s%s%s%s' % (
        opening,
        print_regex(formula.regex),
        closing,
        print_bound(formula.bound),
        _formula(formula.body, _UNARY),
    )


def print_bound(bound: tree.Bound) -> str:
    if bound is None:
        return ''
    if bound == tree.CP:
        return '{cp}'
    return '{<=%s}' % bound.name


def print_regex(regex: tree.Regex) -> str:
    return _regex(regex, _CHOICE)


def _regex(regex, level):
    if isinstance(regex, tree.Prop):
        formula = regex.formula
        text = print_prop(formula)
        compound = isinstance(formula, (tree.PAnd, tree.POr))
        return _parenthesize(text, compound)
    if isinstance(regex, tree.Test):
        body = regex.body
        text = _formula(body, _UNARY)
        return text + '?'
    if isinstance(regex, tree.Choice):
        text = '%s + %s' % (_regex(regex.lhs, _CHOICE), _regex(regex.rhs, _SEQ))
        return _parenthesize(text, level > _CHOICE)
    if isinstance(regex, tree.Seq):
        text = '%s;%s' % (_regex(regex.lhs, _SEQ), _regex(regex.rhs, _STAR))
        return _parenthesize(text, level > _SEQ)
    if isinstance(regex, tree.Star):
        return _regex(regex.body, _STAR) + '*'
    raise TypeError(regex)


def print_prop(formula: tree.PropFormula) -> str:
    return _prop(formula, _DISJ)


def _prop(formula, level):
    if isinstance(formula, tree.PTrue):
        return 'tt'
    if isinstance(formula, tree.PFalse):
        return 'ff'
    if isinstance(formula, tree.PVar):
        return formula.name
    if isinstance(formula, tree.PNot):
        return '!' + _prop(formula.arg, _UNARY)
    if isinstance(formula, tree.POr):
        text = '%s | %s' % (_prop(formula.lhs, _DISJ), _prop(formula.rhs, _CONJ))
        return _parenthesize(text, level > _DISJ)
    if isinstance(formula, tree.PAnd):
        text = '%s & %s' % (_prop(formula.lhs, _CONJ), _prop(formula.rhs, _UNARY))
        return _parenthesize(text, level > _CONJ)
    raise TypeError(formula)


def _parenthesize(text, condition):
    return '(%s)' % text if condition else text
