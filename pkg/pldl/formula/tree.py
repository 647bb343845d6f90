"""
The abstract syntax of PLDL. Formulas are kept in negation normal form: the
only negation is :class:`NegAtom`. All nodes are frozen dataclasses, so they
compare structurally and can be used as dictionary keys.

There are three layers:

- :class:`PropFormula`: Boolean combinations of propositions. They label the
  letter-consuming atoms of regular expressions.
- :class:`Regex`: regular expressions whose atoms are propositional formulas
  (consuming one letter) and tests (consuming nothing).
- :class:`Formula`: the temporal formulas. Diamonds and boxes carry a bound,
  which is ``None`` (unbounded), a :class:`Var` or :data:`CP`.

``tt`` and ``ff`` in formula position are spelled over the internal
proposition :data:`TRUE_PROP`, which never occurs in a letter:

>>> TRUE
Or(lhs=Atom(prop='_tt'), rhs=NegAtom(prop='_tt'))
"""
from dataclasses import dataclass
from typing import FrozenSet, Optional, Union

TRUE_PROP = '_tt'
COLOR_PROP = '_cp'
RESERVED = frozenset({TRUE_PROP, COLOR_PROP})


class PropFormula:
    """Base class of propositional formulas."""

    def evaluate(self, letter: FrozenSet[str]) -> bool:
        raise NotImplementedError

    def props(self) -> FrozenSet[str]:
        raise NotImplementedError

    def __str__(self):
        from pldl.formula.printer import print_prop
        return print_prop(self)


@dataclass(frozen=True)
class PTrue(PropFormula):
    def evaluate(self, letter):
        return True

    def props(self):
        return frozenset()


@dataclass(frozen=True)
class PFalse(PropFormula):
    def evaluate(self, letter):
        return False

    def props(self):
        return frozenset()


@dataclass(frozen=True)
class PVar(PropFormula):
    name: str

    def evaluate(self, letter):
        return self.name in letter

    def props(self):
        return frozenset((self.name,))


@dataclass(frozen=True)
class PNot(PropFormula):
    arg: PropFormula

    def evaluate(self, letter):
        return not self.arg.evaluate(letter)

    def props(self):
        return self.arg.props()


@dataclass(frozen=True)
class PAnd(PropFormula):
    lhs: PropFormula
    rhs: PropFormula

    def evaluate(self, letter):
        return self.lhs.evaluate(letter) and self.rhs.evaluate(letter)

    def props(self):
        return self.lhs.props() | self.rhs.props()


@dataclass(frozen=True)
class POr(PropFormula):
    lhs: PropFormula
    rhs: PropFormula

    def evaluate(self, letter):
        return self.lhs.evaluate(letter) or self.rhs.evaluate(letter)

    def props(self):
        return self.lhs.props() | self.rhs.props()


TT = PTrue()
FF = PFalse()


def prop_and(lhs: PropFormula, rhs: PropFormula) -> PropFormula:
    """Conjunction that folds the constants away."""
    if lhs == TT:
        return rhs
    if rhs == TT:
        return lhs
    if lhs == FF or rhs == FF:
        return FF
    return PAnd(lhs, rhs)


def prop_not(arg: PropFormula) -> PropFormula:
    if arg == TT:
        return FF
    if arg == FF:
        return TT
    if isinstance(arg, PNot):
        return arg.arg
    return PNot(arg)


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Changepoint:
    pass


CP = Changepoint()

Bound = Optional[Union[Var, Changepoint]]


class Formula:
    """Base class of temporal formulas."""

    def __str__(self):
        from pldl.formula.printer import pretty_print
        return pretty_print(self)


@dataclass(frozen=True)
class Atom(Formula):
    prop: str


@dataclass(frozen=True)
class NegAtom(Formula):
    prop: str


@dataclass(frozen=True)
class And(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Or(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Diamond(Formula):
    regex: 'Regex'
    body: Formula
    bound: Bound = None


@dataclass(frozen=True)
class Box(Formula):
    regex: 'Regex'
    body: Formula
    bound: Bound = None


TRUE = Or(Atom(TRUE_PROP), NegAtom(TRUE_PROP))
FALSE = And(NegAtom(TRUE_PROP), Atom(TRUE_PROP))


class Regex:
    """Base class of regular expressions with tests."""

    def __str__(self):
        from pldl.formula.printer import print_regex
        return print_regex(self)


@dataclass(frozen=True)
class Prop(Regex):
    formula: PropFormula


@dataclass(frozen=True)
class Test(Regex):
    body: Formula


@dataclass(frozen=True)
class Choice(Regex):
    lhs: Regex
    rhs: Regex


@dataclass(frozen=True)
class Seq(Regex):
    lhs: Regex
    rhs: Regex


@dataclass(frozen=True)
class Star(Regex):
    body: Regex


ANY = Prop(TT)
ANY_STAR = Star(ANY)


def is_temporal(formula: Formula) -> bool:
    return isinstance(formula, (Diamond, Box))
