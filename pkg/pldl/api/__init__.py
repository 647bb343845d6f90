"""
The API is centered around :class:`Specification`, a parsed PLDL formula
with methods for everything |pldl| can do with it.

The sizes of the intermediate automata and the timings of each stage are
reported through :func:`set_debug_function`.
"""
from pathlib import Path
from typing import Iterable, Optional, Union

# Has to be loaded before the formula modules, which import it.
from pldl.api import exceptions  # noqa: F401
from pldl import debug
from pldl.automata.aba import ABA, build_aba
from pldl.automata.nba import NBA, remove_alternation
from pldl.formula import tree
from pldl.formula.parser import parse
from pldl.formula.printer import pretty_print
from pldl.formula.transform import negate, size, var_sets, check_well_formed, \
    eliminate_boxes, propositions
from pldl.model_checking.checker import model_check, check_valuation, tighten, satisfiable
from pldl.model_checking.system import TransitionSystem, parse_ts
from pldl.semantics.oracle import evaluate
from pldl.semantics.word import LassoWord, Valuation, parse_word
from pldl.synthesis.realize import realize, realize_at


def _word(word: Union[str, LassoWord]) -> LassoWord:
    return parse_word(word) if isinstance(word, str) else word


def _valuation(valuation: Union[None, str, Valuation]) -> Optional[Valuation]:
    return Valuation.parse(valuation) if isinstance(valuation, str) else valuation


def _system(system: Union[str, TransitionSystem]) -> TransitionSystem:
    return parse_ts(system) if isinstance(system, str) else system


class Specification:
    """
    A Specification is a PLDL formula, given either as ``code`` or read from
    ``path``. Words, valuations and systems may be passed as objects or in
    their text formats.

    >>> spec = Specification('[tt*](req -> <tt*>{<=x} resp)')
    >>> sorted(spec.var_sets.diamonds)
    ['x']
    >>> spec.evaluate('{req} $ {resp}', 'x=1')
    True

    :raises FormulaSyntaxError: if the formula does not parse.
    """
    def __init__(self, code: Optional[str] = None, path: Union[str, Path, None] = None):
        if code is None:
            if path is None:
                raise TypeError('Specification needs code or a path')
            code = Path(path).read_text()
        self.path = None if path is None else Path(path)
        self._code = code
        self.formula: tree.Formula = parse(code)

    @property
    def size(self) -> int:
        return size(self.formula)

    @property
    def var_sets(self):
        return var_sets(self.formula)

    @property
    def propositions(self):
        return propositions(self.formula)

    def is_well_formed(self) -> bool:
        return check_well_formed(self.formula)

    def negate(self) -> 'Specification':
        return Specification(pretty_print(negate(self.formula)))

    def evaluate(self, word, valuation=None, position: int = 0) -> bool:
        return evaluate(self.formula, _word(word), _valuation(valuation), position)

    def compile(self, valuation=None) -> ABA:
        """
        The alternating automaton of the formula. Parameterized boxes are
        eliminated first; the remaining bounds need a ``valuation``.
        """
        valuation = _valuation(valuation)
        formula = self.formula if valuation is not None else eliminate_boxes(self.formula)
        return build_aba(formula, valuation)

    def compile_nba(self, valuation=None) -> NBA:
        return remove_alternation(self.compile(valuation))

    def model_check(self, system):
        return model_check(_system(system), self.formula)

    def check_valuation(self, system, valuation) -> bool:
        return check_valuation(_system(system), self.formula, _valuation(valuation))

    def tighten(self, system, valuation) -> Valuation:
        return tighten(_system(system), self.formula, _valuation(valuation))

    def satisfiable(self):
        return satisfiable(self.formula)

    def realize(self, inputs: Iterable[str], outputs: Iterable[str], valuation=None):
        if valuation is None:
            return realize(self.formula, inputs, outputs)
        return realize_at(self.formula, inputs, outputs, _valuation(valuation))

    def __str__(self):
        return pretty_print(self.formula)

    def __repr__(self):
        return '<%s: %r>' % (self.__class__.__name__, str(self))


def set_debug_function(func_cb=debug.print_to_stdout, warnings=True,
                       notices=True, speed=True):
    """
    Installs ``func_cb(color, text)`` as receiver of the pipeline's debug
    output. Called without arguments, everything is printed to stdout;
    ``set_debug_function(None)`` silences the channel again.

    :param warnings: Report warnings, e.g. unused propositions.
    :param notices: Report stages and automaton sizes.
    :param speed: Report timings.
    """
    debug.debug_function = func_cb
    debug.enable_warning = warnings
    debug.enable_notice = notices
    debug.enable_speed = speed
