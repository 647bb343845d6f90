"""
Model checking of transition systems against PLDL formulas.

The question is whether a system satisfies a formula with respect to *some*
valuation. Parameterized boxes are removed first (they can always be set to
0), then the remaining parameterized diamonds are relativized to
changepoint-bounded ones. The system violates the formula for every
valuation iff the product of the system with the automaton for the negated,
relativized formula has a pumpable fair path. Otherwise the valuation that
maps every diamond variable to ``2·|Q|·|S| + 1`` works.
"""
from typing import Dict, List, Optional, Tuple

import networkx as nx

from pldl import debug
from pldl import settings
from pldl.api.exceptions import CapExceeded, NotWellFormed
from pldl.automata.aba import build_aba
from pldl.automata.nba import NBA, remove_alternation, find_accepting_lasso, is_empty
from pldl.formula import tree
from pldl.formula.transform import negate, eliminate_boxes, relativize, color_theta, \
    color_transform, check_well_formed, var_sets, propositions
from pldl.model_checking.colored import ColoredBuchiGraph, pumpable_fair_path, pump
from pldl.model_checking.system import TransitionSystem
from pldl.semantics.word import LassoWord, Valuation, strip_color, block_lengths

_COLOR = frozenset({tree.COLOR_PROP})


def _require_well_formed(formula):
    if not check_well_formed(formula):
        diamonds, boxes = var_sets(formula)
        raise NotWellFormed('variables %s bound both diamonds and boxes'
                            % ', '.join(sorted(diamonds & boxes)))


def violation_nba(formula: tree.Formula) -> NBA:
    """
    The automaton for the colored words that violate the relativized,
    box-free formula and have infinitely many changepoints.
    """
    theta = color_theta()
    negated = negate(relativize(eliminate_boxes(formula)))
    target = tree.And(tree.And(negated, theta.lhs), theta.rhs)
    return remove_alternation(build_aba(target))


def build_product(nba: NBA, ts: TransitionSystem) -> ColoredBuchiGraph:
    """
    The colored Büchi graph over ``Q × S × {uncolored, colored}``. A vertex
    ``(q, s, c)`` reads the label of ``s`` plus the color ``c``.
    """
    states = nba.states()
    total = len(states) * len(ts) * 2
    if total > settings.max_product_vertices:
        raise CapExceeded('product', settings.max_product_vertices)
    graph = nx.DiGraph()
    colored = []
    fair = []
    for q in states:
        for s in ts.states:
            for c in (False, True):
                vertex = (q, s, c)
                graph.add_node(vertex)
                if c:
                    colored.append(vertex)
                if nba.is_accepting(q):
                    fair.append(vertex)
    for q, s, c in list(graph):
        letter = ts.label(s) | _COLOR if c else ts.label(s)
        for q_next in nba.successors(q, letter):
            for s_next in ts.successors(s):
                graph.add_edge((q, s, c), (q_next, s_next, False))
                graph.add_edge((q, s, c), (q_next, s_next, True))
    debug.size('product', len(graph), 'vertices')
    assert len(graph) == total
    return ColoredBuchiGraph(graph, (nba.initial, ts.initial, False), colored, fair)


class Satisfied:
    """
    The system satisfies the formula with respect to :attr:`valuation`.
    :attr:`bound` is the value used for the diamond variables.
    """
    holds = True

    def __init__(self, valuation: Valuation, bound: int):
        self.valuation = valuation
        self.bound = bound

    def __repr__(self):
        return '<%s: %s>' % (self.__class__.__name__, self.valuation)


class Violated:
    """
    The system violates the formula for every valuation. The witness is a
    pumpable lasso through the product; :meth:`counterexample` pumps it.
    """
    holds = False

    def __init__(self, system: TransitionSystem, graph: ColoredBuchiGraph,
                 path: Tuple[List, List], bound: int):
        self.system = system
        self.graph = graph
        self.path = path
        self.bound = bound

    def counterexample(self, k: Optional[int] = None) -> Tuple[List[str], List[str], LassoWord]:
        """
        A state lasso of the system whose trace refutes the formula for
        every valuation with diamond values up to ``k`` (default: the bound
        of a satisfying valuation).
        """
        if k is None:
            k = self.bound
        prefix, loop = pump(self.graph, self.path[0], self.path[1], k)
        state_prefix = [s for _, s, _ in prefix]
        state_loop = [s for _, s, _ in loop]
        return state_prefix, state_loop, self.system.trace(state_prefix, state_loop)

    def __repr__(self):
        return '<%s: %s $ %s>' % (self.__class__.__name__,
                                  ' '.join(s for _, s, _ in self.path[0]),
                                  ' '.join(s for _, s, _ in self.path[1]))


def model_check(ts: TransitionSystem, formula: tree.Formula):
    """
    Decides whether ``ts`` satisfies ``formula`` for some valuation.

    :raises NotWellFormed: if a variable bounds diamonds and boxes.
    :returns: :class:`Satisfied` or :class:`Violated`
    """
    _require_well_formed(formula)
    debug.reset_time()
    for prop in sorted(propositions(formula) - ts.propositions()):
        debug.warning('proposition %s labels no state of the system', prop)
    with debug.increase_indent_cm('model_check'):
        nba = violation_nba(formula)
        graph = build_product(nba, ts)
        debug.speed('product built')
        path = pumpable_fair_path(graph)
        debug.speed('pumpable path search')
    bound = 2 * len(nba) * len(ts) + 1
    if path is not None:
        return Violated(ts, graph, path, bound)
    diamonds, boxes = var_sets(formula)
    values: Dict[str, int] = {x: bound for x in diamonds}
    values.update({y: 0 for y in boxes})
    return Satisfied(Valuation(values), bound)


def plain_product(nba: NBA, ts: TransitionSystem) -> Tuple[nx.DiGraph, tuple]:
    """The uncolored product ``Q × S``, explored from the initial pair."""
    graph = nx.DiGraph()
    start = (nba.initial, ts.initial)
    graph.add_node(start)
    todo = [start]
    cap = settings.max_product_vertices
    while todo:
        q, s = node = todo.pop()
        for q_next in nba.successors(q, ts.label(s)):
            for s_next in ts.successors(s):
                target = (q_next, s_next)
                if target not in graph:
                    if len(graph) >= cap:
                        raise CapExceeded('product', cap)
                    todo.append(target)
                graph.add_edge(node, target)
    return graph, start


def violating_lasso(ts: TransitionSystem, formula: tree.Formula,
                    valuation: Optional[Valuation] = None) -> Optional[Tuple[List[str], List[str]]]:
    """
    A state lasso whose trace violates ``formula`` (with respect to
    ``valuation``), or None if every trace satisfies it.
    """
    nba = remove_alternation(build_aba(negate(formula), valuation))
    graph, start = plain_product(nba, ts)
    lasso = find_accepting_lasso(graph, start, lambda node: nba.is_accepting(node[0]))
    if lasso is None:
        return None
    prefix, cycle = lasso
    return [s for _, s in prefix], [s for _, s in cycle]


def check_valuation(ts: TransitionSystem, formula: tree.Formula, valuation: Valuation) -> bool:
    """
    Decides whether every trace of ``ts`` satisfies ``formula`` with respect
    to ``valuation``. Bounded operators are expanded with letter counters.

    :raises UnboundVariable: if ``valuation`` misses a variable.
    """
    _require_well_formed(formula)
    return violating_lasso(ts, formula, valuation) is None


def tighten(ts: TransitionSystem, formula: tree.Formula, valuation: Valuation) -> Valuation:
    """
    Lowers the diamond variables of a satisfying ``valuation`` one after the
    other by binary search. The result satisfies the formula, but is not
    necessarily optimal.
    """
    diamonds, _ = var_sets(formula)
    current = valuation
    for name in sorted(diamonds):
        low, high = 0, current[name]
        while low < high:
            middle = (low + high) // 2
            if check_valuation(ts, formula, current.updated({name: middle})):
                high = middle
            else:
                low = middle + 1
        current = current.updated({name: low})
        debug.dbg('tightened %s to %s', name, low)
    return current


def satisfiable(formula: tree.Formula) -> Optional[Tuple[LassoWord, Valuation]]:
    """
    A word and a valuation satisfying ``formula``, or None if it is
    unsatisfiable for every valuation.
    """
    _require_well_formed(formula)
    nba = remove_alternation(build_aba(color_transform(eliminate_boxes(formula))))
    witness = is_empty(nba)
    if witness is None:
        return None
    k = max(block_lengths(witness))
    diamonds, boxes = var_sets(formula)
    values = {x: 2 * k for x in diamonds}
    values.update({y: 0 for y in boxes})
    return strip_color(witness), Valuation(values)
