"""
Randomized suites that check the automata constructions against the
reference semantics. ``pldl selftest`` and the test suite run them all.

Every suite gets a :class:`random.Random` and a number of cases and returns
the descriptions of the failed cases. A failing case is reproducible with
the seed it was reported with.
"""
import random
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence

from pldl import debug
from pldl import settings
from pldl.automata.aba import build_aba
from pldl.automata.nba import NBA, remove_alternation, membership
from pldl.formula import tree
from pldl.formula.parser import parse
from pldl.formula.transform import negate, size, var_sets, eliminate_boxes, color_transform, \
    bounds
from pldl.model_checking.checker import model_check
from pldl.model_checking.colored import ColoredBuchiGraph, pumpable_fair_path, \
    naive_pumpable_fair_path, pump
from pldl.model_checking.system import TransitionSystem
from pldl.semantics.oracle import evaluate
from pldl.semantics.word import LassoWord, Valuation, random_spaced_coloring, \
    random_bounded_coloring, is_k_bounded
from pldl.synthesis.determinize import determinize
from pldl.synthesis.game import ParityGame, INPUT, OUTPUT, solve_parity, brute_force_winner
from pldl.synthesis.realize import realize, realize_at

PROPS = ('p', 'q', 'r')


# Random generators

def random_letter(rng: random.Random, props: Sequence[str]) -> frozenset:
    return frozenset(p for p in props if rng.random() < 0.5)


def random_lasso(rng: random.Random, props: Sequence[str], max_length: int = 8) -> LassoWord:
    loop_length = rng.randint(1, max_length)
    prefix_length = rng.randint(0, max_length - loop_length)
    return LassoWord([random_letter(rng, props) for _ in range(prefix_length)],
                     [random_letter(rng, props) for _ in range(loop_length)])


def random_prop(rng: random.Random, props: Sequence[str], depth: int = 1) -> tree.PropFormula:
    choice = rng.random()
    if depth <= 0 or choice < 0.5:
        return tree.TT if rng.random() < 0.2 else tree.PVar(rng.choice(props))
    if choice < 0.7:
        return tree.prop_not(random_prop(rng, props, depth - 1))
    cls = tree.PAnd if choice < 0.85 else tree.POr
    return cls(random_prop(rng, props, depth - 1), random_prop(rng, props, depth - 1))


class FormulaGenerator:
    """
    Random formulas in negation normal form. ``diamond_bounds`` and
    ``box_bounds`` are the bounds the respective operators may carry.
    """
    def __init__(self, rng: random.Random, props: Sequence[str] = PROPS,
                 diamond_bounds: Sequence[tree.Bound] = (None,),
                 box_bounds: Sequence[tree.Bound] = (None,), tests: bool = True):
        self.rng = rng
        self.props = props
        self.diamond_bounds = diamond_bounds
        self.box_bounds = box_bounds
        self.tests = tests

    def formula(self, depth: int = 3) -> tree.Formula:
        rng = self.rng
        choice = rng.random()
        if depth <= 0 or choice < 0.25:
            cls = tree.Atom if rng.random() < 0.6 else tree.NegAtom
            return cls(rng.choice(self.props))
        if choice < 0.45:
            cls = tree.And if rng.random() < 0.5 else tree.Or
            return cls(self.formula(depth - 1), self.formula(depth - 1))
        regex = self.regex(2, depth - 1)
        if choice < 0.75:
            return tree.Diamond(regex, self.formula(depth - 1), rng.choice(self.diamond_bounds))
        return tree.Box(regex, self.formula(depth - 1), rng.choice(self.box_bounds))

    def regex(self, depth: int, formula_depth: int) -> tree.Regex:
        rng = self.rng
        choice = rng.random()
        if depth <= 0 or choice < 0.35:
            if self.tests and formula_depth > 0 and rng.random() < 0.2:
                return tree.Test(self.formula(min(formula_depth - 1, 1)))
            return tree.Prop(random_prop(rng, self.props))
        if choice < 0.55:
            return tree.Star(self.regex(depth - 1, formula_depth))
        cls = tree.Seq if choice < 0.8 else tree.Choice
        return cls(self.regex(depth - 1, formula_depth), self.regex(depth - 1, formula_depth))

    def bounded(self, max_size: int, depth: int = 3) -> tree.Formula:
        while True:
            formula = self.formula(depth)
            if size(formula) <= max_size:
                return formula


def random_valuation(rng: random.Random, names: Iterable[str], maximum: int = 4) -> Valuation:
    return Valuation({name: rng.randint(0, maximum) for name in names})


def random_colored_graph(rng: random.Random, max_vertices: int = 8) -> ColoredBuchiGraph:
    n = rng.randint(1, max_vertices)
    vertices = list(range(n))
    edges = []
    for v in vertices:
        for _ in range(rng.randint(1, 3)):
            edges.append((v, rng.randrange(n)))
    colored = [v for v in vertices if rng.random() < 0.5]
    fair = [v for v in vertices if rng.random() < 0.4]
    return ColoredBuchiGraph.from_edges(vertices, edges, 0, colored, fair)


def random_game(rng: random.Random, max_vertices: int = 8) -> ParityGame:
    n = rng.randint(1, max_vertices)
    owners = {v: rng.choice((INPUT, OUTPUT)) for v in range(n)}
    priorities = {v: rng.randint(0, 4) for v in range(n)}
    edges = [(v, rng.randrange(n)) for v in range(n) for _ in range(rng.randint(1, 2))]
    return ParityGame.from_data(owners, priorities, edges, initial=0)


def random_nba(rng: random.Random, props: Sequence[str] = ('p',), max_states: int = 4) -> NBA:
    n = rng.randint(1, max_states)
    edges = []
    for state in range(n):
        for _ in range(rng.randint(1, 3)):
            guard = random_prop(rng, props, 1)
            edges.append((state, guard, rng.randrange(n)))
    accepting = [s for s in range(n) if rng.random() < 0.4]
    return NBA.from_transitions(0, accepting, props, edges)


def random_system(rng: random.Random, props: Sequence[str] = ('p', 'q'),
                  max_states: int = 4) -> TransitionSystem:
    n = rng.randint(1, max_states)
    states = ['s%s' % i for i in range(n)]
    edges = {s: sorted({rng.choice(states) for _ in range(rng.randint(1, 2))}) for s in states}
    labels = {s: random_letter(rng, props) for s in states}
    return TransitionSystem(states, states[0], edges, labels)


def _colored(word: LassoWord, rng) -> LassoWord:
    return word.map_letters(lambda letter: letter | {tree.COLOR_PROP}
                            if rng.random() < 0.5 else letter)


# Suites

class SuiteResult(NamedTuple):
    name: str
    cases: int
    failures: List[str]

    @property
    def ok(self):
        return not self.failures


SUITES: Dict[str, Callable] = {}
DEFAULT_CASES: Dict[str, int] = {}


def _suite(name, cases):
    def decorator(func):
        SUITES[name] = func
        DEFAULT_CASES[name] = cases
        return func
    return decorator


@_suite('oracle', 500)
def check_oracle_equivalence(rng, cases) -> List[str]:
    """NBA membership against the reference semantics on LDL_cp formulas."""
    generator = FormulaGenerator(rng, PROPS[:rng.randint(1, 3)], (None, tree.CP), (None, tree.CP))
    failures = []
    for _ in range(cases):
        formula = generator.bounded(20)
        word = random_lasso(rng, generator.props)
        if tree.CP in bounds(formula):
            word = _colored(word, rng)
        aba = build_aba(formula)
        limit = 4 * size(formula) if not bounds(formula) else 24 * size(formula)
        if len(aba) > limit:
            failures.append('%s: %s states' % (formula, len(aba)))
        expected = evaluate(formula, word)
        if membership(remove_alternation(aba), word) != expected:
            failures.append('%s on %s: expected %s' % (formula, word, expected))
    return failures


def _pldl_generator(rng):
    return FormulaGenerator(rng, PROPS[:2], (None, tree.Var('x'), tree.Var('z')),
                            (None, tree.Var('y')))


@_suite('negation', 300)
def check_negation(rng, cases) -> List[str]:
    generator = _pldl_generator(rng)
    failures = []
    for _ in range(cases):
        formula = generator.formula()
        word = random_lasso(rng, generator.props)
        alpha = random_valuation(rng, ('x', 'y', 'z'))
        negated = negate(formula)
        if size(negated) != size(formula):
            failures.append('%s: size changed' % formula)
        if evaluate(formula, word, alpha) == evaluate(negated, word, alpha):
            failures.append('%s on %s with %s' % (formula, word, alpha))
    return failures


@_suite('monotonicity', 300)
def check_monotonicity(rng, cases) -> List[str]:
    generator = _pldl_generator(rng)
    failures = []
    for _ in range(cases):
        formula = generator.formula()
        word = random_lasso(rng, generator.props)
        alpha = random_valuation(rng, ('x', 'y', 'z'))
        diamonds, boxes = var_sets(formula)
        beta = alpha.updated({x: alpha[x] + rng.randint(0, 3) for x in diamonds})
        beta = beta.updated({y: rng.randint(0, alpha[y]) for y in boxes})
        if evaluate(formula, word, alpha) and not evaluate(formula, word, beta):
            failures.append('%s on %s: %s to %s' % (formula, word, alpha, beta))
    return failures


@_suite('box-elimination', 300)
def check_box_elimination(rng, cases) -> List[str]:
    generator = _pldl_generator(rng)
    failures = []
    for _ in range(cases):
        formula = generator.formula()
        word = random_lasso(rng, generator.props)
        alpha = random_valuation(rng, ('x', 'y', 'z'))
        zeroed = alpha.updated({y: 0 for y in var_sets(formula).boxes})
        eliminated = evaluate(eliminate_boxes(formula), word, alpha)
        if eliminated != evaluate(formula, word, zeroed):
            failures.append('%s on %s with %s' % (formula, word, alpha))
        if evaluate(formula, word, alpha) and not eliminated:
            failures.append('%s on %s with %s: lost' % (formula, word, alpha))
    return failures


@_suite('coloring', 200)
def check_coloring(rng, cases) -> List[str]:
    """Spaced and bounded colorings against the relativized formula."""
    generator = FormulaGenerator(rng, PROPS[:2], (None, tree.Var('x'), tree.Var('z')), (None,))
    failures = []
    for _ in range(cases):
        formula = generator.formula()
        colored_formula = color_transform(formula)
        word = random_lasso(rng, generator.props)
        alpha = random_valuation(rng, ('x', 'z'))
        k = max(1, alpha.max_value())
        if evaluate(formula, word, alpha):
            for _ in range(3):
                spaced = random_spaced_coloring(word, k, rng)
                if not evaluate(colored_formula, spaced):
                    failures.append('%s on %s: spaced %s' % (formula, word, spaced))
        for _ in range(3):
            bounded = random_bounded_coloring(word, k, rng)
            doubled = Valuation({'x': 2 * k, 'z': 2 * k})
            if evaluate(colored_formula, bounded) and not evaluate(formula, word, doubled):
                failures.append('%s on %s: bounded %s' % (formula, word, bounded))
    return failures


@_suite('pumpable', 200)
def check_pumpable(rng, cases) -> List[str]:
    failures = []
    for _ in range(cases):
        g = random_colored_graph(rng)
        path = pumpable_fair_path(g)
        if (path is not None) != naive_pumpable_fair_path(g):
            failures.append('%s: %s' % (sorted(g.graph.edges), path))
        elif path is not None:
            prefix, loop = pump(g, path[0], path[1], 3)
            if not g.is_lasso(prefix, loop):
                failures.append('%s: pumped %s $ %s' % (sorted(g.graph.edges), prefix, loop))
    return failures


def _random_pldl_for_systems(rng):
    generator = FormulaGenerator(rng, ('p', 'q'), (None, tree.Var('x')), (None, tree.Var('y')),
                                 tests=False)
    return generator.bounded(10, depth=2)


def _system_lassos(rng, ts, count):
    for _ in range(count):
        path = [ts.initial]
        for _ in range(rng.randint(1, 6)):
            path.append(rng.choice(ts.successors(path[-1])))
        seen = {}
        while path[-1] not in seen:
            seen[path[-1]] = len(path) - 1
            path.append(rng.choice(ts.successors(path[-1])))
        start = seen[path[-1]]
        yield path[:start], path[start:-1]


@_suite('model-checking', 100)
def check_model_checking(rng, cases) -> List[str]:
    """Verdicts against the semantics on sampled traces of random systems."""
    failures = []
    for _ in range(cases):
        ts = random_system(rng)
        formula = _random_pldl_for_systems(rng)
        result = model_check(ts, formula)
        if result.holds:
            alpha = result.valuation
            for prefix, loop in _system_lassos(rng, ts, 5):
                if not evaluate(formula, ts.trace(prefix, loop), alpha):
                    failures.append('%s: trace %s $ %s refutes %s' % (formula, prefix, loop, alpha))
        else:
            # A 3-spaced counterexample refutes every valuation up to 3.
            prefix, loop, trace = result.counterexample(3)
            diamonds, boxes = var_sets(formula)
            alpha = Valuation({x: 3 for x in diamonds})
            alpha = alpha.updated({y: 0 for y in boxes})
            if not ts.is_path(prefix + loop + loop[:1]) or evaluate(formula, trace, alpha):
                failures.append('%s: counterexample %s $ %s' % (formula, prefix, loop))
    return failures


@_suite('determinization', 100)
def check_determinization(rng, cases) -> List[str]:
    failures = []
    for _ in range(cases):
        nba = random_nba(rng)
        dpa = determinize(nba)
        for _ in range(10):
            word = random_lasso(rng, ('p',), 6)
            if dpa.accepts(word) != membership(nba, word):
                failures.append('%s on %s' % (nba, word))
    return failures


@_suite('parity', 200)
def check_parity_games(rng, cases) -> List[str]:
    failures = []
    for _ in range(cases):
        game = random_game(rng)
        solution = solve_parity(game)
        expected = brute_force_winner(game)
        for vertex, winner in expected.items():
            if solution.winner(vertex) != winner:
                failures.append('%s: vertex %s' % (sorted(game.graph.edges), vertex))
                break
        strategy = solution.strategy(OUTPUT)
        for vertex, target in strategy.items():
            if not game.graph.has_edge(vertex, target) or solution.winner(target) != OUTPUT:
                failures.append('%s: move %s -> %s' % (sorted(game.graph.edges), vertex, target))
    return failures


REALIZABILITY_EXAMPLES = [
    # formula, inputs, outputs, realizable
    ('<tt*>{<=x} resp', (), ('resp',), True),
    ('[tt*](req -> <tt*>{<=x} resp)', ('req',), ('resp',), True),
    ('[tt*]<tt*>{<=x} q', ('q',), (), False),
]


def play(transducer, formula, valuation, rng, plays: int = 100, length: int = 50) -> List[str]:
    """Random input sequences against ``transducer``; returns the losing ones."""
    failures = []
    inputs = sorted(transducer.inputs)
    for _ in range(plays):
        loop_length = rng.randint(1, 10)
        prefix = [random_letter(rng, inputs) for _ in range(rng.randint(0, length - loop_length))]
        word = LassoWord(prefix, [random_letter(rng, inputs) for _ in range(loop_length)])
        if not evaluate(formula, transducer.outcome(word), valuation):
            failures.append('%s loses on %s' % (formula, word))
    return failures


@_suite('realizability', 100)
def check_realizability(rng, cases) -> List[str]:
    failures = []
    for text, inputs, outputs, expected in REALIZABILITY_EXAMPLES:
        formula = parse(text)
        result = realize(formula, inputs, outputs)
        if result.holds != expected:
            failures.append('%s: realizable is %s' % (text, result.holds))
            continue
        if not result.holds:
            continue
        n = len(result.colored_strategy)
        if any(value > 2 * n + 2 for value in result.valuation.values()):
            failures.append('%s: valuation %s' % (text, result.valuation))
        failures += play(result.strategy, formula, result.valuation, rng, cases)
        for _ in range(10):
            word = random_lasso(rng, sorted(inputs))
            outcome = result.colored_strategy.outcome(word)
            if not is_k_bounded(outcome, n + 1):
                failures.append('%s: colored outcome %s' % (text, outcome))
    fixed = realize_at(parse('<tt*>{<=x} resp'), (), ('resp',), Valuation({'x': 0}))
    if not fixed.holds:
        failures.append('<tt*>{<=x} resp not realizable with x=0')
    return failures


def run_suites(names: Optional[Iterable[str]] = None, seed: Optional[int] = None,
               cases: Optional[int] = None) -> List[SuiteResult]:
    """
    Runs the suites ``names`` (all by default). ``cases`` overrides the
    default number of cases of every suite.
    """
    if seed is None:
        seed = settings.default_seed
    results = []
    for name in names or SUITES:
        if name not in SUITES:
            raise KeyError('unknown suite %r' % name)
        rng = random.Random('%s-%s' % (seed, name))
        count = DEFAULT_CASES[name] if cases is None else cases
        with debug.increase_indent_cm('suite %s' % name):
            failures = SUITES[name](rng, count)
        debug.speed(name)
        results.append(SuiteResult(name, count, failures))
    return results
