"""
Verification of Parametric Linear Dynamic Logic specifications.

Formulas are given inline with --formula or read from a file with
--formula-file. Valuations are written ``x=3,y=0``, lasso words
``{p}{} $ {p,q}`` and proposition lists ``a,b``.

Usage:
  pldl parse (--formula=<text> | --formula-file=<path>) [options]
  pldl negate (--formula=<text> | --formula-file=<path>) [options]
  pldl compile (--formula=<text> | --formula-file=<path>) [--nba] [--alpha=<values>] [options]
  pldl eval (--formula=<text> | --formula-file=<path>) --word=<lasso> --alpha=<values> [options]
  pldl mc (--formula=<text> | --formula-file=<path>) --system=<path> [--tighten] [options]
  pldl realize (--formula=<text> | --formula-file=<path>) --inputs=<props> --outputs=<props> [--alpha=<values>] [options]
  pldl sat (--formula=<text> | --formula-file=<path>) [options]
  pldl selftest [--seed=<n>] [--cases=<n>] [--suite=<name>...] [options]
  pldl -h | --help
  pldl --version

Options:
  -h --help               Show this screen.
  --version               Show the version.
  --format=<fmt>          Output format: text, dot or json-lines [default: text].
  -d, --debug             Print the debug output of the pipeline.
  --nba                   Compile to a nondeterministic automaton.
  --tighten               Lower the reported valuation by binary search.
  --max-nba-states=<n>    Cap for alternation removal.
  --max-det-states=<n>    Cap for determinization.
  --seed=<n>              Seed of the randomized suites.
  --cases=<n>             Number of cases per suite.
  --suite=<name>          Only run the given suites.
"""
import json
import sys
from contextlib import contextmanager
from pathlib import Path

from docopt import docopt, DocoptExit  # type: ignore[import]

import pldl
from pldl import settings
from pldl import selftest
from pldl.api.exceptions import _PLDLError, FormulaSyntaxError, NotWellFormed
from pldl.automata import export
from pldl.common import split_names
from pldl.formula.printer import pretty_print
from pldl.model_checking.system import parse_ts
from pldl.semantics.word import Valuation, parse_word

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2

_FORMATS = ('text', 'dot', 'json-lines')
_CAP_OPTIONS = (
    ('--max-nba-states', 'max_nba_states'),
    ('--max-det-states', 'max_det_states'),
)


class _Report:
    """Writes ``key: value`` lines, or one JSON object per record."""

    def __init__(self, fmt, stream):
        self.format = fmt
        self.stream = stream
        self._record = {}

    def add(self, key, value):
        if self.format == 'json-lines':
            self._record[key] = value
        else:
            if isinstance(value, bool):
                value = 'true' if value else 'false'
            print('%s: %s' % (key, value), file=self.stream)

    def block(self, key, text_version, dot_version=None):
        if self.format == 'json-lines':
            self._record[key] = text_version
        elif self.format == 'dot' and dot_version is not None:
            print(dot_version, file=self.stream)
        else:
            print(text_version, file=self.stream)

    def flush(self):
        if self._record:
            print(json.dumps(self._record, sort_keys=True), file=self.stream)
        self._record = {}


def _formula_spec(arguments):
    if arguments['--formula-file']:
        return pldl.Specification(path=arguments['--formula-file'])
    return pldl.Specification(arguments['--formula'])


def _parse(spec, arguments, report):
    diamonds, boxes = spec.var_sets
    report.add('formula', str(spec))
    report.add('size', spec.size)
    report.add('diamond-variables', ','.join(sorted(diamonds)))
    report.add('box-variables', ','.join(sorted(boxes)))
    report.add('well-formed', spec.is_well_formed())
    if not spec.is_well_formed():
        report.flush()
        raise NotWellFormed('variables %s bound both diamonds and boxes'
                            % ', '.join(sorted(diamonds & boxes)))
    return EXIT_OK


def _negate(spec, arguments, report):
    report.add('formula', str(spec.negate()))
    return EXIT_OK


def _alpha(arguments):
    text = arguments['--alpha']
    return None if text is None else Valuation.parse(text)


def _compile(spec, arguments, report):
    aba = spec.compile(_alpha(arguments))
    report.add('aba-states', len(aba))
    if arguments['--nba']:
        nba = spec.compile_nba(_alpha(arguments))
        report.add('nba-states', len(nba))
        report.block('nba', export.nba_to_text(nba), export.nba_to_dot(nba))
    else:
        report.block('aba', export.aba_to_text(aba), export.aba_to_dot(aba))
    return EXIT_OK


def _eval(spec, arguments, report):
    result = spec.evaluate(parse_word(arguments['--word']), _alpha(arguments))
    report.add('result', result)
    return EXIT_OK if result else EXIT_FALSE


def _mc(spec, arguments, report):
    system = parse_ts(Path(arguments['--system']).read_text())
    result = spec.model_check(system)
    if result.holds:
        valuation = result.valuation
        if arguments['--tighten']:
            valuation = spec.tighten(system, valuation)
        report.add('verdict', 'satisfied')
        report.add('alpha', str(valuation))
        return EXIT_OK
    prefix, loop, trace = result.counterexample()
    report.add('verdict', 'violated')
    report.add('counterexample', '%s $ %s' % (' '.join(prefix), ' '.join(loop)))
    report.add('trace', str(trace))
    return EXIT_FALSE


def _realize(spec, arguments, report):
    inputs = split_names(arguments['--inputs'])
    outputs = split_names(arguments['--outputs'])
    result = spec.realize(inputs, outputs, _alpha(arguments))
    if not result.holds:
        report.add('verdict', 'unrealizable')
        return EXIT_FALSE
    report.add('verdict', 'realizable')
    report.add('alpha', str(result.valuation))
    report.add('states', len(result.strategy))
    report.block('strategy', export.transducer_to_text(result.strategy),
                 export.transducer_to_dot(result.strategy))
    return EXIT_OK


def _sat(spec, arguments, report):
    result = spec.satisfiable()
    report.add('satisfiable', result is not None)
    if result is None:
        return EXIT_FALSE
    word, valuation = result
    report.add('word', str(word))
    report.add('alpha', str(valuation))
    return EXIT_OK


def _selftest(arguments, report):
    seed = int(arguments['--seed']) if arguments['--seed'] else None
    cases = int(arguments['--cases']) if arguments['--cases'] else None
    code = EXIT_OK
    for result in selftest.run_suites(arguments['--suite'] or None, seed, cases):
        report.add('suite', result.name)
        report.add('cases', result.cases)
        report.add('failures', len(result.failures))
        for failure in result.failures[:5]:
            report.add('failed', failure)
        report.flush()
        if not result.ok:
            code = EXIT_FALSE
    return code


_COMMANDS = {
    'parse': _parse,
    'negate': _negate,
    'compile': _compile,
    'eval': _eval,
    'mc': _mc,
    'realize': _realize,
    'sat': _sat,
}


def _describe(error):
    if isinstance(error, FormulaSyntaxError):
        return 'syntax error: %s' % error
    if isinstance(error, NotWellFormed):
        return 'not well-formed: %s' % error
    return '%s: %s' % (error.__class__.__name__, error)


@contextmanager
def _caps(arguments):
    """Applies the cap options to :mod:`pldl.settings` for one run."""
    overrides = {name: int(arguments[option]) for option, name in _CAP_OPTIONS
                 if arguments[option]}
    previous = {name: getattr(settings, name) for name in overrides}
    for name, value in overrides.items():
        setattr(settings, name, value)
    try:
        yield
    finally:
        for name, value in previous.items():
            setattr(settings, name, value)


def run(argv, stdout=None, stderr=None) -> int:
    """Runs the command line ``argv`` (without the program name)."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        arguments = docopt(__doc__, argv=argv, version=pldl.__version__)
    except DocoptExit as e:
        print(e, file=stderr)
        return EXIT_ERROR
    if arguments['--format'] not in _FORMATS:
        print('unknown format %r' % arguments['--format'], file=stderr)
        return EXIT_ERROR
    if arguments['--debug']:
        pldl.set_debug_function()

    report = _Report(arguments['--format'], stdout)
    try:
        with _caps(arguments):
            if arguments['selftest']:
                return _selftest(arguments, report)
            spec = _formula_spec(arguments)
            command = next(name for name in _COMMANDS if arguments[name])
            code = _COMMANDS[command](spec, arguments, report)
        report.flush()
        return code
    except _PLDLError as e:
        print(_describe(e), file=stderr)
        return EXIT_ERROR
    except (OSError, ValueError) as e:
        print('error: %s' % e, file=stderr)
        return EXIT_ERROR


def main():
    # The regex automata and the Safra trees are built recursively.
    sys.setrecursionlimit(3000)
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
