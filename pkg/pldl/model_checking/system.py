"""
Labeled transition systems and their line based file format::

    # a request is answered in the next step
    state idle init {}
    state busy {req}
    edge idle busy
    edge busy idle

Every state needs at least one successor and exactly one state is marked
``init``.
"""
from typing import Dict, FrozenSet, List, Optional, Tuple

from pldl.api.exceptions import FormulaSyntaxError, SystemFormatError
from pldl.formula.parser import check_identifier
from pldl.formula.tokenize import TokenStream, NAME, NUMBER, describe
from pldl.semantics.word import LassoWord


class TransitionSystem:
    def __init__(self, states: List[str], initial: str,
                 edges: Dict[str, List[str]], labels: Dict[str, FrozenSet[str]]):
        self.states = list(states)
        self.initial = initial
        self.edges = edges
        self.labels = labels
        self._validate()

    def _validate(self):
        known = set(self.states)
        if self.initial not in known:
            raise SystemFormatError('unknown initial state %r' % self.initial)
        for state in self.states:
            if not self.edges.get(state):
                raise SystemFormatError('state %r has no successor (non-total)' % state)
            for target in self.edges[state]:
                if target not in known:
                    raise SystemFormatError('edge to unknown state %r' % target)

    def successors(self, state: str) -> List[str]:
        return self.edges[state]

    def label(self, state: str) -> FrozenSet[str]:
        return self.labels[state]

    def propositions(self) -> FrozenSet[str]:
        return frozenset().union(*self.labels.values())

    def __len__(self):
        return len(self.states)

    def trace(self, prefix: List[str], loop: List[str]) -> LassoWord:
        """The trace of the state lasso ``prefix · loop^ω``."""
        return LassoWord([self.labels[s] for s in prefix], [self.labels[s] for s in loop])

    def is_path(self, states: List[str]) -> bool:
        return all(b in self.edges[a] for a, b in zip(states, states[1:]))

    def to_text(self) -> str:
        lines = []
        for state in self.states:
            lines.append('state %s%s {%s}' % (
                state, ' init' if state == self.initial else '',
                ','.join(sorted(self.labels[state]))))
        for state in self.states:
            for target in self.edges[state]:
                lines.append('edge %s %s' % (state, target))
        return '\n'.join(lines)

    def __repr__(self):
        return '<%s: %s states>' % (self.__class__.__name__, len(self))


def _state_name(token):
    if token.kind not in (NAME, NUMBER):
        raise token.error('expected a state name, found %s' % describe(token))
    return token.value


def _parse_line(text: str) -> Optional[Tuple]:
    stream = TokenStream(text)
    if stream.at_end():
        return None
    keyword = stream.next()
    if keyword.value == 'state':
        name = _state_name(stream.next())
        initial = stream.accept('init')
        stream.expect('{')
        props = []
        if not stream.accept('}'):
            while True:
                props.append(check_identifier(stream.next()))
                if stream.accept('}'):
                    break
                stream.expect(',')
        stream.expect_end()
        return 'state', name, initial, frozenset(props)
    if keyword.value == 'edge':
        source = _state_name(stream.next())
        target = _state_name(stream.next())
        stream.expect_end()
        return 'edge', source, target
    raise keyword.error('expected "state" or "edge", found %s' % describe(keyword))


def parse_ts(text: str) -> TransitionSystem:
    """
    Parses the transition system format.

    :raises SystemFormatError: for malformed lines, duplicate or missing
        initial states, unknown states and states without successors.
    """
    states: List[str] = []
    labels: Dict[str, FrozenSet[str]] = {}
    edges: Dict[str, List[str]] = {}
    initial = None
    for number, line in enumerate(text.splitlines(), 1):
        try:
            parsed = _parse_line(line)
        except FormulaSyntaxError as e:
            raise SystemFormatError(e.get_message(), number)
        if parsed is None:
            continue
        if parsed[0] == 'state':
            _, name, is_initial, props = parsed
            if name in labels:
                raise SystemFormatError('duplicate state %r' % name, number)
            states.append(name)
            labels[name] = props
            edges[name] = []
            if is_initial:
                if initial is not None:
                    raise SystemFormatError('duplicate initial state %r' % name, number)
                initial = name
        else:
            _, source, target = parsed
            if source not in labels:
                raise SystemFormatError('edge from unknown state %r' % source, number)
            if target not in labels:
                raise SystemFormatError('edge to unknown state %r' % target, number)
            if target not in edges[source]:
                edges[source].append(target)
    if initial is None:
        raise SystemFormatError('missing initial state')
    return TransitionSystem(states, initial, edges, labels)
