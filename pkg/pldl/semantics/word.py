"""
Ultimately periodic words, valuations and colorings.

A :class:`LassoWord` ``u v^ω`` has ``|u| + |v|`` canonical positions. Every
position ``n >= |u|`` is folded onto ``|u| + (n - |u|) mod |v|``; all
semantic questions only depend on the canonical position.

>>> w = parse_word('{p}{} $ {p,q}')
>>> w.canonical(7), str(w)
(2, '{p}{} $ {p,q}')
"""
import math
from collections.abc import Mapping
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from pldl.api.exceptions import UnboundVariable
from pldl.formula.tree import COLOR_PROP
from pldl.formula.tokenize import TokenStream, NUMBER, describe
from pldl.formula.parser import check_identifier

Letter = FrozenSet[str]


def make_letter(props: Iterable[str]) -> Letter:
    return frozenset(props)


def format_letter(letter: Letter) -> str:
    return '{%s}' % ','.join(sorted(letter))


class LassoWord:
    """The ω-word ``prefix · loop^ω``."""

    def __init__(self, prefix: Sequence[Iterable[str]], loop: Sequence[Iterable[str]]):
        self.prefix = tuple(make_letter(letter) for letter in prefix)
        self.loop = tuple(make_letter(letter) for letter in loop)
        if not self.loop:
            raise ValueError('the loop of a lasso word must not be empty')

    @property
    def period_start(self) -> int:
        return len(self.prefix)

    def __len__(self):
        """The number of canonical positions."""
        return len(self.prefix) + len(self.loop)

    def canonical(self, n: int) -> int:
        start = len(self.prefix)
        if n < start:
            return n
        return start + (n - start) % len(self.loop)

    def letter(self, n: int) -> Letter:
        n = self.canonical(n)
        start = len(self.prefix)
        if n < start:
            return self.prefix[n]
        return self.loop[n - start]

    def successor(self, n: int) -> int:
        """The canonical successor of the canonical position ``n``."""
        n += 1
        if n == len(self):
            return len(self.prefix)
        return n

    def positions(self) -> range:
        return range(len(self))

    def unroll(self, length: int) -> List[Letter]:
        return [self.letter(i) for i in range(length)]

    def alphabet(self) -> FrozenSet[str]:
        return frozenset().union(*self.prefix, *self.loop)

    def map_letters(self, function) -> 'LassoWord':
        return LassoWord([function(a) for a in self.prefix], [function(a) for a in self.loop])

    def __eq__(self, other):
        return isinstance(other, LassoWord) \
            and self.prefix == other.prefix and self.loop == other.loop

    def __hash__(self):
        return hash((self.prefix, self.loop))

    def __str__(self):
        return '%s $ %s' % (
            ''.join(format_letter(a) for a in self.prefix),
            ''.join(format_letter(a) for a in self.loop),
        )

    def __repr__(self):
        return '<%s: %s>' % (self.__class__.__name__, self)


def _parse_letters(stream, stop):
    letters = []
    while not stream.at_end() and not stream.peek(stop):
        stream.expect('{')
        props = []
        if not stream.accept('}'):
            while True:
                props.append(check_identifier(stream.next()))
                if stream.accept('}'):
                    break
                stream.expect(',')
        letters.append(frozenset(props))
    return letters


def parse_word(text: str) -> LassoWord:
    """
    Parses the lasso word format ``SETS $ SETS``, e.g. ``{p}{} $ {p,q}``.
    The prefix may be empty, the loop may not.
    """
    stream = TokenStream(text)
    prefix = _parse_letters(stream, '$')
    stream.expect('$')
    start = stream.current
    loop = _parse_letters(stream, '$')
    stream.expect_end()
    if not loop:
        raise start.error('the loop of a lasso word must not be empty')
    return LassoWord(prefix, loop)


class Valuation(Mapping):
    """
    A map from variables to natural numbers. Variables without a value fall
    back to ``default``; without a default, looking them up raises
    :class:`pldl.api.exceptions.UnboundVariable`.

    >>> alpha = Valuation.parse('x=3,y=0')
    >>> alpha['x'], str(alpha)
    (3, 'x=3,y=0')
    """
    def __init__(self, values=None, default: Optional[int] = None):
        self._values = dict(values or {})
        for name, value in self._values.items():
            if not isinstance(value, int) or value < 0:
                raise ValueError('value of %r must be a natural number, not %r' % (name, value))
        if default is not None and default < 0:
            raise ValueError('the default value must be a natural number')
        self.default = default

    def __getitem__(self, name):
        try:
            return self._values[name]
        except KeyError:
            if self.default is None:
                raise UnboundVariable(name)
            return self.default

    def __contains__(self, name):
        return name in self._values or self.default is not None

    def __iter__(self):
        return iter(sorted(self._values))

    def __len__(self):
        return len(self._values)

    def __eq__(self, other):
        if not isinstance(other, Valuation):
            return NotImplemented
        return self._values == other._values and self.default == other.default

    def __hash__(self):
        return hash((frozenset(self._values.items()), self.default))

    def updated(self, values) -> 'Valuation':
        new = dict(self._values)
        new.update(values)
        return Valuation(new, self.default)

    def restricted(self, names) -> 'Valuation':
        return Valuation({name: self[name] for name in names})

    def max_value(self) -> int:
        return max(self._values.values(), default=0)

    def covers(self, names) -> bool:
        return all(name in self for name in names)

    @classmethod
    def parse(cls, text: str) -> 'Valuation':
        """Parses comma separated assignments like ``x=3,y=0``."""
        stream = TokenStream(text)
        values = {}
        while not stream.at_end():
            name = check_identifier(stream.next())
            stream.expect('=')
            token = stream.next()
            if token.kind != NUMBER or not token.value.isdigit():
                raise token.error('expected a natural number, found %s' % describe(token))
            values[name] = int(token.value)
            if not stream.at_end():
                stream.expect(',')
        return cls(values)

    def __str__(self):
        return ','.join('%s=%s' % (name, self._values[name]) for name in sorted(self._values))

    def __repr__(self):
        return '<%s: %s>' % (self.__class__.__name__, self)


# Colorings

def is_colored(letter: Letter) -> bool:
    return COLOR_PROP in letter


def strip_color(word: LassoWord) -> LassoWord:
    return word.map_letters(lambda letter: letter - {COLOR_PROP})


def changepoints(word: LassoWord, horizon: Optional[int] = None) -> List[int]:
    """
    The changepoints below ``horizon`` (by default ``|u| + 2|v|``): position
    0 and every position whose color differs from its predecessor's.
    """
    if horizon is None:
        horizon = len(word.prefix) + 2 * len(word.loop)
    result = []
    previous = None
    for n in range(horizon):
        color = is_colored(word.letter(n))
        if n == 0 or color != previous:
            result.append(n)
        previous = color
    return result


def has_infinitely_many_changepoints(word: LassoWord) -> bool:
    colors = {is_colored(letter) for letter in word.loop}
    return len(colors) == 2


def blocks(word: LassoWord) -> List[Tuple[int, Optional[int]]]:
    """
    ``(start, length)`` of every block up to the point where the blocks
    start to repeat. An infinite last block has length None.

    >>> blocks(LassoWord([{COLOR_PROP}], [set()]))
    [(0, 1), (1, None)]
    """
    horizon = len(word.prefix) + 1 + 2 * len(word.loop)
    points = changepoints(word, horizon)
    periodic_end = len(word.prefix) + 1 + len(word.loop)
    result: List[Tuple[int, Optional[int]]] = []
    for start, end in zip(points, points[1:]):
        if start >= periodic_end:
            break
        result.append((start, end - start))
    if not has_infinitely_many_changepoints(word):
        result.append((points[-1], None))
    return result


def block_lengths(word: LassoWord) -> List[Optional[int]]:
    return [length for _, length in blocks(word)]


def is_k_spaced(word: LassoWord, k: int) -> bool:
    if not has_infinitely_many_changepoints(word):
        return False
    return all(length >= k for length in block_lengths(word))


def is_k_bounded(word: LassoWord, k: int) -> bool:
    if not has_infinitely_many_changepoints(word):
        return False
    return all(length <= k for length in block_lengths(word))


def _colorize(letters, colors):
    return [letter | {COLOR_PROP} if color else letter - {COLOR_PROP}
            for letter, color in zip(letters, colors)]


def uniform_coloring(word: LassoWord, k: int) -> LassoWord:
    """
    The coloring whose blocks all have length exactly ``k``, starting with
    the color proposition not holding at position 0.
    """
    assert k >= 1
    start = len(word.prefix)
    period = len(word.loop) * 2 * k // math.gcd(len(word.loop), 2 * k)
    letters = word.unroll(start + period)
    colors = [(n // k) % 2 == 1 for n in range(start + period)]
    colored = _colorize(letters, colors)
    return LassoWord(colored[:start], colored[start:])


def _split(total, parts, low, high, rng):
    """Random composition of ``total`` into ``parts`` numbers in [low, high]."""
    sizes = [low] * parts
    rest = total - low * parts
    assert 0 <= rest <= (high - low) * parts
    while rest:
        i = rng.randrange(parts)
        if sizes[i] < high:
            sizes[i] += 1
            rest -= 1
    return sizes


def _block_colors(sizes, last_color):
    """Alternating colors per block such that the last block has ``last_color``."""
    colors = []
    color = last_color if len(sizes) % 2 == 1 else not last_color
    for size in sizes:
        colors.extend([color] * size)
        color = not color
    return colors


def random_spaced_coloring(word: LassoWord, k: int, rng) -> LassoWord:
    """A random k-spaced coloring of ``word`` (every block has length >= k)."""
    assert k >= 1
    start = len(word.prefix)
    loop_length = len(word.loop)
    repeats = -(-2 * k // loop_length) + rng.randint(0, 1)
    total = repeats * loop_length
    pairs = rng.randint(1, total // (2 * k))
    loop_sizes = _split(total, 2 * pairs, k, total, rng)
    first_color = rng.random() < 0.5
    loop_colors = _block_colors(loop_sizes, not first_color)
    if start == 0:
        prefix_colors = []
    elif start < k:
        # Merges with the first loop block.
        prefix_colors = [first_color] * start
    else:
        count = rng.randint(1, start // k)
        prefix_colors = _block_colors(_split(start, count, k, start, rng), not first_color)
    letters = word.unroll(start + total)
    colored = _colorize(letters, prefix_colors + loop_colors)
    return LassoWord(colored[:start], colored[start:])


def random_bounded_coloring(word: LassoWord, k: int, rng) -> LassoWord:
    """A random k-bounded coloring of ``word`` (every block has length <= k)."""
    assert k >= 1
    start = len(word.prefix)
    loop_length = len(word.loop)
    repeats = 1 + rng.randint(0, 1)
    # The loop is split into an even number of blocks of length <= k.
    if (repeats * loop_length) % 2:
        repeats *= 2
    total = repeats * loop_length
    pairs = rng.randint(-(-total // (2 * k)), total // 2)
    loop_sizes = _split(total, 2 * pairs, 1, k, rng)
    first_color = rng.random() < 0.5
    loop_colors = _block_colors(loop_sizes, not first_color)
    if start == 0:
        prefix_colors = []
    else:
        count = rng.randint(-(-start // k), start)
        prefix_colors = _block_colors(_split(start, count, 1, k, rng), not first_color)
    letters = word.unroll(start + total)
    colored = _colorize(letters, prefix_colors + loop_colors)
    return LassoWord(colored[:start], colored[start:])
