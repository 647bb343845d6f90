"""
Small helpers shared by the automata and the games.
"""
from itertools import chain, combinations
from typing import FrozenSet, Iterable, List


def all_letters(alphabet: Iterable[str]) -> List[FrozenSet[str]]:
    """
    Every subset of ``alphabet``, ordered by size and then lexicographically.

    >>> [sorted(a) for a in all_letters({'q', 'p'})]
    [[], ['p'], ['q'], ['p', 'q']]
    """
    props = sorted(alphabet)
    return [frozenset(c) for c in chain.from_iterable(
        combinations(props, n) for n in range(len(props) + 1)
    )]


def sort_key(obj):
    """
    A total order on the heterogeneous states of the automata (strings,
    numbers, tuples and frozensets of those), independent of hashing.
    """
    if obj is None:
        return (0,)
    if isinstance(obj, (int, float)):
        return (1, obj)
    if isinstance(obj, str):
        return (2, obj)
    if isinstance(obj, (frozenset, set)):
        return (3, tuple(sorted(sort_key(x) for x in obj)))
    if isinstance(obj, tuple):
        return (4, tuple(sort_key(x) for x in obj))
    return (5, str(obj))


def format_set(props: Iterable[str]) -> str:
    return '{%s}' % ','.join(sorted(props))


def split_names(text: str) -> FrozenSet[str]:
    """
    Parses the comma separated lists of the command line.

    >>> sorted(split_names('a, b,,c'))
    ['a', 'b', 'c']
    """
    return frozenset(name.strip() for name in text.split(',') if name.strip())
